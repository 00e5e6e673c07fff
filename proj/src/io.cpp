#include "twistroot/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef TWISTROOT_DEFAULT_DATA_DIR
#define TWISTROOT_DEFAULT_DATA_DIR "data"
#endif

namespace twistroot::io {

json to_json(const nielsen::DataSet& d) {
    json j;
    j["n"] = d.n;
    j["g_prime"] = d.gprime;
    j["sigma_boundary"] = json::array({d.boundary.sigma0, d.boundary.sigma1});
    json orbits = json::array();
    for (const auto& e : d.orbits) orbits.push_back(json::array({e.sigma, e.lambda}));
    j["orbits"] = std::move(orbits);
    return j;
}

nielsen::DataSet dataset_from_json(const json& j) {
    std::int64_t n = j.at("n").get<std::int64_t>();
    std::int64_t gprime = j.at("g_prime").get<std::int64_t>();
    const json& sb = j.at("sigma_boundary");
    if (!sb.is_array() || sb.size() != 2)
        throw std::invalid_argument("dataset: sigma_boundary must be a pair");
    auto boundary = nielsen::BoundaryPair::make(n, sb[0].get<std::int64_t>(),
                                                sb[1].get<std::int64_t>());
    std::vector<nielsen::OrbitEntry> orbits;
    for (const json& e : j.at("orbits")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("dataset: each orbit must be a [sigma, lambda] pair");
        orbits.push_back(
            nielsen::OrbitEntry{e[0].get<std::int64_t>(), e[1].get<std::int64_t>()});
    }
    return nielsen::DataSet::make(n, gprime, boundary, std::move(orbits));
}

json to_json(const enumeration::SpectrumReport& r) {
    json j;
    j["g"] = r.g;
    json entries = json::array();
    for (const auto& e : r.entries) {
        json row;
        row["n"] = e.n;
        row["count"] = e.count;
        entries.push_back(std::move(row));
    }
    j["spectrum"] = std::move(entries);
    return j;
}

json to_json(const symplectic::IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

symplectic::IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix: expected a nonempty array of rows");
    std::vector<std::vector<std::int64_t>> rows;
    for (const json& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix: each row must be an array");
        rows.push_back(r.get<std::vector<std::int64_t>>());
    }
    return symplectic::IntMatrix::from_rows(rows);
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

symplectic::IntMatrix load_matrix(const std::string& path) {
    return matrix_from_json(load_json_file(path));
}

json to_json(const twistword::CurveSystem& cs) {
    json j;
    j["gplus1"] = cs.gplus1;
    json curves = json::array();
    for (const auto& [name, cls] : cs.curves) {
        json row;
        row["name"] = name;
        row["class"] = cls;
        curves.push_back(std::move(row));
    }
    j["curves"] = std::move(curves);
    return j;
}

twistword::CurveSystem curve_system_from_json(const json& j) {
    twistword::CurveSystem cs;
    cs.gplus1 = j.at("gplus1").get<std::int64_t>();
    if (cs.gplus1 < 2) throw std::invalid_argument("curve table: gplus1 must be >= 2");
    for (const json& row : j.at("curves")) {
        std::string name = row.at("name").get<std::string>();
        auto cls = row.at("class").get<symplectic::HomologyClass>();
        if (static_cast<std::int64_t>(cls.size()) != 2 * cs.gplus1)
            throw std::invalid_argument("curve table: class '" + name + "' has wrong dimension");
        cs.curves.emplace_back(std::move(name), std::move(cls));
    }
    return cs;
}

twistword::CurveSystem load_curve_system(const std::string& path) {
    return curve_system_from_json(load_json_file(path));
}

std::string dataset_brief(const nielsen::DataSet& d) {
    std::ostringstream out;
    out << "[" << d.n << ", " << d.gprime << ", (" << d.boundary.sigma0 << ","
        << d.boundary.sigma1 << ")";
    for (std::size_t i = 0; i < d.orbits.size(); ++i)
        out << (i == 0 ? "; " : ", ") << "(" << d.orbits[i].sigma << "," << d.orbits[i].lambda
            << ")";
    out << "]";
    return out.str();
}

std::string default_data_dir() {
    if (const char* env = std::getenv("TWISTROOT_DATA_DIR"); env != nullptr && *env != '\0')
        return env;
    return TWISTROOT_DEFAULT_DATA_DIR;
}

std::string curve_table_path(std::int64_t gplus1, const std::string& override_dir) {
    std::string dir = override_dir.empty() ? default_data_dir() : override_dir;
    return dir + "/curves_genus" + std::to_string(gplus1) + ".json";
}

}  // namespace twistroot::io

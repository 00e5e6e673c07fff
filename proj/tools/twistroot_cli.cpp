// Command-line driver: batch queries over root data sets, the bounded
// symplectic square-root search, word verification for the shipped curve
// tables, and the annular rotation-interpolation identity.
//
// Exit codes: 0 success (query answered / verification passed / search found
// nothing), 1 verification failed or the search produced a root, 2 usage,
// validation, or input-file errors.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistroot/annulus.hpp"
#include "twistroot/arith.hpp"
#include "twistroot/enumeration.hpp"
#include "twistroot/io.hpp"
#include "twistroot/nielsen.hpp"
#include "twistroot/symplectic.hpp"
#include "twistroot/twistword.hpp"

namespace {

using twistroot::io::json;
namespace enumeration = twistroot::enumeration;
namespace nielsen = twistroot::nielsen;
namespace symplectic = twistroot::symplectic;
namespace twistword = twistroot::twistword;
namespace annulus = twistroot::annulus;
namespace io = twistroot::io;
using twistroot::arith::Rational;

constexpr const char* kVersion = "0.1.0";

struct OutputOptions {
    std::string format = "json";  // json | table
    bool no_elapsed = false;      // omit elapsed_ms for byte-stable comparison
};

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void emit_json(const std::string& command, const json& parameters, const json& results,
               const OutputOptions& out, const Clock& clock) {
    json envelope;
    envelope["command"] = command;
    envelope["parameters"] = parameters;
    envelope["results"] = results;
    envelope["version"] = kVersion;
    if (!out.no_elapsed) envelope["elapsed_ms"] = clock.ms();
    std::cout << envelope.dump(2) << "\n";
}

nielsen::BoundaryConvention parse_convention(const std::string& s) {
    if (s == "unordered") return nielsen::BoundaryConvention::Unordered;
    if (s == "ordered") return nielsen::BoundaryConvention::Ordered;
    throw CLI::ValidationError("--boundary-convention", "expected unordered, ordered, or both");
}

json classes_json(const std::vector<nielsen::DataSet>& v) {
    json arr = json::array();
    for (const auto& d : v) arr.push_back(io::to_json(d));
    return arr;
}

void print_classes_table(const std::vector<nielsen::DataSet>& v) {
    for (const auto& d : v) std::cout << "  " << io::dataset_brief(d) << "\n";
}

void print_matrix_table(const symplectic::IntMatrix& m, const std::string& indent) {
    for (int i = 0; i < m.dim(); ++i) {
        std::cout << indent << "[";
        for (int j = 0; j < m.dim(); ++j) {
            if (j) std::cout << " ";
            std::cout << m.at(i, j);
        }
        std::cout << "]\n";
    }
}

// ---------------------------------------------------------------------------
// enumerate

int run_enumerate(std::int64_t g, std::int64_t n, const std::string& conv, int parallel,
                  const OutputOptions& out) {
    Clock clock;
    json parameters{{"genus", g},
                    {"degree", n},
                    {"boundary_convention", conv},
                    {"parallel", parallel}};

    std::vector<std::string> wanted;
    if (conv == "both")
        wanted = {"unordered", "ordered"};
    else
        wanted = {conv};

    json results;
    results["g"] = g;
    results["n"] = n;
    json per;
    std::vector<std::pair<std::string, std::vector<nielsen::DataSet>>> hold;
    for (const auto& name : wanted) {
        enumeration::EnumerationOptions opt;
        opt.convention = parse_convention(name);
        opt.workers = parallel;
        auto v = enumeration::enumerate_datasets(g, n, opt);
        json w;
        w["classes"] = classes_json(v);
        w["count"] = static_cast<std::int64_t>(v.size());
        per[name] = std::move(w);
        hold.emplace_back(name, std::move(v));
    }
    if (conv == "both") {
        results["conventions"] = std::move(per);
    } else {
        results["classes"] = std::move(per[conv]["classes"]);
        results["count"] = per[conv]["count"];
        results["boundary_convention"] = conv;
    }

    if (out.format == "table") {
        std::cout << "conjugacy classes of degree-" << n << " roots, genus " << g << "\n";
        for (auto& [name, v] : hold) {
            std::cout << name << " boundary pairs: " << v.size() << " class(es)\n";
            print_classes_table(v);
        }
    } else {
        emit_json("enumerate", parameters, results, out, clock);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// spectrum

json spectrum_json(const enumeration::SpectrumReport& r, const std::string& conv) {
    json j = io::to_json(r);
    j["boundary_convention"] = conv;
    return j;
}

int run_spectrum(std::int64_t g, const std::string& conv, int parallel,
                 const OutputOptions& out) {
    Clock clock;
    json parameters{{"genus", g}, {"boundary_convention", conv}, {"parallel", parallel}};

    std::vector<std::string> wanted;
    if (conv == "both")
        wanted = {"unordered", "ordered"};
    else
        wanted = {conv};

    json results;
    std::vector<std::pair<std::string, enumeration::SpectrumReport>> hold;
    for (const auto& name : wanted) {
        enumeration::EnumerationOptions opt;
        opt.convention = parse_convention(name);
        opt.workers = parallel;
        hold.emplace_back(name, enumeration::degree_spectrum(g, opt));
    }
    if (conv == "both") {
        json per;
        for (auto& [name, rep] : hold) per[name] = spectrum_json(rep, name);
        results["g"] = g;
        results["conventions"] = std::move(per);
    } else {
        results = spectrum_json(hold.front().second, conv);
    }

    if (out.format == "table") {
        for (auto& [name, rep] : hold) {
            std::cout << "degree spectrum, genus " << g << " (" << name << " boundary pairs)\n";
            for (const auto& e : rep.entries)
                std::cout << "  n = " << e.n << ": " << e.count << " class(es)\n";
            if (rep.entries.empty()) std::cout << "  (empty)\n";
        }
    } else {
        emit_json("spectrum", parameters, results, out, clock);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// exists

int run_exists(std::int64_t g, std::int64_t n, const std::string& conv, int parallel,
               const OutputOptions& out) {
    Clock clock;
    json parameters{{"genus", g},
                    {"degree", n},
                    {"boundary_convention", conv},
                    {"parallel", parallel}};
    enumeration::EnumerationOptions opt;
    opt.convention = parse_convention(conv == "both" ? "unordered" : conv);
    opt.workers = parallel;
    const bool ex = enumeration::exists_root(g, n, opt);
    json results{{"g", g}, {"n", n}, {"exists", ex}};
    if (out.format == "table") {
        std::cout << "degree-" << n << " root on genus-" << g << " surface: "
                  << (ex ? "exists" : "does not exist") << "\n";
    } else {
        emit_json("exists", parameters, results, out, clock);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify-degree3

int run_verify_degree3(std::int64_t g, const std::string& table_path, const OutputOptions& out) {
    Clock clock;
    const std::string path =
        table_path.empty() ? io::curve_table_path(g + 1) : table_path;
    json parameters{{"genus", g}, {"table", path}};

    auto table = io::load_curve_system(path);
    auto report = twistword::verify_degree3(g, table);
    auto relations = twistword::sanity_relations(table);
    std::int64_t rel_passed = 0;
    for (const auto& r : relations) rel_passed += r.passed ? 1 : 0;

    json results;
    results["g"] = g;
    results["hhat_cubed_matches"] = report.hhat_cubed_matches;
    results["root_cubed_matches"] = report.root_cubed_matches;
    results["commutes_with_twist"] = report.commutes;
    results["verified"] = report.all();
    results["relations_passed"] = rel_passed;
    results["relations_total"] = static_cast<std::int64_t>(relations.size());

    if (out.format == "table") {
        std::cout << "degree-3 word verification, genus " << g << "\n";
        std::cout << "  homology cube of the conjugator word matches the double twist: "
                  << (report.hhat_cubed_matches ? "pass" : "FAIL") << "\n";
        std::cout << "  homology cube of the candidate root matches the twist: "
                  << (report.root_cubed_matches ? "pass" : "FAIL") << "\n";
        std::cout << "  candidate root commutes with the twist on homology: "
                  << (report.commutes ? "pass" : "FAIL") << "\n";
        std::cout << "  curve-table relations: " << rel_passed << "/" << relations.size()
                  << " pass\n";
        for (const auto& r : relations)
            if (!r.passed) std::cout << "    FAIL " << r.kind << ": " << r.detail << "\n";
    } else {
        emit_json("verify-degree3", parameters, results, out, clock);
    }
    return report.all() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sp-sqrt

int run_sp_sqrt(std::optional<std::int64_t> genus, const std::string& matrix_file,
                std::int64_t bound, int parallel, const OutputOptions& out) {
    Clock clock;
    symplectic::IntMatrix S = symplectic::IntMatrix::identity(4);
    json parameters;
    if (!matrix_file.empty()) {
        S = io::load_matrix(matrix_file);
        parameters["matrix_file"] = matrix_file;
    } else if (genus) {
        // Homology of the closed genus-(g+1) surface carrying the degree-3
        // construction for genus g; the twist curve is the first y-cycle.
        const std::int64_t gplus1 = *genus + 1;
        const int dim = static_cast<int>(2 * gplus1);
        twistroot::symplectic::HomologyClass c(dim, 0);
        c[static_cast<std::size_t>(gplus1)] = 1;
        S = symplectic::transvection(c, symplectic::standard_J(gplus1));
        parameters["genus"] = *genus;
    } else {
        throw CLI::ValidationError("sp-sqrt", "either --genus or --matrix-file is required");
    }
    if (S.dim() % 2 != 0 || S.dim() < 4)
        throw std::invalid_argument("sp-sqrt: matrix dimension must be even and at least 4");
    const auto J = symplectic::standard_J(S.dim() / 2);

    parameters["bound"] = bound;
    parameters["parallel"] = parallel;

    symplectic::SqrtSearchOptions opt;
    opt.bound = bound;
    opt.workers = parallel;
    auto result = symplectic::sqrt_search(S, J, opt);

    json results;
    results["dim"] = S.dim();
    results["bound"] = bound;
    results["free_entries"] = result.system.free_names;
    results["constraints"] = result.system.constraints;
    results["found"] = result.root.has_value();
    results["root"] = result.root ? io::to_json(*result.root) : json(nullptr);
    results["nodes"] = result.stats.nodes;
    results["candidates"] = result.stats.candidates;

    if (out.format == "table") {
        std::cout << "square-root search in the twist centralizer, dim " << S.dim()
                  << ", entry bound " << bound << "\n";
        std::cout << "  free entries (" << result.system.free_names.size() << "):";
        for (const auto& nm : result.system.free_names) std::cout << " " << nm;
        std::cout << "\n  constraints:\n";
        for (const auto& c : result.system.constraints) std::cout << "    " << c << "\n";
        if (result.root) {
            std::cout << "  root found:\n";
            print_matrix_table(*result.root, "    ");
        } else {
            std::cout << "  no square root with |entries| <= " << bound << "\n";
        }
    } else {
        emit_json("sp-sqrt", parameters, results, out, clock);
    }
    return result.root ? 1 : 0;
}

// ---------------------------------------------------------------------------
// marked

int run_marked(std::int64_t g, std::int64_t b1, std::int64_t b2, std::int64_t p,
               const OutputOptions& out) {
    Clock clock;
    json parameters{{"genus", g}, {"boundary", b1}, {"fixed_boundary", b2}, {"punctures", p}};
    auto q = enumeration::MarkedSurfaceQuery::make(g, b1, b2, p);
    auto verdicts = enumeration::marked_obstructions(q);
    json names = json::array();
    for (auto v : verdicts) names.push_back(enumeration::marked_verdict_name(v));
    json results{{"g", g}, {"b1", b1}, {"b2", b2}, {"p", p}, {"verdicts", names}};
    if (out.format == "table") {
        std::cout << "marked surface g=" << g << " b1=" << b1 << " b2=" << b2 << " p=" << p
                  << "\n";
        for (auto v : verdicts) std::cout << "  " << enumeration::marked_verdict_name(v) << "\n";
    } else {
        emit_json("marked", parameters, results, out, clock);
    }
    return 0;
}

// ---------------------------------------------------------------------------
// annulus-check

int run_annulus_check(std::int64_t n, std::optional<std::int64_t> d0_opt,
                      std::optional<std::int64_t> d1_opt, std::int64_t grid,
                      const OutputOptions& out) {
    Clock clock;
    const std::int64_t d0 = d0_opt.value_or(1);
    const std::int64_t d1 = d1_opt.value_or(n - 1 - d0);
    auto m = annulus::AnnulusMap::make(n, d0, d1);
    json parameters{{"degree", n}, {"delta0", d0}, {"delta1", d1}, {"grid", grid}};

    // The n-th power must shift x by (n-1) t - delta0 (mod 1) at every point:
    // the interpolation's n-th power is a full boundary twist profile.
    std::int64_t points = 0;
    bool holds = true;
    for (std::int64_t q = 1; q <= grid && holds; ++q) {
        for (std::int64_t a = 0; a <= q && holds; ++a) {
            const Rational t(a, q);
            for (std::int64_t k = 0; k < 20 && holds; ++k) {
                const Rational x(k, 20);
                auto pt = annulus::AnnulusPoint::make(t, x);
                auto img = annulus::power(m, n, pt);
                const Rational expected =
                    (x + Rational(n - 1) * t - Rational(d0)).mod1();
                ++points;
                if (img.t != t || img.x != expected) holds = false;
            }
        }
    }

    json results{{"n", n},
                 {"delta0", d0},
                 {"delta1", d1},
                 {"twist_defect", annulus::twist_defect(m)},
                 {"grid_points", points},
                 {"power_identity_holds", holds}};
    if (out.format == "table") {
        std::cout << "annulus interpolation n=" << n << " delta0=" << d0 << " delta1=" << d1
                  << "\n";
        std::cout << "  twist defect delta0 + delta1 = " << annulus::twist_defect(m) << "\n";
        std::cout << "  n-th power identity over " << points
                  << " grid points: " << (holds ? "holds" : "FAILS") << "\n";
    } else {
        emit_json("annulus-check", parameters, results, out, clock);
    }
    return holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistroot: roots of the Dehn twist about a nonseparating curve"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    OutputOptions out;
    auto add_output_options = [&out](CLI::App* sub) {
        sub->add_option("--format", out.format, "output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
        sub->add_flag("--no-elapsed", out.no_elapsed,
                      "omit elapsed_ms from the JSON envelope (stable output for diffing)");
    };

    std::int64_t genus = 1, degree = 3, bound = 3, b1 = 0, b2 = 0, p = 0, grid = 12;
    int parallel = 1;
    std::string convention = "unordered", table_path, matrix_file;
    std::optional<std::int64_t> d0_opt, d1_opt, sqrt_genus;

    auto conv_check = CLI::IsMember({"unordered", "ordered", "both"});

    auto* cmd_enum = app.add_subcommand("enumerate", "list conjugacy classes of degree-n roots");
    cmd_enum->add_option("--genus,-g", genus, "surface genus")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    cmd_enum->add_option("--degree,-n", degree, "root degree")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    cmd_enum->add_option("--boundary-convention", convention, "boundary pair convention")->check(conv_check)->capture_default_str();
    cmd_enum->add_option("--parallel", parallel, "worker threads (0 = library default)")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40))->capture_default_str();
    add_output_options(cmd_enum);

    auto* cmd_spec = app.add_subcommand("spectrum", "degrees admitting a root, with class counts");
    cmd_spec->add_option("--genus,-g", genus, "surface genus")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    cmd_spec->add_option("--boundary-convention", convention, "boundary pair convention")->check(conv_check)->capture_default_str();
    cmd_spec->add_option("--parallel", parallel, "worker threads (0 = library default)")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40))->capture_default_str();
    add_output_options(cmd_spec);

    auto* cmd_exists = app.add_subcommand("exists", "does a degree-n root exist?");
    cmd_exists->add_option("--genus,-g", genus, "surface genus")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    cmd_exists->add_option("--degree,-n", degree, "root degree")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
    cmd_exists->add_option("--boundary-convention", convention, "boundary pair convention")->check(conv_check)->capture_default_str();
    cmd_exists->add_option("--parallel", parallel, "worker threads (0 = library default)")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40))->capture_default_str();
    add_output_options(cmd_exists);

    auto* cmd_verify = app.add_subcommand("verify-degree3", "verify the degree-3 word on homology");
    cmd_verify->add_option("--genus,-g", genus, "surface genus (shipped tables: 2..5)")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
    cmd_verify->add_option("--table", table_path, "curve table JSON (overrides the shipped file)");
    add_output_options(cmd_verify);

    auto* cmd_sqrt = app.add_subcommand("sp-sqrt", "bounded square-root search in the twist centralizer");
    auto* og = cmd_sqrt->add_option("--genus,-g", sqrt_genus, "genus (search dim 2(g+1))")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    auto* om = cmd_sqrt->add_option("--matrix-file", matrix_file, "JSON matrix to take the square root of");
    og->excludes(om);
    cmd_sqrt->add_option("--bound", bound, "entry bound")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40))->capture_default_str();
    cmd_sqrt->add_option("--parallel", parallel, "worker threads (0 = library default)")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40))->capture_default_str();
    add_output_options(cmd_sqrt);

    auto* cmd_marked = app.add_subcommand("marked", "obstruction rules for marked surfaces");
    cmd_marked->add_option("--genus,-g", genus, "surface genus")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    cmd_marked->add_option("--boundary", b1, "boundary components (setwise fixed)")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40))->capture_default_str();
    cmd_marked->add_option("--fixed-boundary", b2, "boundary components fixed pointwise")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40))->capture_default_str();
    cmd_marked->add_option("--punctures", p, "punctures")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40))->capture_default_str();
    add_output_options(cmd_marked);

    auto* cmd_ann = app.add_subcommand("annulus-check", "verify the interpolation's n-th power identity");
    cmd_ann->add_option("--degree,-n", degree, "root degree")->required()->check(CLI::Range(std::int64_t{3}, std::int64_t{1} << 20));
    cmd_ann->add_option("--delta0", d0_opt, "first boundary rotation numerator");
    cmd_ann->add_option("--delta1", d1_opt, "second boundary rotation numerator");
    cmd_ann->add_option("--grid", grid, "largest t denominator to test")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40))->capture_default_str();
    add_output_options(cmd_ann);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_enum->parsed()) return run_enumerate(genus, degree, convention, parallel, out);
        if (cmd_spec->parsed()) return run_spectrum(genus, convention, parallel, out);
        if (cmd_exists->parsed()) return run_exists(genus, degree, convention, parallel, out);
        if (cmd_verify->parsed()) return run_verify_degree3(genus, table_path, out);
        if (cmd_sqrt->parsed()) return run_sp_sqrt(sqrt_genus, matrix_file, bound, parallel, out);
        if (cmd_marked->parsed()) return run_marked(genus, b1, b2, p, out);
        if (cmd_ann->parsed()) return run_annulus_check(degree, d0_opt, d1_opt, grid, out);
        std::cerr << "no subcommand given\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

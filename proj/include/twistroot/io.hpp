#pragma once

#include <string>

#include <json.hpp>

#include "twistroot/enumeration.hpp"
#include "twistroot/nielsen.hpp"
#include "twistroot/symplectic.hpp"
#include "twistroot/twistword.hpp"

namespace twistroot::io {

/// Field order is part of the output contract, so all serialization goes
/// through ordered_json.
using json = nlohmann::ordered_json;

json to_json(const nielsen::DataSet& d);
nielsen::DataSet dataset_from_json(const json& j);

json to_json(const enumeration::SpectrumReport& r);

json to_json(const symplectic::IntMatrix& m);
symplectic::IntMatrix matrix_from_json(const json& j);
symplectic::IntMatrix load_matrix(const std::string& path);

json to_json(const twistword::CurveSystem& cs);
twistword::CurveSystem curve_system_from_json(const json& j);
twistword::CurveSystem load_curve_system(const std::string& path);

/// Compact single-line rendering, e.g. "[5, 0, (1,2); (2,5)]" — degree,
/// quotient genus, boundary valencies, then the orbit (sigma, lambda) pairs.
std::string dataset_brief(const nielsen::DataSet& d);

/// Directory holding the shipped curve tables: the TWISTROOT_DATA_DIR
/// environment variable when set, otherwise the build-time default.
std::string default_data_dir();

/// Path of the curve table for surface genus gplus1 (file per genus 3..6),
/// under override_dir when nonempty, else default_data_dir().
std::string curve_table_path(std::int64_t gplus1, const std::string& override_dir = "");

}  // namespace twistroot::io

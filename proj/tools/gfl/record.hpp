#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gfl {

using cplx = std::complex<double>;

// Effective configuration after flag > environment > default resolution.
// It is echoed into the head of every report so output files are
// self-describing.
struct RunConfig {
    std::string command;
    std::string suite;    // verify only
    std::string quantity; // scan only
    double tolerance = 1e-8;
    double radius = 8.0;
    std::uint64_t seed = 0;
    std::string format = "json"; // json | csv
    std::string output;          // empty = stdout
    int jobs = 1;
};

// One output record.  The JSON-lines schema is fixed:
//   {"op","params","value","error_bound","truncation_radius","pass"}
// where "value" is a scalar or {"re","im"}.  CSV gets one row per record
// with the complex value split into value_re/value_im and the config
// echoed in trailing columns.
struct Record {
    std::string op;
    nlohmann::json params = nlohmann::json::object();
    bool complex_value = false;
    cplx value{0.0, 0.0};
    double error_bound = 0.0;
    double truncation_radius = 0.0;
    bool pass = true;
};

// shortest round-trip decimal; "inf"/"-inf"/"nan" for non-finite values
std::string format_number(double v);

// JSON value that survives non-finite doubles (serialized as the strings
// above instead of null)
nlohmann::json json_number(double v);

std::string render_json_lines(const RunConfig& cfg, const std::vector<Record>& records);
std::string render_csv(const RunConfig& cfg, const std::vector<Record>& records);

// renders cfg.format and writes to cfg.output (stdout when empty); throws
// std::runtime_error when the file cannot be written
void write_report(const RunConfig& cfg, const std::vector<Record>& records);

} // namespace gfl

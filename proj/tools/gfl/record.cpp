#include "record.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gfl {

namespace {

nlohmann::json config_params(const RunConfig& cfg) {
    nlohmann::json p{{"command", cfg.command}, {"format", cfg.format},
                     {"jobs", cfg.jobs},       {"radius", cfg.radius},
                     {"seed", cfg.seed},       {"tolerance", cfg.tolerance}};
    if (!cfg.suite.empty()) p["suite"] = cfg.suite;
    if (!cfg.quantity.empty()) p["quantity"] = cfg.quantity;
    return p;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// params flattened to k=v;k=v.  nlohmann objects iterate in key order, so
// the flattening is deterministic.
std::string flatten_params(const nlohmann::json& params) {
    std::string out;
    for (auto it = params.begin(); it != params.end(); ++it) {
        if (!out.empty()) out += ';';
        out += it.key();
        out += '=';
        if (it->is_string())
            out += it->get<std::string>();
        else if (it->is_number_float())
            out += format_number(it->get<double>());
        else
            out += it->dump();
    }
    return out;
}

} // namespace

std::string format_number(double v) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0.0 ? "inf" : "-inf");
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

nlohmann::json json_number(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

std::string render_json_lines(const RunConfig& cfg, const std::vector<Record>& records) {
    nlohmann::json head{{"op", "config"},
                        {"params", config_params(cfg)},
                        {"value", 0.0},
                        {"error_bound", 0.0},
                        {"truncation_radius", cfg.radius},
                        {"pass", true}};
    std::string out = head.dump();
    out += '\n';
    for (const Record& r : records) {
        nlohmann::json value;
        if (r.complex_value)
            value = nlohmann::json{{"im", json_number(r.value.imag())},
                                   {"re", json_number(r.value.real())}};
        else
            value = json_number(r.value.real());
        nlohmann::json line{{"op", r.op},
                            {"params", r.params},
                            {"value", value},
                            {"error_bound", json_number(r.error_bound)},
                            {"truncation_radius", json_number(r.truncation_radius)},
                            {"pass", r.pass}};
        out += line.dump();
        out += '\n';
    }
    return out;
}

std::string render_csv(const RunConfig& cfg, const std::vector<Record>& records) {
    std::string out =
        "op,params,value_re,value_im,error_bound,truncation_radius,pass,"
        "tolerance,radius,seed,jobs\n";
    std::string cfg_cols = format_number(cfg.tolerance) + ',' +
                           format_number(cfg.radius) + ',' + std::to_string(cfg.seed) +
                           ',' + std::to_string(cfg.jobs);
    for (const Record& r : records) {
        out += csv_quote(r.op);
        out += ',';
        out += csv_quote(flatten_params(r.params));
        out += ',';
        out += format_number(r.value.real());
        out += ',';
        if (r.complex_value) out += format_number(r.value.imag());
        out += ',';
        out += format_number(r.error_bound);
        out += ',';
        out += format_number(r.truncation_radius);
        out += ',';
        out += r.pass ? "true" : "false";
        out += ',';
        out += cfg_cols;
        out += '\n';
    }
    return out;
}

void write_report(const RunConfig& cfg, const std::vector<Record>& records) {
    std::string body =
        cfg.format == "csv" ? render_csv(cfg, records) : render_json_lines(cfg, records);
    if (cfg.output.empty()) {
        std::fwrite(body.data(), 1, body.size(), stdout);
        std::fflush(stdout);
        return;
    }
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.output);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + cfg.output);
}

} // namespace gfl

#include "simcorr/report.hpp"

#include <cstdio>
#include <cstring>
#include <sstream>

#include <json.hpp>

namespace simcorr {

std::uint64_t fingerprint_cells(const std::vector<const SampleSet*>& groups) {
    // FNV-1a 64-bit over the little-endian bytes of every cell, row-major.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const unsigned char* bytes, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            h ^= bytes[i];
            h *= 1099511628211ULL;
        }
    };
    for (const SampleSet* g : groups) {
        for (double v : g->values()) {
            unsigned char buf[sizeof(double)];
            std::memcpy(buf, &v, sizeof(double));
            mix(buf, sizeof(double));
        }
    }
    return h;
}

std::string to_text(const RunReport& r) {
    std::ostringstream os;
    auto line = [&os](const std::string& k, const std::string& v) {
        os << k;
        for (std::size_t i = k.size(); i < 14; ++i) os << ' ';
        os << v << '\n';
    };
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += v[i];
        }
        return s;
    };
    line("measure", r.measure);
    line("input", r.input);
    line("rows", std::to_string(r.n_rows));
    line("x_columns", join(r.x_columns));
    line("y_columns", join(r.y_columns));
    line("data_hash", [&] {
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(r.content_hash));
        return std::string(buf);
    }());
    line("alpha", format_full(r.alpha));
    line("kernel", r.kernel);
    line("grid", r.grid);
    line("refine", std::to_string(r.refine));
    if (r.log_form) line("log_form", *r.log_form);
    line("value", format_full(r.value));
    if (r.real_part) line("real_part", format_full(*r.real_part));
    if (r.imag_part) line("imag_part", format_full(*r.imag_part));
    if (r.s_x) line("s_x", format_full(*r.s_x));
    if (r.s_y) line("s_y", format_full(*r.s_y));
    line("degenerate", r.degenerate ? "true" : "false");
    line("wall_seconds", format_full(r.wall_seconds));
    return os.str();
}

std::string to_record(const RunReport& r) {
    nlohmann::json j;
    j["measure"] = r.measure;
    j["input"] = r.input;
    j["rows"] = r.n_rows;
    j["x_columns"] = r.x_columns;
    j["y_columns"] = r.y_columns;
    j["data_hash"] = r.content_hash;
    j["alpha"] = r.alpha;
    j["kernel"] = r.kernel;
    j["grid"] = r.grid;
    j["refine"] = r.refine;
    if (r.log_form) j["log_form"] = *r.log_form;
    j["value"] = r.value;
    if (r.real_part) j["real_part"] = *r.real_part;
    if (r.imag_part) j["imag_part"] = *r.imag_part;
    if (r.s_x) j["s_x"] = *r.s_x;
    if (r.s_y) j["s_y"] = *r.s_y;
    j["degenerate"] = r.degenerate;
    j["wall_seconds"] = r.wall_seconds;
    return j.dump();
}

RunReport report_from_record(const std::string& s) {
    const nlohmann::json j = nlohmann::json::parse(s);
    RunReport r;
    r.measure = j.at("measure").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.n_rows = j.at("rows").get<std::size_t>();
    r.x_columns = j.at("x_columns").get<std::vector<std::string>>();
    r.y_columns = j.at("y_columns").get<std::vector<std::string>>();
    r.content_hash = j.at("data_hash").get<std::uint64_t>();
    r.alpha = j.at("alpha").get<double>();
    r.kernel = j.at("kernel").get<std::string>();
    r.grid = j.at("grid").get<std::string>();
    r.refine = j.at("refine").get<int>();
    if (j.contains("log_form")) r.log_form = j.at("log_form").get<std::string>();
    r.value = j.at("value").get<double>();
    if (j.contains("real_part")) r.real_part = j.at("real_part").get<double>();
    if (j.contains("imag_part")) r.imag_part = j.at("imag_part").get<double>();
    if (j.contains("s_x")) r.s_x = j.at("s_x").get<double>();
    if (j.contains("s_y")) r.s_y = j.at("s_y").get<double>();
    r.degenerate = j.at("degenerate").get<bool>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    return r;
}

}  // namespace simcorr

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simcorr/csvio.hpp"
#include "simcorr/types.hpp"

namespace simcorr {

// Everything one compute run reports: the requested measure and settings, the
// dataset fingerprint, and the resulting value(s). Serializable both as
// human-readable text and as a single machine-readable JSON record that parses
// back to the exact values printed.
struct RunReport {
    // request
    std::string measure;  // CLI name: dcorr, scorr, rv, dcoh, scoh, modified-scorr
    double alpha = 2.0;
    std::string kernel = "exponential";
    std::string grid = "-4:4:33";
    int refine = 3;
    std::optional<std::string> log_form;  // complex log toys only

    // dataset fingerprint
    std::string input;
    std::size_t n_rows = 0;
    std::vector<std::string> x_columns;  // complex groups list "re:im" pairs
    std::vector<std::string> y_columns;
    std::uint64_t content_hash = 0;  // FNV-1a over the selected cells

    // result
    double value = 0.0;
    bool degenerate = false;
    std::optional<double> s_x;
    std::optional<double> s_y;
    std::optional<double> real_part;  // coherence measures only
    std::optional<double> imag_part;

    double wall_seconds = 0.0;
};

// FNV-1a 64-bit over the bytes of the selected columns, row-major.
std::uint64_t fingerprint_cells(const std::vector<const SampleSet*>& groups);

std::string to_text(const RunReport& r);
std::string to_record(const RunReport& r);           // single-line JSON
RunReport report_from_record(const std::string& s);  // inverse of to_record

}  // namespace simcorr

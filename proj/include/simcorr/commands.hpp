#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simcorr/csvio.hpp"
#include "simcorr/toyset.hpp"
#include "simcorr/types.hpp"

namespace simcorr {

// Command implementations behind the CLI. Each returns a process exit code:
//   0 success, 1 internal/config error, 2 malformed input, 3 selector error.
// Human-visible output goes to `out`, diagnostics to `err`.

struct GenOptions {
    std::string name;  // toy dataset name
    int n = 0;         // 0 → per-name default
    double beta = 0.0;
    std::uint64_t seed = 1;
    std::string log_form = "principal";
    std::string output;  // CSV path
};
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

struct ComputeOptions {
    std::string input;
    std::string measure = "dcorr";  // dcorr|scorr|rv|dcoh|scoh|modified-scorr
    std::string x_cols;             // comma list; empty → default split
    std::string y_cols;
    std::string complex_x;  // "re:im,..." pairs
    std::string complex_y;
    double alpha = 2.0;
    std::string kernel = "exponential";
    std::string grid = "-4:4:33";  // LO:HI:POINTS
    int refine = 3;
    std::string format = "text";  // text|record
};
int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err);

struct TableOptions {
    double alpha = 2.0;
    std::uint64_t seed = 1;
    std::string log_form = "atan";  // table8 log row; see docs
};
int cmd_table7(const TableOptions& opt, std::ostream& out, std::ostream& err);
int cmd_table8(const TableOptions& opt, std::ostream& out, std::ostream& err);

struct SurfaceOptions {
    std::string input;
    std::string x_cols;
    std::string y_cols;
    double alpha = 2.0;
    std::string kernel = "exponential";
    std::string grid = "-4:4:33";
    std::string output;  // TSV path
};
int cmd_surface(const SurfaceOptions& opt, std::ostream& out, std::ostream& err);

// Structured row data behind the table commands, reused by the test suite.
struct Table7Row {
    std::string label;
    int n = 0;
    double beta = 0.0;  // noisy-column half-width
    double dcorr_clean = 0.0;
    double dcorr_noisy = 0.0;
    double scorr_clean = 0.0;
    double scorr_noisy = 0.0;
};
std::vector<Table7Row> table7_rows(double alpha, std::uint64_t seed);

struct Table8Row {
    std::string label;
    double dist_total = 0.0, dist_re = 0.0, dist_im = 0.0;
    double sim_total = 0.0, sim_re = 0.0, sim_im = 0.0;
};
std::vector<Table8Row> table8_rows(double alpha, LogForm log_form);

// Shared helpers (exposed for tests).
bool parse_grid_spec(const std::string& s, ScaleGrid& grid, std::string& err_msg);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace simcorr

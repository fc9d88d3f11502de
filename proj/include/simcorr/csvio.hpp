#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "simcorr/types.hpp"

namespace simcorr {

// Minimal numeric CSV dialect: comma separators, mandatory header, '.' decimal
// separator, no quoting (all cells numeric). Values are written with 17
// significant digits so a round-trip is exact for doubles.

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;  // each row has header.size() cells

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return header.size(); }
};

// Malformed input: carries the 1-based line number of the offending line.
class CsvError : public std::runtime_error {
public:
    CsvError(std::size_t line, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line) + ": " + what_arg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Column-selection problems (unknown names, overlaps, bad pair syntax).
class SelectorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Csv read_csv(const std::string& path);

// Writes to `path`.tmp first and renames into place, so failures never leave a
// partial file at the destination.
void write_csv_atomic(const std::string& path, const Csv& csv);

// Formats one double with 17 significant digits (shared by CSV and TSV output).
std::string format_full(double v);

// --- column selection --------------------------------------------------------

struct ColumnSelector {
    std::vector<std::string> x_columns;                       // empty → default split
    std::vector<std::string> y_columns;                       // empty → default split
    std::vector<std::pair<std::string, std::string>> x_pairs; // (re, im) per column
    std::vector<std::pair<std::string, std::string>> y_pairs;

    bool complex_x() const { return !x_pairs.empty(); }
    bool complex_y() const { return !y_pairs.empty(); }
};

// Parses "re1:im1,re2:im2" into pairs. Throws SelectorError on bad syntax.
std::vector<std::pair<std::string, std::string>> parse_complex_pairs(const std::string& arg);

// Splits a comma-separated list of column names.
std::vector<std::string> parse_column_list(const std::string& arg);

// Real-valued selection. With both name lists empty, columns whose names start
// with "x" form the x group and those starting with "y" form the y group.
// Throws SelectorError when a name is unknown, a column is claimed by both
// sides, or a group ends up empty.
struct SelectedReal {
    SampleSet x;
    SampleSet y;
    std::vector<std::string> x_names;  // resolved column names, selection order
    std::vector<std::string> y_names;
};
SelectedReal select_real(const Csv& csv, const ColumnSelector& sel);

// Complex selection from declared (re, im) pairs; both groups must be declared.
struct SelectedComplex {
    ComplexSampleSet x;
    ComplexSampleSet y;
    std::vector<std::string> x_names;  // "re:im" per column
    std::vector<std::string> y_names;
};
SelectedComplex select_complex(const Csv& csv, const ColumnSelector& sel);

}  // namespace simcorr

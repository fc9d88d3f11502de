#include "simcorr/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace simcorr {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

void strip_cr(std::string& s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
}

}  // namespace

Csv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError(0, "cannot open '" + path + "'");
    Csv csv;
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw CsvError(1, "missing header");
    ++line_no;
    strip_cr(line);
    csv.header = split(line, ',');
    std::unordered_set<std::string> seen;
    for (const std::string& h : csv.header) {
        if (h.empty()) throw CsvError(1, "empty column name in header");
        if (!seen.insert(h).second) throw CsvError(1, "duplicate column name '" + h + "'");
    }

    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty() && in.peek() == EOF) break;  // trailing newline
        const std::vector<std::string> cells = split(line, ',');
        if (cells.size() != csv.header.size())
            throw CsvError(line_no, "expected " + std::to_string(csv.header.size()) +
                                        " fields, got " + std::to_string(cells.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (const std::string& c : cells) {
            if (c.empty()) throw CsvError(line_no, "empty field");
            char* end = nullptr;
            const double v = std::strtod(c.c_str(), &end);
            if (end != c.c_str() + c.size())
                throw CsvError(line_no, "not a number: '" + c + "'");
            // overflow surfaces as ±inf here; underflow rounds to a (sub)normal
            if (!std::isfinite(v)) throw CsvError(line_no, "non-finite value: '" + c + "'");
            row.push_back(v);
        }
        csv.rows.push_back(std::move(row));
    }
    if (csv.rows.empty()) throw CsvError(line_no, "no data rows");
    return csv;
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv_atomic(const std::string& path, const Csv& csv) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        for (std::size_t i = 0; i < csv.header.size(); ++i) {
            if (i) out << ',';
            out << csv.header[i];
        }
        out << '\n';
        for (const std::vector<double>& row : csv.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                out << format_full(row[i]);
            }
            out << '\n';
        }
        out.flush();
        if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

std::vector<std::pair<std::string, std::string>> parse_complex_pairs(const std::string& arg) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string& item : split(arg, ',')) {
        const std::vector<std::string> halves = split(item, ':');
        if (halves.size() != 2 || halves[0].empty() || halves[1].empty())
            throw SelectorError("complex pair must be 're:im', got '" + item + "'");
        out.emplace_back(halves[0], halves[1]);
    }
    return out;
}

std::vector<std::string> parse_column_list(const std::string& arg) {
    std::vector<std::string> out;
    if (arg.empty()) return out;
    for (const std::string& item : split(arg, ',')) {
        if (item.empty()) throw SelectorError("empty column name in list '" + arg + "'");
        out.push_back(item);
    }
    return out;
}

namespace {

std::unordered_map<std::string, int> header_index(const Csv& csv) {
    std::unordered_map<std::string, int> idx;
    for (std::size_t i = 0; i < csv.header.size(); ++i)
        idx[csv.header[i]] = static_cast<int>(i);
    return idx;
}

int resolve(const std::unordered_map<std::string, int>& idx, const std::string& name,
            std::unordered_set<int>& claimed) {
    const auto it = idx.find(name);
    if (it == idx.end()) throw SelectorError("unknown column '" + name + "'");
    if (!claimed.insert(it->second).second)
        throw SelectorError("column '" + name + "' selected more than once");
    return it->second;
}

SampleSet gather(const Csv& csv, const std::vector<int>& cols) {
    const int n = static_cast<int>(csv.n_rows());
    const int p = static_cast<int>(cols.size());
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(n) * p);
    for (const std::vector<double>& row : csv.rows)
        for (int c : cols) v.push_back(row[static_cast<std::size_t>(c)]);
    return SampleSet(n, p, std::move(v));
}

}  // namespace

SelectedReal select_real(const Csv& csv, const ColumnSelector& sel) {
    std::vector<std::string> xn = sel.x_columns;
    std::vector<std::string> yn = sel.y_columns;
    if (xn.empty() != yn.empty())
        throw SelectorError("specify both x and y column lists, or neither");
    if (xn.empty()) {
        for (const std::string& h : csv.header) {
            if (h.rfind('x', 0) == 0) xn.push_back(h);
            else if (h.rfind('y', 0) == 0) yn.push_back(h);
        }
        if (xn.empty() || yn.empty())
            throw SelectorError(
                "default split needs columns named x*/y*; use explicit column lists");
    }
    const auto idx = header_index(csv);
    std::unordered_set<int> claimed;
    std::vector<int> xi, yi;
    for (const std::string& nm : xn) xi.push_back(resolve(idx, nm, claimed));
    for (const std::string& nm : yn) yi.push_back(resolve(idx, nm, claimed));
    if (xi.empty() || yi.empty()) throw SelectorError("both groups need at least one column");
    return SelectedReal{gather(csv, xi), gather(csv, yi), std::move(xn), std::move(yn)};
}

SelectedComplex select_complex(const Csv& csv, const ColumnSelector& sel) {
    if (sel.x_pairs.empty() || sel.y_pairs.empty())
        throw SelectorError("complex selection requires re:im pairs for both groups");
    const auto idx = header_index(csv);
    std::unordered_set<int> claimed;
    auto pair_names = [](const std::vector<std::pair<std::string, std::string>>& pairs) {
        std::vector<std::string> names;
        for (const auto& [re_name, im_name] : pairs) names.push_back(re_name + ":" + im_name);
        return names;
    };
    auto gather_pairs = [&](const std::vector<std::pair<std::string, std::string>>& pairs) {
        std::vector<int> re_cols, im_cols;
        for (const auto& [re_name, im_name] : pairs) {
            re_cols.push_back(resolve(idx, re_name, claimed));
            im_cols.push_back(resolve(idx, im_name, claimed));
        }
        return ComplexSampleSet(gather(csv, re_cols), gather(csv, im_cols));
    };
    ComplexSampleSet x = gather_pairs(sel.x_pairs);
    ComplexSampleSet y = gather_pairs(sel.y_pairs);
    return SelectedComplex{std::move(x), std::move(y), pair_names(sel.x_pairs),
                           pair_names(sel.y_pairs)};
}

}  // namespace simcorr

#include "simcorr/commands.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "simcorr/association.hpp"
#include "simcorr/coherence.hpp"
#include "simcorr/report.hpp"
#include "simcorr/scale_search.hpp"

namespace simcorr {

namespace {

constexpr int kDecadeLo = -8;
constexpr int kDecadeHi = 8;

int run_guarded(std::ostream& err, const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const CsvError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const SelectorError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

void write_text_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
    }
    std::filesystem::rename(tmp, path);
}

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

KernelFamily family_from_string(const std::string& s) {
    if (s == "exponential") return KernelFamily::exponential;
    if (s == "biweight") return KernelFamily::biweight;
    throw ConfigError("unknown kernel family '" + s + "'");
}

LogForm log_form_or_throw(const std::string& s) {
    const std::optional<LogForm> f = log_form_from_string(s);
    if (!f) throw ConfigError("unknown log form '" + s + "' (principal|paper|atan)");
    return *f;
}

}  // namespace

bool parse_grid_spec(const std::string& s, ScaleGrid& grid, std::string& err_msg) {
    double lo = 0, hi = 0;
    int points = 0;
    char extra = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &lo, &hi, &points, &extra) != 3) {
        err_msg = "grid must be LO:HI:POINTS, got '" + s + "'";
        return false;
    }
    grid.log10_min = lo;
    grid.log10_max = hi;
    grid.points_per_axis = points;
    try {
        grid.validate();
    } catch (const ConfigError& e) {
        err_msg = e.what();
        return false;
    }
    return true;
}

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        if (opt.output.empty()) throw ConfigError("gen requires --output");
        const std::optional<ToyName> name = toy_name_from_string(opt.name);
        if (!name) throw ConfigError("unknown dataset name '" + opt.name + "'");
        ToySpec spec;
        spec.name = *name;
        spec.n = opt.n;
        spec.noise_beta = opt.beta;
        spec.seed = opt.seed;
        spec.log_form = log_form_or_throw(opt.log_form);

        Csv csv;
        if (is_complex_toy(*name)) {
            const ToyComplex t = generate_complex(spec);
            const int p = t.x.p(), q = t.y.p();
            for (int j = 0; j < p; ++j) {
                csv.header.push_back("x" + std::to_string(j + 1) + "_re");
                csv.header.push_back("x" + std::to_string(j + 1) + "_im");
            }
            for (int j = 0; j < q; ++j) {
                csv.header.push_back("y" + std::to_string(j + 1) + "_re");
                csv.header.push_back("y" + std::to_string(j + 1) + "_im");
            }
            for (int i = 0; i < t.x.n(); ++i) {
                std::vector<double> row;
                for (int j = 0; j < p; ++j) {
                    row.push_back(t.x.re().at(i, j));
                    row.push_back(t.x.im().at(i, j));
                }
                for (int j = 0; j < q; ++j) {
                    row.push_back(t.y.re().at(i, j));
                    row.push_back(t.y.im().at(i, j));
                }
                csv.rows.push_back(std::move(row));
            }
        } else {
            const ToyReal t = generate_real(spec);
            for (int j = 0; j < t.x.p(); ++j) csv.header.push_back("x" + std::to_string(j + 1));
            for (int j = 0; j < t.y.p(); ++j) csv.header.push_back("y" + std::to_string(j + 1));
            for (int i = 0; i < t.x.n(); ++i) {
                std::vector<double> row;
                for (int j = 0; j < t.x.p(); ++j) row.push_back(t.x.at(i, j));
                for (int j = 0; j < t.y.p(); ++j) row.push_back(t.y.at(i, j));
                csv.rows.push_back(std::move(row));
            }
        }
        write_csv_atomic(opt.output, csv);
        out << "wrote " << opt.output << " (" << csv.n_rows() << " rows, " << csv.n_cols()
            << " columns)\n";
        return 0;
    });
}

int cmd_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        ScaleGrid grid;
        std::string msg;
        if (!parse_grid_spec(opt.grid, grid, msg)) throw ConfigError(msg);
        if (opt.refine < 0) throw ConfigError("refine iterations must be >= 0");
        grid.refine_iterations = opt.refine;
        const KernelFamily family = family_from_string(opt.kernel);
        if (opt.format != "text" && opt.format != "record")
            throw ConfigError("format must be text|record");
        if (opt.input.empty()) throw ConfigError("compute requires --input");

        const Csv csv = read_csv(opt.input);
        ColumnSelector sel;
        sel.x_columns = parse_column_list(opt.x_cols);
        sel.y_columns = parse_column_list(opt.y_cols);
        if (!opt.complex_x.empty()) sel.x_pairs = parse_complex_pairs(opt.complex_x);
        if (!opt.complex_y.empty()) sel.y_pairs = parse_complex_pairs(opt.complex_y);

        RunReport rep;
        rep.measure = opt.measure;
        rep.alpha = opt.alpha;
        rep.kernel = opt.kernel;
        rep.grid = opt.grid;
        rep.refine = opt.refine;
        rep.input = opt.input;
        rep.n_rows = csv.n_rows();

        const auto t0 = std::chrono::steady_clock::now();
        if (opt.measure == "dcoh" || opt.measure == "scoh") {
            const SelectedComplex sc = select_complex(csv, sel);
            rep.x_columns = sc.x_names;
            rep.y_columns = sc.y_names;
            const SampleSet* groups[] = {&sc.x.re(), &sc.x.im(), &sc.y.re(), &sc.y.im()};
            rep.content_hash = fingerprint_cells({groups[0], groups[1], groups[2], groups[3]});
            const CoherenceBreakdown b = opt.measure == "dcoh"
                                             ? distance_coherence(sc.x, sc.y)
                                             : similarity_coherence(sc.x, sc.y, opt.alpha, grid);
            rep.value = b.total;
            rep.real_part = b.real_part;
            rep.imag_part = b.imag_part;
            rep.s_x = b.s_x;
            rep.s_y = b.s_y;
            rep.degenerate = b.degenerate;
        } else {
            const SelectedReal sr = select_real(csv, sel);
            rep.x_columns = sr.x_names;
            rep.y_columns = sr.y_names;
            rep.content_hash = fingerprint_cells({&sr.x, &sr.y});
            AssociationEstimate est;
            if (opt.measure == "dcorr") {
                est = distance_correlation(sr.x, sr.y);
            } else if (opt.measure == "rv") {
                est = rv_coefficient(sr.x, sr.y);
            } else if (opt.measure == "scorr") {
                est = maximize_correlation(sr.x, sr.y, opt.alpha, grid, family);
            } else if (opt.measure == "modified-scorr") {
                const double mx = pairwise_distances(sr.x).m.max_abs();
                const double my = pairwise_distances(sr.y).m.max_abs();
                if (mx == 0.0 || my == 0.0) {
                    est.measure = Measure::modified_similarity_corr;
                    est.degenerate = true;
                } else {
                    est = modified_similarity_estimate(sr.x, sr.y, 1e6 * mx, 1e6 * my);
                }
            } else {
                throw ConfigError("unknown measure '" + opt.measure + "'");
            }
            rep.value = est.value;
            rep.degenerate = est.degenerate;
            rep.s_x = est.s_x;
            rep.s_y = est.s_y;
        }
        const auto t1 = std::chrono::steady_clock::now();
        rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();

        std::string text = opt.format == "text" ? to_text(rep) : to_record(rep) + "\n";
        out << text;
        return 0;
    });
}

std::vector<Table7Row> table7_rows(double alpha, std::uint64_t seed) {
    struct RowSpec {
        ToyName name;
        double beta;
    };
    const RowSpec specs[] = {
        {ToyName::line, 0.2},           {ToyName::x_shape, 0.2}, {ToyName::line_plus_sine, 0.4},
        {ToyName::random_dots, 0.2},    {ToyName::circle, 0.2},  {ToyName::paraboloid, 0.4},
    };
    const std::vector<double> decades = decade_nodes(kDecadeLo, kDecadeHi);
    std::vector<Table7Row> rows;
    for (const RowSpec& rs : specs) {
        Table7Row row;
        row.label = to_string(rs.name);
        row.n = default_toy_size(rs.name);
        row.beta = rs.beta;
        ToySpec spec;
        spec.name = rs.name;
        spec.seed = seed;

        spec.noise_beta = 0.0;
        const ToyReal clean = generate_real(spec);
        row.dcorr_clean = distance_correlation(clean.x, clean.y).value;
        row.scorr_clean =
            maximize_correlation_at_nodes(clean.x, clean.y, alpha, decades, decades).value;

        spec.noise_beta = rs.beta;
        const ToyReal noisy = generate_real(spec);
        row.dcorr_noisy = distance_correlation(noisy.x, noisy.y).value;
        row.scorr_noisy =
            maximize_correlation_at_nodes(noisy.x, noisy.y, alpha, decades, decades).value;
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_table7(const TableOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        const std::vector<Table7Row> rows = table7_rows(opt.alpha, opt.seed);
        out << "# association measures on the benchmark datasets (alpha = "
            << fixed4(opt.alpha) << ", seed = " << opt.seed << ")\n";
        out << "# noisy columns add uniform [-beta, +beta] noise to the y group\n";
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%-16s %6s %8s %14s %8s %14s %6s\n", "function", "N",
                      "dcorr", "dcorr(noisy)", "scorr", "scorr(noisy)", "beta");
        out << buf;
        for (const Table7Row& r : rows) {
            std::snprintf(buf, sizeof(buf), "%-16s %6d %8s %14s %8s %14s %6.1f\n", r.label.c_str(),
                          r.n, fixed4(r.dcorr_clean).c_str(), fixed4(r.dcorr_noisy).c_str(),
                          fixed4(r.scorr_clean).c_str(), fixed4(r.scorr_noisy).c_str(), r.beta);
            out << buf;
        }
        return 0;
    });
}

std::vector<Table8Row> table8_rows(double alpha, LogForm log_form) {
    const ToyName names[] = {ToyName::cx_linear, ToyName::cx_quadratic, ToyName::cx_sqrt,
                             ToyName::cx_log};
    const std::vector<double> decades = decade_nodes(kDecadeLo, kDecadeHi);
    std::vector<Table8Row> rows;
    for (ToyName name : names) {
        ToySpec spec;
        spec.name = name;
        spec.log_form = log_form;
        const ToyComplex t = generate_complex(spec);
        Table8Row row;
        row.label = to_string(name);
        if (name == ToyName::cx_log) row.label += "[" + to_string(log_form) + "]";
        const CoherenceBreakdown d = distance_coherence(t.x, t.y);
        row.dist_total = d.total;
        row.dist_re = d.real_part;
        row.dist_im = d.imag_part;
        const CoherenceBreakdown s = similarity_coherence_at_nodes(t.x, t.y, alpha, decades,
                                                                   decades);
        row.sim_total = s.total;
        row.sim_re = s.real_part;
        row.sim_im = s.imag_part;
        rows.push_back(std::move(row));
    }
    return rows;
}

int cmd_table8(const TableOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        const std::vector<Table8Row> rows = table8_rows(opt.alpha, log_form_or_throw(opt.log_form));
        out << "# coherence of the complex benchmark maps (alpha = " << fixed4(opt.alpha)
            << ")\n";
        out << "# totals split additively into real/imaginary contributions\n";
        char buf[200];
        std::snprintf(buf, sizeof(buf), "%-22s %10s %8s %8s %10s %8s %8s\n", "function",
                      "dist", "dist_re", "dist_im", "sim", "sim_re", "sim_im");
        out << buf;
        for (const Table8Row& r : rows) {
            std::snprintf(buf, sizeof(buf), "%-22s %10s %8s %8s %10s %8s %8s\n", r.label.c_str(),
                          fixed4(r.dist_total).c_str(), fixed4(r.dist_re).c_str(),
                          fixed4(r.dist_im).c_str(), fixed4(r.sim_total).c_str(),
                          fixed4(r.sim_re).c_str(), fixed4(r.sim_im).c_str());
            out << buf;
        }
        return 0;
    });
}

int cmd_surface(const SurfaceOptions& opt, std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&]() {
        ScaleGrid grid;
        std::string msg;
        if (!parse_grid_spec(opt.grid, grid, msg)) throw ConfigError(msg);
        const KernelFamily family = family_from_string(opt.kernel);
        if (opt.input.empty()) throw ConfigError("surface requires --input");
        if (opt.output.empty()) throw ConfigError("surface requires --output");

        const Csv csv = read_csv(opt.input);
        ColumnSelector sel;
        sel.x_columns = parse_column_list(opt.x_cols);
        sel.y_columns = parse_column_list(opt.y_cols);
        const SelectedReal sr = select_real(csv, sel);
        const std::vector<SurfaceSample> samples =
            evaluate_surface(sr.x, sr.y, opt.alpha, grid, family);

        std::ostringstream tsv;
        tsv << "log10_sx\tlog10_sy\tvalue\n";
        for (const SurfaceSample& s : samples)
            tsv << format_full(s.log10_sx) << '\t' << format_full(s.log10_sy) << '\t'
                << format_full(s.value) << '\n';
        write_text_atomic(opt.output, tsv.str());
        out << "wrote " << opt.output << " (" << samples.size() << " nodes)\n";
        return 0;
    });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"similarity and distance correlation toolkit"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    CLI::App* gen = app.add_subcommand("gen", "generate a benchmark dataset as CSV");
    gen->add_option("name", gen_opt.name,
                    "dataset: line|x_shape|line_plus_sine|random_dots|circle|paraboloid|"
                    "cx_linear|cx_quadratic|cx_sqrt|cx_log")
        ->required();
    gen->add_option("n", gen_opt.n, "sample count (0 = dataset default)");
    gen->add_option("--beta", gen_opt.beta, "uniform noise half-width added to the y group");
    gen->add_option("--seed", gen_opt.seed, "RNG seed");
    gen->add_option("--log-form", gen_opt.log_form,
                    "complex log convention: principal|paper|atan");
    gen->add_option("--output", gen_opt.output, "output CSV path")->required();

    ComputeOptions comp_opt;
    CLI::App* comp = app.add_subcommand("compute", "compute an association measure on a CSV");
    comp->add_option("--input", comp_opt.input, "input CSV path")->required();
    comp->add_option("--measure", comp_opt.measure,
                     "dcorr|scorr|rv|modified-scorr|dcoh|scoh (default dcorr)")
        ->check(CLI::IsMember({"dcorr", "scorr", "rv", "modified-scorr", "dcoh", "scoh"}));
    comp->add_option("--x-cols", comp_opt.x_cols, "comma-separated x columns (default: x*)");
    comp->add_option("--y-cols", comp_opt.y_cols, "comma-separated y columns (default: y*)");
    comp->add_option("--complex-x", comp_opt.complex_x, "re:im column pairs for complex x");
    comp->add_option("--complex-y", comp_opt.complex_y, "re:im column pairs for complex y");
    comp->add_option("--alpha", comp_opt.alpha, "distance exponent (scorr, scoh)");
    comp->add_option("--kernel", comp_opt.kernel, "exponential|biweight")
        ->check(CLI::IsMember({"exponential", "biweight"}));
    comp->add_option("--grid", comp_opt.grid, "scale grid LO:HI:POINTS in log10 units");
    comp->add_option("--refine", comp_opt.refine, "refinement rounds after the coarse scan");
    comp->add_option("--format", comp_opt.format, "text|record")
        ->check(CLI::IsMember({"text", "record"}));

    TableOptions t7_opt;
    CLI::App* t7 = app.add_subcommand("table7", "regenerate the real-benchmark results table");
    t7->add_option("--alpha", t7_opt.alpha, "distance exponent");
    t7->add_option("--seed", t7_opt.seed, "seed for the noisy columns");

    TableOptions t8_opt;
    CLI::App* t8 = app.add_subcommand("table8", "regenerate the complex-benchmark results table");
    t8->add_option("--alpha", t8_opt.alpha, "distance exponent");
    t8->add_option("--log-form", t8_opt.log_form,
                   "complex log convention for the log row: principal|paper|atan")
        ->check(CLI::IsMember({"principal", "paper", "atan"}));

    SurfaceOptions surf_opt;
    CLI::App* surf = app.add_subcommand("surface", "export the correlation surface as TSV");
    surf->add_option("--input", surf_opt.input, "input CSV path")->required();
    surf->add_option("--x-cols", surf_opt.x_cols, "comma-separated x columns (default: x*)");
    surf->add_option("--y-cols", surf_opt.y_cols, "comma-separated y columns (default: y*)");
    surf->add_option("--alpha", surf_opt.alpha, "distance exponent");
    surf->add_option("--kernel", surf_opt.kernel, "exponential|biweight")
        ->check(CLI::IsMember({"exponential", "biweight"}));
    surf->add_option("--grid", surf_opt.grid, "scale grid LO:HI:POINTS in log10 units");
    surf->add_option("--output", surf_opt.output, "output TSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    if (gen->parsed()) return cmd_gen(gen_opt, out, err);
    if (comp->parsed()) return cmd_compute(comp_opt, out, err);
    if (t7->parsed()) return cmd_table7(t7_opt, out, err);
    if (t8->parsed()) return cmd_table8(t8_opt, out, err);
    if (surf->parsed()) return cmd_surface(surf_opt, out, err);
    err << "error: no subcommand\n";
    return 1;
}

}  // namespace simcorr

#include "gpc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>

#include "gpc/curves.hpp"
#include "gpc/diagram.hpp"
#include "gpc/errors.hpp"
#include "gpc/injectivity.hpp"
#include "gpc/stability.hpp"
#include "gpc/wasserstein.hpp"
#include "gpc/weights.hpp"

namespace gpc::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

double parse_number(std::string_view text, std::string_view what) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw UsageError("invalid number '" + std::string(text) + "' for " + std::string(what));
    }
    return v;
}

std::vector<double> parse_ranges(const std::string& text, std::size_t count, std::string_view what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto colon = text.find(':', start);
        out.push_back(parse_number(std::string_view(text).substr(start, colon - start), what));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (out.size() != count) throw UsageError(std::string(what) + " expects " + std::to_string(count) + " values");
    for (std::size_t i = 0; i + 1 < count; i += 2) {
        if (!(out[i] < out[i + 1])) throw UsageError(std::string(what) + " needs lower < upper");
    }
    return out;
}

void require_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw UsageError("--sigma must be positive");
}

QuadratureSpec quadrature_from_env() {
    QuadratureSpec spec;
    if (const char* v = std::getenv("GPC_QUAD_RTOL")) spec.relative_tolerance = parse_number(v, "GPC_QUAD_RTOL");
    if (const char* v = std::getenv("GPC_QUAD_PAD")) spec.support_padding = parse_number(v, "GPC_QUAD_PAD");
    try {
        spec.validate();
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

WeightSpec weight_from_token(const std::string& token) {
    try {
        return WeightSpec(parse_weight_kind(token));
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
}

/// Writes `content` to `path` via a sibling temp file and rename, or to `out` when path is empty.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw DataError("cannot write " + tmp.string());
        f << content;
        if (!f.flush()) throw DataError("cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw DataError("cannot rename output into place: " + path);
    }
}

Interval default_range(const PersistenceDiagram& d, double sigma) {
    if (d.empty()) return {0.0, 1.0};
    return {d.min_birth() - 3.0 * sigma, d.max_death() + 3.0 * sigma};
}

struct CommonOptions {
    double sigma = 1.0;
    std::string weight = "none";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_weight = true) {
    cmd->add_option("--sigma", o.sigma, "Gaussian bandwidth (default 1.0)");
    if (with_weight) cmd->add_option("--weight", o.weight, "none|life|midlife|entropy|mullife|normlife|lifespan");
    cmd->add_option("-o,--output", o.output, "Output file (default stdout)");
}

std::string matching_csv(const PersistenceDiagram& c, const PersistenceDiagram& d, const Matching& m) {
    std::string out = "c_index,d_index_or_DIAG,cost_contribution\n";
    for (const auto& [i, j] : m.pairs) {
        out += std::to_string(i) + "," + std::to_string(j) + "," + format_number(linf_distance(c[i], d[j])) + "\n";
    }
    for (const auto i : m.c_to_diagonal) {
        out += std::to_string(i) + ",DIAG," + format_number(0.5 * c[i].lifespan()) + "\n";
    }
    for (const auto j : m.d_to_diagonal) {
        out += "DIAG," + std::to_string(j) + "," + format_number(0.5 * d[j].lifespan()) + "\n";
    }
    return out;
}

std::string stability_name_header() { return "name," + report_csv_header() + "\n"; }

/// Evaluates every file present under the same name in both directories. Pairs run
/// concurrently; rows come back in sorted name order.
std::vector<std::pair<std::string, StabilityReport>> run_corpus(const fs::path& dir_c, const fs::path& dir_d,
                                                                double sigma, Theorem theorem,
                                                                const WeightSpec& spec, const VerifyOptions& opts) {
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir_c)) {
        if (!entry.is_regular_file()) continue;
        const auto name = entry.path().filename().string();
        if (fs::is_regular_file(dir_d / name)) names.push_back(name);
    }
    std::sort(names.begin(), names.end());
    if (names.empty()) throw DataError("no diagram files with matching names in both directories");

    std::vector<std::pair<std::string, StabilityReport>> rows(names.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
    for (std::size_t begin = 0; begin < names.size(); begin += workers) {
        const std::size_t end = std::min(names.size(), begin + workers);
        std::vector<std::future<StabilityReport>> jobs;
        for (std::size_t i = begin; i < end; ++i) {
            jobs.push_back(std::async(std::launch::async, [&, i] {
                const auto c = load_diagram_file((dir_c / names[i]).string());
                const auto d = load_diagram_file((dir_d / names[i]).string());
                return verify(c, d, sigma, theorem, spec, spec, opts);
            }));
        }
        for (std::size_t i = begin; i < end; ++i) rows[i] = {names[i], jobs[i - begin].get()};
    }
    return rows;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gaussian persistence curves: curves, norms, distances, stability bounds, moment probes", "gpc"};
    app.require_subcommand(1);

    CommonOptions curve_opts;
    std::string curve_in, curve_range;
    int curve_samples = 256;
    auto* curve = app.add_subcommand("curve", "Sample the Gaussian persistence curve to CSV");
    curve->add_option("input", curve_in, "Diagram CSV")->required();
    add_common(curve, curve_opts);
    curve->add_option("--range", curve_range, "A:B sample interval (use --range=A:B for negative A)");
    curve->add_option("--samples", curve_samples, "Number of samples (>= 2, default 256)");

    CommonOptions surface_opts;
    std::string surface_in, surface_grid;
    int nx = 64, ny = 64;
    auto* surface = app.add_subcommand("surface", "Evaluate the persistence surface on a grid");
    surface->add_option("input", surface_in, "Diagram CSV")->required();
    add_common(surface, surface_opts);
    surface->add_option("--grid", surface_grid, "XMIN:XMAX:YMIN:YMAX");
    surface->add_option("--nx", nx, "Grid points along x (default 64)");
    surface->add_option("--ny", ny, "Grid points along y (default 64)");

    CommonOptions norm_opts;
    std::string norm_in;
    auto* norm = app.add_subcommand("norm", "Closed-form and quadrature L1 norm of the curve");
    norm->add_option("input", norm_in, "Diagram CSV")->required();
    add_common(norm, norm_opts);

    CommonOptions dist_opts;
    std::string dist_c, dist_d, matching_out;
    bool w1_only = false;
    auto* dist = app.add_subcommand("dist", "1-Wasserstein distance and L1 curve distance");
    dist->add_option("input1", dist_c, "First diagram CSV")->required();
    dist->add_option("input2", dist_d, "Second diagram CSV")->required();
    add_common(dist, dist_opts);
    dist->add_flag("--w1-only", w1_only, "Skip the curve distance");
    dist->add_option("--matching", matching_out, "Write the optimal matching CSV to this file");

    CommonOptions stab_opts;
    stab_opts.weight.clear();
    std::string stab_c, stab_d, theorem_token_in = "A", format = "text";
    std::optional<double> lipschitz;
    auto* stab = app.add_subcommand("stability", "Check a stability bound; exit 0 iff it holds");
    stab->add_option("input1", stab_c, "First diagram CSV (or directory)")->required();
    stab->add_option("input2", stab_d, "Second diagram CSV (or directory)")->required();
    add_common(stab, stab_opts);
    stab->add_option("--theorem", theorem_token_in, "A|B|J|G|P (default A)");
    stab->add_option("--lipschitz", lipschitz, "Cross-Lipschitz constant K for theorem J");
    stab->add_option("--format", format, "text|csv (default text)");

    std::vector<std::string> moment_inputs;
    int max_order = 16;
    double moment_sigma = 1.0;
    bool tail = false;
    std::string moment_out;
    auto* moments = app.add_subcommand("moments", "Moment table of one diagram or an injectivity probe of two");
    moments->add_option("inputs", moment_inputs, "One or two diagram CSVs")->required()->expected(1, 2);
    moments->add_option("--max-order", max_order, "Largest total moment order (default 16, at most 32)");
    moments->add_option("--sigma", moment_sigma, "Surface bandwidth (default 1.0)");
    moments->add_flag("--tail", tail, "Also report a tail-dominance witness for two diagrams");
    moments->add_option("-o,--output", moment_out, "Output file (default stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    }

    try {
        const QuadratureSpec quad = quadrature_from_env();

        if (curve->parsed()) {
            require_sigma(curve_opts.sigma);
            const auto spec = weight_from_token(curve_opts.weight);
            if (curve_samples < 2) throw UsageError("--samples must be at least 2");
            std::optional<std::vector<double>> range;
            if (!curve_range.empty()) range = parse_ranges(curve_range, 2, "--range");
            const GpcModel model(load_diagram_file(curve_in), spec, curve_opts.sigma);
            const Interval r = range ? Interval{(*range)[0], (*range)[1]}
                                     : default_range(model.diagram(), curve_opts.sigma);
            const auto samples = gpc_sample(model, r.lo, r.hi, curve_samples);
            emit(curve_opts.output, curve_samples_csv(samples, model.diagram()), out);
            return kOk;
        }

        if (surface->parsed()) {
            require_sigma(surface_opts.sigma);
            const auto spec = weight_from_token(surface_opts.weight);
            if (nx < 2 || ny < 2) throw UsageError("--nx and --ny must be at least 2");
            std::optional<std::vector<double>> grid;
            if (!surface_grid.empty()) grid = parse_ranges(surface_grid, 4, "--grid");
            const GpcModel model(load_diagram_file(surface_in), spec, surface_opts.sigma);
            std::vector<double> g;
            if (grid) {
                g = *grid;
            } else {
                const auto r = default_range(model.diagram(), surface_opts.sigma);
                g = {r.lo, r.hi, r.lo, r.hi};
            }
            std::string text = "# sigma=" + format_number(surface_opts.sigma) + " weight=" + surface_opts.weight +
                               "\nx,y,value\n";
            for (int j = 0; j < ny; ++j) {
                const double y = j == ny - 1 ? g[3] : g[2] + j * (g[3] - g[2]) / (ny - 1);
                for (int i = 0; i < nx; ++i) {
                    const double x = i == nx - 1 ? g[1] : g[0] + i * (g[1] - g[0]) / (nx - 1);
                    text += format_number(x) + "," + format_number(y) + "," +
                            format_number(surface_eval(model, x, y)) + "\n";
                }
            }
            emit(surface_opts.output, text, out);
            return kOk;
        }

        if (norm->parsed()) {
            require_sigma(norm_opts.sigma);
            const auto spec = weight_from_token(norm_opts.weight);
            const GpcModel model(load_diagram_file(norm_in), spec, norm_opts.sigma);
            const auto closed = l1_norm_closed(model);
            const double quadrature = l1_norm_quadrature(model, quad);
            emit(norm_opts.output,
                 "closed," + format_number(closed.value) + "\nquadrature," + format_number(quadrature) +
                     "\nclosed_is_upper_bound," + (closed.is_upper_bound ? "true" : "false") + "\n",
                 out);
            return kOk;
        }

        if (dist->parsed()) {
            require_sigma(dist_opts.sigma);
            const auto spec = weight_from_token(dist_opts.weight);
            const auto c = load_diagram_file(dist_c);
            const auto d = load_diagram_file(dist_d);
            const auto w1 = wasserstein1(c, d);
            std::string text = "w1," + format_number(w1.cost) + "\n";
            if (!w1_only) {
                const double l1 = l1_distance(GpcModel(c, spec, dist_opts.sigma), GpcModel(d, spec, dist_opts.sigma),
                                              quad);
                text += "l1," + format_number(l1) + "\n";
            }
            if (!matching_out.empty()) emit(matching_out, matching_csv(c, d, w1.matching), out);
            emit(dist_opts.output, text, out);
            return kOk;
        }

        if (stab->parsed()) {
            require_sigma(stab_opts.sigma);
            const Theorem theorem = [&] {
                try {
                    return parse_theorem(theorem_token_in);
                } catch (const InvalidArgument& e) {
                    throw UsageError(e.what());
                }
            }();
            if (format != "text" && format != "csv") throw UsageError("--format must be text or csv");
            if (lipschitz && !(*lipschitz >= 0.0)) throw UsageError("--lipschitz must be nonnegative");
            const WeightSpec spec = stab_opts.weight.empty() ? WeightSpec(default_weight_for(theorem))
                                                             : weight_from_token(stab_opts.weight);
            VerifyOptions opts{lipschitz, quad};

            if (fs::is_directory(stab_c) && fs::is_directory(stab_d)) {
                const auto rows = run_corpus(stab_c, stab_d, stab_opts.sigma, theorem, spec, opts);
                std::string text = stability_name_header();
                bool all_hold = true;
                for (const auto& [name, report] : rows) {
                    text += name + "," + report_csv_row(report) + "\n";
                    all_hold = all_hold && report.holds;
                }
                emit(stab_opts.output, text, out);
                return all_hold ? kOk : kBoundViolated;
            }
            const auto report = verify(load_diagram_file(stab_c), load_diagram_file(stab_d), stab_opts.sigma, theorem,
                                       spec, spec, opts);
            emit(stab_opts.output,
                 format == "csv" ? report_csv_header() + "\n" + report_csv_row(report) + "\n" : report_text(report),
                 out);
            return report.holds ? kOk : kBoundViolated;
        }

        if (moments->parsed()) {
            require_sigma(moment_sigma);
            if (max_order < 0 || max_order > kMaxMixedMomentOrder) {
                throw UsageError("--max-order must lie in [0, " + std::to_string(kMaxMixedMomentOrder) + "]");
            }
            std::string text;
            if (moment_inputs.size() == 1) {
                if (tail) throw UsageError("--tail needs two diagrams");
                const auto table = moment_table(load_diagram_file(moment_inputs[0]), max_order);
                text = "m1,m2,value\n";
                for (std::size_t i = 0; i < table.orders.size(); ++i) {
                    text += std::to_string(table.orders[i].first) + "," + std::to_string(table.orders[i].second) + "," +
                            format_number(table.values[i]) + "\n";
                }
            } else {
                const auto c = load_diagram_file(moment_inputs[0]);
                const auto d = load_diagram_file(moment_inputs[1]);
                const auto probe = injectivity_probe(c, d, moment_sigma, max_order);
                switch (probe.verdict) {
                    case ProbeResult::Verdict::Identical: text = "identical\n"; break;
                    case ProbeResult::Verdict::Distinguished:
                        text = "distinguished," + std::to_string(probe.m1) + "," + std::to_string(probe.m2) + "\n";
                        break;
                    case ProbeResult::Verdict::Inconclusive:
                        text = "inconclusive," + std::to_string(probe.max_order) + "\n";
                        break;
                }
                if (tail) {
                    if (c.empty() || d.empty()) throw UsageError("--tail needs two nonempty diagrams");
                    const auto w = tail_dominance_witness(c, d, moment_sigma);
                    switch (w.status) {
                        case TailScan::Status::Found:
                            text += "tail,found," + format_number(w.t) + "," +
                                    (w.side == TailSide::PlusInfinity ? "+inf" : "-inf") + "," +
                                    (w.first_dominates ? "first" : "second") + "\n";
                            break;
                        case TailScan::Status::ExtremesCoincide: text += "tail,extremes_coincide\n"; break;
                        case TailScan::Status::Saturated: text += "tail,saturated\n"; break;
                    }
                }
            }
            emit(moment_out, text, out);
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "gpc: " << e.what() << "\n";
        return kUsageError;
    } catch (const HypothesisViolated& e) {
        err << "gpc: hypothesis violated: " << e.what() << "\n";
        return kHypothesisViolated;
    } catch (const NonConvergence& e) {
        err << "gpc: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const DataError& e) {
        err << "gpc: " << e.what() << "\n";
        return kDataError;
    } catch (const InvalidWeight& e) {
        err << "gpc: " << e.what() << "\n";
        return kDataError;
    } catch (const InvalidArgument& e) {
        err << "gpc: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "gpc: " << e.what() << "\n";
        return kDataError;
    }
    return kUsageError;
}

}  // namespace gpc::cli

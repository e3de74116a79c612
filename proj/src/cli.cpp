#include "copgraph/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "copgraph/calibrate.hpp"
#include "copgraph/edgelist.hpp"
#include "copgraph/errors.hpp"
#include "copgraph/homdensity.hpp"
#include "copgraph/metrics.hpp"
#include "copgraph/sampler.hpp"

namespace copgraph {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// 10 significant digits everywhere a double is printed
std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// Writes to a file when path is nonempty, else to stdout; binary mode
// keeps LF line endings on every platform.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw io_error("cannot open '" + path + "' for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_stdout() const { return !file_.is_open(); }
    void finish() {
        stream().flush();
        if (file_.is_open() && !file_) throw io_error("failed while writing output");
    }

private:
    std::ofstream file_;
};

// "undefined" in place of a number for metrics the graph does not have
template <typename Fn>
std::string defined_or(Fn&& fn) {
    try {
        return num(fn());
    } catch (const undefined_error&) {
        return "undefined";
    }
}

struct GenerateArgs {
    std::string graphon;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_generate(const GenerateArgs& a) {
    const Graphon g = parse_graphon(a.graphon);
    if (a.n < 1)
        throw usage_error("generate needs a node count (positional or --n)");
    const SampledGraph graph = sample(g, a.n, a.seed);
    OutputTarget target(a.out);
    // echo the descriptor exactly as the caller typed it
    write_edge_list(target.stream(), graph, a.graphon);
    target.finish();
    const double mean_degree = 2.0 * static_cast<double>(graph.edges.size()) /
                               static_cast<double>(graph.n);
    // keep the summary off stdout when the edge list itself goes there
    std::ostream& info = target.to_stdout() ? std::cerr : std::cout;
    info << "n=" << graph.n << " m=" << graph.edges.size()
         << " mean_degree=" << num(mean_degree) << "\n";
    return 0;
}

struct AnalyzeArgs {
    std::string in;
    std::string out;
    bool csv = false;
};

int run_analyze(const AnalyzeArgs& a) {
    EdgeListData data;
    if (a.in.empty()) {
        data = read_edge_list(std::cin);
    } else {
        data = read_edge_list_file(a.in);
    }
    const SampledGraph graph = graph_from_edges(data);
    const SubgraphCounts c = count_subgraphs(graph);
    const std::string clus = defined_or([&] { return global_clustering(c); });
    const std::string r_emp =
        defined_or([&] { return assortativity_newman(graph); });
    const std::string r_comb =
        defined_or([&] { return assortativity_combinatorial(c); });
    const char* sign = sign_class_name(classify_sign(c));

    OutputTarget target(a.out);
    std::ostream& os = target.stream();
    if (a.csv) {
        os << "n,m,p1,p2,p3,c3,s3,C,r_empirical,r_combinatorial,sign\n";
        os << graph.n << ',' << c.edges << ',' << c.edges << ',' << c.paths2
           << ',' << c.paths3 << ',' << c.triangles << ',' << c.stars3 << ','
           << clus << ',' << r_emp << ',' << r_comb << ',' << sign << "\n";
    } else {
        os << "n=" << graph.n << "\n";
        os << "m=" << c.edges << "\n";
        os << "p1=" << c.edges << "\n";
        os << "p2=" << c.paths2 << "\n";
        os << "p3=" << c.paths3 << "\n";
        os << "c3=" << c.triangles << "\n";
        os << "s3=" << c.stars3 << "\n";
        os << "C=" << clus << "\n";
        os << "r_empirical=" << r_emp << "\n";
        os << "r_combinatorial=" << r_comb << "\n";
        os << "sign=" << sign << "\n";
    }
    target.finish();
    return 0;
}

struct DensitiesArgs {
    std::string graphon;
    int grid_order = 0;
    std::size_t n = 1000;
    std::string out;
};

int run_densities(const DensitiesArgs& a) {
    const Graphon g = parse_graphon(a.graphon);
    const DensityReport rpt = density_report(g, a.grid_order);
    const std::string rw =
        defined_or([&] { return theoretical_assortativity(rpt, a.n); });

    OutputTarget target(a.out);
    std::ostream& os = target.stream();
    os << "descriptor,grid_order,t_p1,t_p2,t_p3,t_c3,t_s3,r_w_at_n\n";
    os << rpt.descriptor << ',' << rpt.grid_order << ',' << num(rpt.edge) << ','
       << num(rpt.path2) << ',' << num(rpt.path3) << ',' << num(rpt.triangle)
       << ',' << num(rpt.star3) << ',' << rw << "\n";
    target.finish();
    return 0;
}

struct CalibrateArgs {
    std::string graphon;
    double r_target = 0.0;
    bool have_r = false;
    std::string motif;
    double motif_target = 0.0;
    bool have_motif_target = false;
    std::size_t n = 1000;
    double tolerance = 1e-4;
    double theta_lo = kNaN;
    double theta_hi = kNaN;
    int grid_order = 0;
    int scan_points = 32;
    std::vector<std::uint64_t> verify;  // REPS SEED
    std::string curve_out;
    std::string out;
};

int run_calibrate(const CalibrateArgs& a) {
    if (a.have_r == !a.motif.empty())
        throw usage_error("pick exactly one objective: --r TARGET or "
                          "--motif NAME --target VALUE");
    const CalibrationTemplate tpl = parse_template(a.graphon);

    CalibrationOptions opts;
    if (a.have_r) {
        opts.objective = ObjectiveKind::assortativity;
        opts.target = a.r_target;
    } else {
        if (!a.have_motif_target)
            throw usage_error("--motif needs --target VALUE");
        opts.objective = ObjectiveKind::motif;
        opts.motif = motif_from_name(a.motif);
        opts.target = a.motif_target;
    }
    opts.n = a.n;
    opts.tolerance = a.tolerance;
    opts.theta_lo = a.theta_lo;
    opts.theta_hi = a.theta_hi;
    opts.grid_order = a.grid_order;
    opts.scan_points = a.scan_points;

    const CalibrationResult res = calibrate(tpl, opts);
    const Graphon fitted = instantiate(tpl, res.theta);

    if (!a.curve_out.empty()) {
        // the coarse-scan objective curve, for plotting
        OutputTarget curve(a.curve_out);
        curve.stream() << "theta,value\n";
        for (const auto& [theta, value] : res.objective_curve)
            curve.stream() << num(theta) << ',' << num(value) << "\n";
        curve.finish();
    }

    OutputTarget target(a.out);
    std::ostream& os = target.stream();
    os << "template=" << tpl.text << "\n";
    if (a.have_r) {
        os << "objective=assortativity\n";
        os << "n=" << a.n << "\n";
    } else {
        os << "objective=" << a.motif << "\n";
    }
    os << "target=" << num(opts.target) << "\n";
    os << "theta=" << num(res.theta) << "\n";
    os << "value=" << num(res.value) << "\n";
    os << "residual=" << num(res.residual) << "\n";
    os << "status=" << calibration_status_name(res.status) << "\n";
    os << "evaluations=" << res.evaluations << "\n";
    os << "grid_order=" << res.grid_order << "\n";
    os << "graphon=" << fitted.descriptor() << "\n";

    if (!a.verify.empty()) {
        const std::size_t reps = static_cast<std::size_t>(a.verify[0]);
        const std::uint64_t seed = a.verify[1];
        if (res.status == CalibrationStatus::unreachable) {
            os << "verify=skipped (target unreachable, nothing to check)\n";
        } else {
            const SamplingSummary s = verify_by_sampling(res, tpl, opts, seed, reps);
            os << "verify_reps=" << s.reps << "\n";
            os << "verify_defined_reps=" << s.defined_reps << "\n";
            os << "verify_mean_r=" << num(s.mean_r) << "\n";
            os << "verify_min_r=" << num(s.min_r) << "\n";
            os << "verify_max_r=" << num(s.max_r) << "\n";
            os << "verify_mean_C=" << num(s.mean_clustering) << "\n";
            os << "verify_gap=" << num(std::fabs(s.mean_r - res.target)) << "\n";
        }
    }
    target.finish();
    return 0;  // unreachable is an answer, not a failure
}

struct SweepArgs {
    std::string graphon;
    std::vector<double> thetas;
    double theta_lo = kNaN;
    double theta_hi = kNaN;
    int steps = 0;
    double lag = 0.0;
    std::size_t n = 1000;
    std::size_t reps = 10;
    std::uint64_t seed = 0;
    std::string out;
};

std::vector<double> resolve_grid(const SweepArgs& a) {
    if (!a.thetas.empty()) {
        if (a.steps != 0 || !std::isnan(a.theta_lo) || !std::isnan(a.theta_hi))
            throw usage_error("give either --thetas or a --theta-min/"
                              "--theta-max/--steps range, not both");
        return a.thetas;
    }
    if (std::isnan(a.theta_lo) || std::isnan(a.theta_hi) || a.steps == 0)
        throw usage_error("sweep needs --thetas, or --theta-min/--theta-max "
                          "with --steps");
    if (a.steps < 2) throw usage_error("a theta range needs at least 2 steps");
    if (!(a.theta_lo < a.theta_hi))
        throw usage_error("need theta range min < max");
    std::vector<double> grid(a.steps);
    for (int i = 0; i < a.steps; ++i)
        grid[i] = a.theta_lo + (a.theta_hi - a.theta_lo) * i / (a.steps - 1);
    return grid;
}

int run_sweep(const SweepArgs& a) {
    if (a.reps < 1) throw usage_error("sweep needs reps >= 1");
    const SweepTemplate tpl = parse_sweep_template(a.graphon);
    if (tpl.free_indices.size() == 1 && a.lag != 0.0)
        throw usage_error("--lag needs a template with two '?' slots");
    const std::vector<double> grid = resolve_grid(a);

    OutputTarget target(a.out);
    std::ostream& os = target.stream();
    os << "theta,mean_r,min_r,max_r,mean_C,reps\n";

    for (const double theta : grid) {
        // a second free slot runs lagged behind the first (equal when lag=0)
        const Graphon g =
            tpl.free_indices.size() == 1
                ? instantiate(tpl, std::vector<double>{theta})
                : instantiate(tpl, std::vector<double>{theta, theta - a.lag});
        // the same base seed in every cell: common random numbers keep the
        // sweep curve smooth in theta
        const SamplingSummary s = verify_by_sampling(g, a.n, a.seed, a.reps);
        // the reps column counts the replicates with a defined r, the ones
        // the aggregates are over
        os << num(theta) << ',' << num(s.mean_r) << ',' << num(s.min_r) << ','
           << num(s.max_r) << ',' << num(s.mean_clustering) << ','
           << s.defined_reps << "\n";
    }
    target.finish();
    return 0;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"graph generation and analysis with copula graphons"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* sub_gen = app.add_subcommand(
        "generate", "sample a graph and write its edge list");
    sub_gen->add_option("descriptor", gen.graphon,
                        "graphon descriptor, e.g. gumbel:5 or clayton:2:density")
        ->required();
    // each takes the value as a positional or as a flag, whichever is typed
    sub_gen->add_option("n,--n", gen.n, "number of vertices");
    sub_gen->add_option("seed,--seed", gen.seed, "random seed (default 0)");
    sub_gen->add_option("out,--out", gen.out, "output file (default stdout)");

    AnalyzeArgs ana;
    auto* sub_ana = app.add_subcommand(
        "analyze", "subgraph counts and assortativity of an edge list");
    sub_ana->add_option("path,--in", ana.in, "input edge list (default stdin)");
    sub_ana->add_option("--out", ana.out, "output file (default stdout)");
    sub_ana->add_flag("--csv", ana.csv, "one CSV row instead of key=value text");

    DensitiesArgs den;
    auto* sub_den = app.add_subcommand(
        "densities", "homomorphism densities and expected assortativity");
    sub_den->add_option("descriptor", den.graphon, "graphon descriptor")
        ->required();
    sub_den->add_option("grid_order,--grid-order", den.grid_order,
                        "quadrature order (default per graphon)");
    sub_den->add_option("n,--n", den.n,
                        "graph size for the r_W column (default 1000)");
    sub_den->add_option("--out", den.out, "output file (default stdout)");

    CalibrateArgs cal;
    auto* sub_cal = app.add_subcommand(
        "calibrate", "solve for the '?' theta that hits a target");
    sub_cal->add_option("template", cal.graphon,
                        "template with one '?', e.g. gumbel:?")
        ->required();
    auto* opt_r =
        sub_cal->add_option("--r", cal.r_target, "target assortativity");
    sub_cal->add_option("--motif", cal.motif,
                        "target a motif density instead: p1, p2, p3, c3 or s3");
    auto* opt_target =
        sub_cal->add_option("--target", cal.motif_target, "motif density target");
    sub_cal->add_option("--n", cal.n, "graph size the assortativity refers to");
    sub_cal->add_option("--tolerance", cal.tolerance,
                        "acceptable residual on the objective");
    sub_cal->add_option("--theta-min", cal.theta_lo, "lower search bound");
    sub_cal->add_option("--theta-max", cal.theta_hi, "upper search bound");
    sub_cal->add_option("--grid-order", cal.grid_order, "quadrature order");
    sub_cal->add_option("--scan-points", cal.scan_points,
                        "coarse scan resolution (default 32)");
    sub_cal->add_option("--verify", cal.verify,
                        "REPS SEED: sample at the solution and compare")
        ->expected(2);
    sub_cal->add_option("--curve-out", cal.curve_out,
                        "also write the objective curve as CSV");
    sub_cal->add_option("--out", cal.out, "output file (default stdout)");

    SweepArgs sw;
    auto* sub_sw = app.add_subcommand(
        "sweep", "sample across a theta grid and tabulate assortativity");
    sub_sw->add_option("template", sw.graphon,
                       "template with one or two '?' slots")
        ->required();
    sub_sw->add_option("--thetas", sw.thetas, "explicit theta values")
        ->delimiter(',');
    sub_sw->add_option("--theta-min", sw.theta_lo, "range start");
    sub_sw->add_option("--theta-max", sw.theta_hi, "range end");
    sub_sw->add_option("--steps", sw.steps, "number of range points");
    sub_sw->add_option("--lag", sw.lag,
                       "second '?' runs at theta minus this offset");
    sub_sw->add_option("--n", sw.n, "vertices per sample");
    sub_sw->add_option("--reps", sw.reps, "replicates per theta (default 10)");
    sub_sw->add_option("--seed", sw.seed, "base seed, shared across cells");
    sub_sw->add_option("--out", sw.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help and version land in the first case
    }

    try {
        if (sub_gen->parsed()) return run_generate(gen);
        if (sub_ana->parsed()) return run_analyze(ana);
        if (sub_den->parsed()) return run_densities(den);
        if (sub_cal->parsed()) {
            cal.have_r = opt_r->count() > 0;
            cal.have_motif_target = opt_target->count() > 0;
            return run_calibrate(cal);
        }
        if (sub_sw->parsed()) return run_sweep(sw);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace copgraph

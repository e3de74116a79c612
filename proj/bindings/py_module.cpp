#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "copgraph/calibrate.hpp"
#include "copgraph/edgelist.hpp"
#include "copgraph/errors.hpp"
#include "copgraph/graphon.hpp"
#include "copgraph/homdensity.hpp"
#include "copgraph/metrics.hpp"
#include "copgraph/sampler.hpp"

namespace py = pybind11;
using namespace copgraph;

namespace {

py::dict report_dict(const DensityReport& r) {
    py::dict d;
    d["descriptor"] = r.descriptor;
    d["grid_order"] = r.grid_order;
    d["edge"] = r.edge;
    d["path2"] = r.path2;
    d["path3"] = r.path3;
    d["triangle"] = r.triangle;
    d["star3"] = r.star3;
    return d;
}

py::dict calibration_dict(const CalibrationResult& res,
                          const CalibrationTemplate& tpl) {
    py::dict d;
    d["theta"] = res.theta;
    d["value"] = res.value;
    d["target"] = res.target;
    d["residual"] = res.residual;
    d["status"] = std::string(calibration_status_name(res.status));
    d["evaluations"] = res.evaluations;
    d["grid_order"] = res.grid_order;
    d["graphon"] = instantiate(tpl, res.theta).descriptor();
    d["curve"] = res.objective_curve;
    return d;
}

py::dict summary_dict(const SamplingSummary& s) {
    py::dict d;
    d["reps"] = s.reps;
    d["defined_reps"] = s.defined_reps;
    d["mean_r"] = s.mean_r;
    d["min_r"] = s.min_r;
    d["max_r"] = s.max_r;
    d["mean_clustering"] = s.mean_clustering;
    return d;
}

CalibrationOptions make_options(double target, std::size_t n, double tolerance,
                                py::object theta_min, py::object theta_max,
                                int grid_order, int scan_points) {
    CalibrationOptions opts;
    opts.target = target;
    opts.n = n;
    opts.tolerance = tolerance;
    if (!theta_min.is_none()) opts.theta_lo = theta_min.cast<double>();
    if (!theta_max.is_none()) opts.theta_hi = theta_max.cast<double>();
    opts.grid_order = grid_order;
    opts.scan_points = scan_points;
    return opts;
}

using EdgePair = std::pair<std::uint32_t, std::uint32_t>;

SampledGraph graph_from_python(std::size_t n, std::vector<EdgePair> edges) {
    if (n == 0) throw usage_error("graph needs at least one node");
    for (auto& [i, j] : edges) {
        if (i == j)
            throw usage_error("self-loop " + std::to_string(i) + "-" +
                              std::to_string(j));
        if (i > j) std::swap(i, j);
        if (j >= n)
            throw usage_error("endpoint " + std::to_string(j) +
                              " out of range for n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw usage_error("duplicate edge in input");
    EdgeListData data;
    data.n = n;
    data.edges = std::move(edges);
    return graph_from_edges(data);
}

// the metric helpers raise for degenerate graphs; None reads better here
py::object defined_or_none(double (*fn)(const SampledGraph&),
                           const SampledGraph& g) {
    try {
        return py::cast(fn(g));
    } catch (const undefined_error&) {
        return py::none();
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "random graphs with tunable degree assortativity, built from "
              "copula graphons";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const undefined_error& e) {
            PyErr_SetString(PyExc_ArithmeticError, e.what());
        } catch (const io_error& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        } catch (const error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "canonical",
        [](const std::string& d) { return parse_graphon(d).descriptor(); },
        py::arg("descriptor"),
        "Parse a graphon descriptor and return its canonical spelling.");

    m.def(
        "latent_dim",
        [](const std::string& d) { return parse_graphon(d).latent_dim(); },
        py::arg("descriptor"),
        "Number of latent coordinates each node carries.");

    m.def(
        "evaluate",
        [](const std::string& d, double u, double v) {
            return parse_graphon(d).evaluate1(u, v);
        },
        py::arg("descriptor"), py::arg("u"), py::arg("v"),
        "Edge probability W(u, v) for a one-dimensional graphon.");
    m.def(
        "evaluate",
        [](const std::string& d, const std::vector<double>& u,
           const std::vector<double>& v) {
            return parse_graphon(d).evaluate(u, v);
        },
        py::arg("descriptor"), py::arg("u"), py::arg("v"),
        "Edge probability for latent vectors, one coordinate per component.");

    m.def(
        "densities",
        [](const std::string& d, int grid_order) {
            return report_dict(density_report(parse_graphon(d), grid_order));
        },
        py::arg("descriptor"), py::arg("grid_order") = 0,
        "Quadrature homomorphism densities of the five motifs; grid_order 0 "
        "picks the per-graphon default.");

    m.def(
        "expected_assortativity",
        [](const std::string& d, std::size_t n, int grid_order) {
            return theoretical_assortativity(
                density_report(parse_graphon(d), grid_order), n);
        },
        py::arg("descriptor"), py::arg("n") = 1000, py::arg("grid_order") = 0,
        "Assortativity a size-n sample of the graphon converges to. Raises "
        "ArithmeticError when the degree function is constant.");

    m.def(
        "degree_function",
        [](const std::string& d, double u) {
            return degree_function(parse_graphon(d), u);
        },
        py::arg("descriptor"), py::arg("u"),
        "Expected normalized degree at latent position u.");
    m.def(
        "degree_function",
        [](const std::string& d, const std::vector<double>& u) {
            return degree_function(parse_graphon(d), u);
        },
        py::arg("descriptor"), py::arg("u"));

    m.def(
        "sample_edges",
        [](const std::string& d, std::size_t n, std::uint64_t seed) {
            return sample(parse_graphon(d), n, seed).edges;
        },
        py::arg("descriptor"), py::arg("n"), py::arg("seed"),
        "Sample one graph and return its sorted edge list. Deterministic in "
        "(descriptor, n, seed).");

    m.def(
        "analyze",
        [](std::size_t n, std::vector<EdgePair> edges) {
            const SampledGraph g = graph_from_python(n, std::move(edges));
            const SubgraphCounts c = count_subgraphs(g);
            py::dict d;
            d["n"] = g.n;
            d["m"] = c.edges;
            d["paths2"] = c.paths2;
            d["paths3"] = c.paths3;
            d["triangles"] = c.triangles;
            d["stars3"] = c.stars3;
            try {
                d["clustering"] = py::cast(global_clustering(c));
            } catch (const undefined_error&) {
                d["clustering"] = py::none();
            }
            d["r_newman"] = defined_or_none(&assortativity_newman, g);
            try {
                d["r_combinatorial"] = py::cast(assortativity_combinatorial(c));
            } catch (const undefined_error&) {
                d["r_combinatorial"] = py::none();
            }
            d["sign"] = std::string(sign_class_name(classify_sign(c)));
            return d;
        },
        py::arg("n"), py::arg("edges"),
        "Subgraph counts, clustering, and assortativity for an explicit "
        "edge list on nodes 0..n-1.");

    m.def(
        "calibrate_r",
        [](const std::string& tmpl, double target, std::size_t n,
           double tolerance, py::object theta_min, py::object theta_max,
           int grid_order, int scan_points) {
            const CalibrationTemplate t = parse_template(tmpl);
            CalibrationOptions opts =
                make_options(target, n, tolerance, theta_min, theta_max,
                             grid_order, scan_points);
            return calibration_dict(calibrate(t, opts), t);
        },
        py::arg("template"), py::arg("target"), py::arg("n") = 1000,
        py::arg("tolerance") = 1e-4, py::arg("theta_min") = py::none(),
        py::arg("theta_max") = py::none(), py::arg("grid_order") = 0,
        py::arg("scan_points") = 32,
        "Solve the free theta of a template like 'gumbel:?' so the expected "
        "assortativity at size n hits the target.");

    m.def(
        "calibrate_motif",
        [](const std::string& tmpl, const std::string& motif, double target,
           std::size_t n, double tolerance, py::object theta_min,
           py::object theta_max, int grid_order, int scan_points) {
            const CalibrationTemplate t = parse_template(tmpl);
            CalibrationOptions opts =
                make_options(target, n, tolerance, theta_min, theta_max,
                             grid_order, scan_points);
            opts.objective = ObjectiveKind::motif;
            opts.motif = motif_from_name(motif);
            return calibration_dict(calibrate(t, opts), t);
        },
        py::arg("template"), py::arg("motif"), py::arg("target"),
        py::arg("n") = 1000, py::arg("tolerance") = 1e-4,
        py::arg("theta_min") = py::none(), py::arg("theta_max") = py::none(),
        py::arg("grid_order") = 0, py::arg("scan_points") = 32,
        "Same search with a motif density (p1, p2, p3, c3, s3) as the "
        "objective.");

    m.def(
        "verify",
        [](const std::string& d, std::size_t n, std::uint64_t seed,
           std::size_t reps) {
            return summary_dict(
                verify_by_sampling(parse_graphon(d), n, seed, reps));
        },
        py::arg("descriptor"), py::arg("n"), py::arg("seed"),
        py::arg("reps") = 10,
        "Sample reps graphs and summarize empirical assortativity and "
        "clustering.");

    m.def(
        "sweep",
        [](const std::string& tmpl, const std::vector<double>& thetas,
           std::size_t n, std::size_t reps, std::uint64_t seed,
           py::object lag) {
            const SweepTemplate t = parse_sweep_template(tmpl);
            if (!lag.is_none() && t.free_indices.size() != 2)
                throw usage_error("lag needs a template with two free slots");
            const double lag_v = lag.is_none() ? 0.0 : lag.cast<double>();
            py::list rows;
            for (const double th : thetas) {
                const Graphon g =
                    t.free_indices.size() == 2
                        ? instantiate(t, {th, th - lag_v})
                        : instantiate(t, {th});
                py::dict row = summary_dict(verify_by_sampling(g, n, seed, reps));
                row["theta"] = th;
                rows.append(std::move(row));
            }
            return rows;
        },
        py::arg("template"), py::arg("thetas"), py::arg("n") = 1000,
        py::arg("reps") = 10, py::arg("seed") = 1,
        py::arg("lag") = py::none(),
        "Sampled assortativity summaries across a theta grid. A two-slot "
        "template varies both, the second at theta - lag.");
}

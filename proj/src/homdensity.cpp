#include "copgraph/homdensity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace copgraph {

const char* motif_name(Motif m) {
    switch (m) {
        case Motif::edge: return "p1";
        case Motif::path2: return "p2";
        case Motif::path3: return "p3";
        case Motif::triangle: return "c3";
        case Motif::star3: return "s3";
    }
    throw usage_error("unknown motif enum value");
}

Motif motif_from_name(const std::string& s) {
    if (s == "p1" || s == "edge") return Motif::edge;
    if (s == "p2" || s == "path2") return Motif::path2;
    if (s == "p3" || s == "path3") return Motif::path3;
    if (s == "c3" || s == "triangle") return Motif::triangle;
    if (s == "s3" || s == "star3") return Motif::star3;
    throw usage_error("unknown motif '" + s +
                      "' (expected p1, p2, p3, c3 or s3)");
}

double motif_value(const DensityReport& r, Motif m) {
    switch (m) {
        case Motif::edge: return r.edge;
        case Motif::path2: return r.path2;
        case Motif::path3: return r.path3;
        case Motif::triangle: return r.triangle;
        case Motif::star3: return r.star3;
    }
    throw usage_error("unknown motif enum value");
}

DensityReport tensor_density(const std::vector<DensityReport>& reports) {
    if (reports.empty())
        throw usage_error("tensor_density needs at least one report");
    DensityReport out = reports.front();
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const DensityReport& r = reports[i];
        out.edge *= r.edge;
        out.path2 *= r.path2;
        out.path3 *= r.path3;
        out.triangle *= r.triangle;
        out.star3 *= r.star3;
        if (!r.descriptor.empty())
            out.descriptor += "*" + r.descriptor;
        out.grid_order = std::max(out.grid_order, r.grid_order);
    }
    return out;
}

int default_grid_order(const Graphon& g) {
    // Clamped densities and the Frechet-Hoeffding bounds have kinks that
    // slow Gauss-Legendre convergence; give them a denser grid.
    for (const auto& c : g.components()) {
        if (c.kind == KernelKind::density) return 128;
        if (c.copula.family == Family::comonotone ||
            c.copula.family == Family::countermonotone)
            return 128;
    }
    return 64;
}

namespace {

/* All five densities for one flat rule (points with weights) and a kernel
 * matrix K over those points.
 *   lambda_i = sum_j w_j K_ij
 *   t(P1) = sum w lambda        t(P2) = sum w lambda^2
 *   t(S3) = sum w lambda^3      t(P3) = sum_ij w_i lam_i K_ij w_j lam_j
 *   t(C3) = tr(S^3) with S_ij = sqrt(w_i) K_ij sqrt(w_j)
 */
DensityReport report_from_kernel(const std::vector<double>& w,
                                 const std::vector<double>& K) {
    const std::size_t m = w.size();
    std::vector<double> lam(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m; ++j) s += w[j] * K[i * m + j];
        lam[i] = s;
    }

    DensityReport rpt;
    for (std::size_t i = 0; i < m; ++i) {
        rpt.edge += w[i] * lam[i];
        rpt.path2 += w[i] * lam[i] * lam[i];
        rpt.star3 += w[i] * lam[i] * lam[i] * lam[i];
    }
    for (std::size_t i = 0; i < m; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m; ++j)
            row += K[i * m + j] * w[j] * lam[j];
        rpt.path3 += w[i] * lam[i] * row;
    }

    std::vector<double> sqw(m);
    for (std::size_t i = 0; i < m; ++i) sqw[i] = std::sqrt(w[i]);
    std::vector<double> S(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            S[i * m + j] = sqw[i] * K[i * m + j] * sqw[j];
    // tr(S^3) = sum_ij S_ij (S^2)_ij since S is symmetric
    double tri = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s2 = 0.0;
            for (std::size_t k = 0; k < m; ++k)
                s2 += S[i * m + k] * S[k * m + j];
            tri += S[i * m + j] * s2;
        }
    }
    rpt.triangle = tri;
    return rpt;
}

DensityReport component_report(const GraphonComponent& comp,
                               const QuadratureRule& rule) {
    const std::size_t m = rule.nodes.size();
    std::vector<double> K(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = component_value(comp, rule.nodes[i], rule.nodes[j]);
            K[i * m + j] = v;
            K[j * m + i] = v;
        }
    }
    DensityReport rpt = report_from_kernel(rule.weights, K);
    rpt.grid_order = rule.order;
    return rpt;
}

int resolve_order(const Graphon& g, int grid_order) {
    if (grid_order == 0) return default_grid_order(g);
    if (grid_order < 16)
        throw usage_error("grid order below 16 is too coarse for the "
                          "density quadrature (got " +
                          std::to_string(grid_order) + ")");
    return grid_order;
}

} // namespace

DensityReport density_report(const Graphon& g, int grid_order) {
    const auto& rule = gauss_legendre(resolve_order(g, grid_order));
    DensityReport out;
    out.edge = out.path2 = out.path3 = out.triangle = out.star3 = 1.0;
    out.descriptor = g.descriptor();
    out.grid_order = rule.order;
    // densities of a tensor product are products of component densities
    for (const auto& comp : g.components()) {
        const DensityReport r = component_report(comp, rule);
        out.edge *= r.edge;
        out.path2 *= r.path2;
        out.path3 *= r.path3;
        out.triangle *= r.triangle;
        out.star3 *= r.star3;
    }
    return out;
}

DensityReport density_report_direct(const Graphon& g, int grid_order) {
    const std::size_t s = g.latent_dim();
    int order = grid_order;
    if (order <= 0) {
        // keep the composite point count manageable by default
        order = s == 1 ? default_grid_order(g)
                       : static_cast<int>(std::floor(std::pow(1024.0, 1.0 / s)));
    }
    double pts = std::pow(static_cast<double>(order), static_cast<double>(s));
    if (pts > 4096.0)
        throw size_error("composite grid would have " + std::to_string(pts) +
                         " points; lower the grid order");
    const auto& rule = gauss_legendre(order);
    const std::size_t m = static_cast<std::size_t>(pts + 0.5);

    // enumerate all s-tuples of axis nodes, weights multiply
    std::vector<std::vector<double>> points(m, std::vector<double>(s));
    std::vector<double> w(m, 1.0);
    for (std::size_t p = 0; p < m; ++p) {
        std::size_t rest = p;
        for (std::size_t axis = 0; axis < s; ++axis) {
            const std::size_t idx = rest % order;
            rest /= order;
            points[p][axis] = rule.nodes[idx];
            w[p] *= rule.weights[idx];
        }
    }

    std::vector<double> K(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = g.evaluate(points[i], points[j]);
            K[i * m + j] = v;
            K[j * m + i] = v;
        }
    }
    DensityReport rpt = report_from_kernel(w, K);
    rpt.descriptor = g.descriptor();
    rpt.grid_order = order;
    return rpt;
}

double t_path(const Graphon& g, int k, int grid_order) {
    if (k < 1 || k > 3)
        throw usage_error("path density supports 1, 2 or 3 edges, got " +
                          std::to_string(k));
    const DensityReport r = density_report(g, grid_order);
    return k == 1 ? r.edge : (k == 2 ? r.path2 : r.path3);
}

double t_star(const Graphon& g, int k, int grid_order) {
    if (k < 1)
        throw usage_error("star density needs k >= 1, got " + std::to_string(k));
    const auto& rule = gauss_legendre(resolve_order(g, grid_order));
    const std::size_t m = rule.nodes.size();
    // int lambda^k factors over tensor components like every star does
    double out = 1.0;
    for (const auto& comp : g.components()) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double lam = 0.0;
            for (std::size_t j = 0; j < m; ++j)
                lam += rule.weights[j] *
                       component_value(comp, rule.nodes[i], rule.nodes[j]);
            acc += rule.weights[i] * std::pow(lam, static_cast<double>(k));
        }
        out *= acc;
    }
    return out;
}

double t_cycle3(const Graphon& g, int grid_order) {
    return density_report(g, grid_order).triangle;
}

double degree_function(const Graphon& g, double u, int grid_order) {
    if (g.latent_dim() != 1)
        throw size_error("degree function needs a one-dimensional graphon");
    if (!(u >= 0.0 && u <= 1.0))
        throw domain_error("degree function argument must lie in [0,1]");
    const auto& rule = gauss_legendre(resolve_order(g, grid_order));
    double s = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        s += rule.weights[j] * g.evaluate1(u, rule.nodes[j]);
    return s;
}

double degree_function(const Graphon& g, const std::vector<double>& u,
                       int grid_order) {
    const auto& comps = g.components();
    if (u.size() != comps.size())
        throw size_error("degree function got a " + std::to_string(u.size()) +
                         "-dimensional point for a " +
                         std::to_string(comps.size()) +
                         "-dimensional graphon");
    const auto& rule = gauss_legendre(resolve_order(g, grid_order));
    // lambda of a tensor graphon is the product of component lambdas
    double out = 1.0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (!(u[c] >= 0.0 && u[c] <= 1.0))
            throw domain_error("degree function argument must lie in [0,1]");
        double lam = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            lam += rule.weights[j] *
                   component_value(comps[c], u[c], rule.nodes[j]);
        out *= lam;
    }
    return out;
}

double cumulative_degree_distribution(const Graphon& g, double u,
                                      int grid_order) {
    if (g.latent_dim() != 1)
        throw size_error("cumulative degree needs a one-dimensional graphon");
    if (!(u >= 0.0 && u <= 1.0))
        throw domain_error("cumulative degree argument must lie in [0,1]");
    const int order = resolve_order(g, grid_order);
    const auto& rule = gauss_legendre(order);
    // integrate lambda over [0,u] with the rule rescaled to that interval
    double s = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        s += u * rule.weights[j] * degree_function(g, u * rule.nodes[j], order);
    return s;
}

double theoretical_assortativity(const DensityReport& r, std::size_t n) {
    if (n < 4)
        throw domain_error("assortativity needs n >= 4, got " + std::to_string(n));
    if (r.edge <= 0.0)
        throw undefined_error("assortativity undefined: edge density is zero");
    const double nn = static_cast<double>(n);
    const double ratio = r.path2 * r.path2 / r.edge;
    const double num = (nn - 3.0) * r.path3 +
                       nn * nn / ((nn - 1.0) * (nn - 2.0)) * r.triangle -
                       (nn - 2.0) * ratio;
    const double den = (nn - 3.0) * r.star3 + r.path2 - (nn - 2.0) * ratio;
    if (den == 0.0)
        throw undefined_error("assortativity undefined: end-degree variance "
                              "term vanishes");
    return num / den;
}

double theoretical_assortativity(const Graphon& g, std::size_t n,
                                 int grid_order) {
    return theoretical_assortativity(density_report(g, grid_order), n);
}

} // namespace copgraph

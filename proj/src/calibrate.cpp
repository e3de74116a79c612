#include "copgraph/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace copgraph {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

SweepTemplate parse_sweep_template(const std::string& descriptor) {
    const auto parts = split(descriptor, '*');
    SweepTemplate tpl;
    tpl.text = descriptor;
    std::string filled;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) filled += '*';
        auto fields = split(parts[i], ':');
        bool has_placeholder = false;
        for (std::size_t f = 0; f < fields.size(); ++f) {
            if (fields[f] != "?") continue;
            if (f != 1)
                throw usage_error("'?' must stand in the theta position, as in "
                                  "family:?, got '" + parts[i] + "'");
            has_placeholder = true;
        }
        if (has_placeholder) {
            if (!family_has_theta(family_from_name(fields[0])))
                throw usage_error("'" + fields[0] + "' has no parameter to calibrate");
            tpl.free_indices.push_back(i);
            fields[1] = "1";  // valid for every parametric family
        }
        for (std::size_t f = 0; f < fields.size(); ++f) {
            if (f) filled += ':';
            filled += fields[f];
        }
    }
    if (tpl.free_indices.empty())
        throw usage_error("template needs a '?' placeholder, e.g. gumbel:?");
    if (tpl.free_indices.size() > 2)
        throw usage_error("at most two '?' placeholders are supported, got " +
                          std::to_string(tpl.free_indices.size()));
    tpl.components = parse_graphon(filled).components();
    return tpl;
}

Graphon instantiate(const SweepTemplate& tpl, const std::vector<double>& thetas) {
    if (thetas.size() != tpl.free_indices.size())
        throw usage_error("template has " +
                          std::to_string(tpl.free_indices.size()) +
                          " free slots but got " + std::to_string(thetas.size()) +
                          " theta values");
    auto comps = tpl.components;
    for (std::size_t k = 0; k < thetas.size(); ++k)
        comps[tpl.free_indices[k]].copula.theta = thetas[k];
    return Graphon(std::move(comps));
}

CalibrationTemplate parse_template(const std::string& descriptor) {
    SweepTemplate sw = parse_sweep_template(descriptor);
    if (sw.free_indices.size() != 1)
        throw usage_error("calibration template needs exactly one '?', got " +
                          std::to_string(sw.free_indices.size()) + " in '" +
                          descriptor + "'");
    CalibrationTemplate tpl;
    tpl.components = std::move(sw.components);
    tpl.free_index = sw.free_indices[0];
    tpl.text = descriptor;
    return tpl;
}

Graphon instantiate(const CalibrationTemplate& tpl, double theta) {
    auto comps = tpl.components;
    comps[tpl.free_index].copula.theta = theta;
    return Graphon(std::move(comps));
}

const char* calibration_status_name(CalibrationStatus s) {
    switch (s) {
        case CalibrationStatus::converged: return "converged";
        case CalibrationStatus::boundary: return "boundary";
        case CalibrationStatus::unreachable: return "unreachable";
    }
    throw usage_error("unknown calibration status");
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Objective {
    const CalibrationTemplate& tpl;
    const CalibrationOptions& opts;
    mutable int evaluations = 0;
    mutable int grid_order = 0;

    // value(theta) - target; NaN where the objective is undefined
    double operator()(double theta) const {
        ++evaluations;
        const Graphon g = instantiate(tpl, theta);
        const DensityReport rpt = density_report(g, opts.grid_order);
        grid_order = rpt.grid_order;
        double value;
        if (opts.objective == ObjectiveKind::assortativity) {
            try {
                value = theoretical_assortativity(rpt, opts.n);
            } catch (const undefined_error&) {
                return kNaN;
            }
        } else {
            value = motif_value(rpt, opts.motif);
        }
        return value - opts.target;
    }
};

void resolve_bounds(const CalibrationTemplate& tpl,
                    const CalibrationOptions& opts, double& lo, double& hi) {
    lo = opts.theta_lo;
    hi = opts.theta_hi;
    if (std::isnan(lo) || std::isnan(hi)) {
        double dlo, dhi;
        default_theta_bounds(tpl.components[tpl.free_index].copula.family, dlo,
                             dhi);
        if (std::isnan(lo)) lo = dlo;
        if (std::isnan(hi)) hi = dhi;
    }
    if (!(lo < hi))
        throw usage_error("need theta-min < theta-max, got [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    instantiate(tpl, lo);  // let invalid bounds fail before the search
    instantiate(tpl, hi);
}

void check_options(const CalibrationOptions& opts) {
    if (opts.tolerance <= 0.0)
        throw usage_error("calibration tolerance must be positive");
    if (opts.objective == ObjectiveKind::assortativity) {
        if (opts.n < 4) throw usage_error("assortativity target needs n >= 4");
        if (!(opts.target > -1.0 && opts.target < 1.0))
            throw usage_error("assortativity target must lie in (-1, 1)");
    } else if (!(opts.target > 0.0 && opts.target < 1.0)) {
        throw usage_error("motif density target must lie in (0, 1)");
    }
}

} // namespace

ObjectiveCurve scan(const CalibrationTemplate& tpl,
                    const CalibrationOptions& opts, int grid_points) {
    check_options(opts);
    if (grid_points < 3)
        throw usage_error("scan needs at least 3 grid points");
    double lo, hi;
    resolve_bounds(tpl, opts, lo, hi);
    const Objective f{tpl, opts};

    ObjectiveCurve curve;
    curve.points.reserve(grid_points);
    bool nondec = true, noninc = true;
    double last = kNaN;
    for (int i = 0; i < grid_points; ++i) {
        const double theta = lo + (hi - lo) * i / (grid_points - 1);
        const double sh = f(theta);
        const double value = std::isnan(sh) ? kNaN : sh + opts.target;
        curve.points.emplace_back(theta, value);
        if (std::isnan(value)) continue;
        if (!std::isnan(last)) {
            if (value < last) nondec = false;
            if (value > last) noninc = false;
        }
        last = value;
    }
    curve.monotone = nondec || noninc;
    return curve;
}

CalibrationResult calibrate(const CalibrationTemplate& tpl,
                            const CalibrationOptions& opts) {
    check_options(opts);
    if (opts.scan_points < 3)
        throw usage_error("calibration scan needs at least 3 points");
    double lo, hi;
    resolve_bounds(tpl, opts, lo, hi);

    const Objective f{tpl, opts};

    // coarse scan, skipping undefined points
    const int m = opts.scan_points;
    std::vector<double> thetas(m), values(m);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(m);
    int best = -1;
    for (int i = 0; i < m; ++i) {
        thetas[i] = lo + (hi - lo) * i / (m - 1);
        values[i] = f(thetas[i]);
        curve.emplace_back(thetas[i], std::isnan(values[i])
                                          ? kNaN
                                          : values[i] + opts.target);
        if (std::isnan(values[i])) continue;
        if (best < 0 || std::fabs(values[i]) < std::fabs(values[best])) best = i;
    }
    if (best < 0)
        throw numeric_error("objective is undefined on all of [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");

    auto finish = [&](double theta, double resid) {
        CalibrationResult res;
        res.theta = theta;
        res.target = opts.target;
        res.residual = resid;
        res.value = opts.target + resid;
        res.objective_curve = curve;
        res.evaluations = f.evaluations;
        res.grid_order = f.grid_order;
        const double pad = 1e-6 * (hi - lo);
        if (std::fabs(resid) <= opts.tolerance)
            res.status = CalibrationStatus::converged;
        else if (std::fabs(resid) > 10.0 * opts.tolerance)
            res.status = CalibrationStatus::unreachable;
        else if (theta <= lo + pad || theta >= hi - pad)
            res.status = CalibrationStatus::boundary;
        else
            res.status = CalibrationStatus::unreachable;
        return res;
    };

    // bisection on the first sign change between consecutive defined points
    int prev = -1;
    for (int i = 0; i < m; ++i) {
        if (std::isnan(values[i])) continue;
        if (values[i] == 0.0) return finish(thetas[i], 0.0);
        if (prev >= 0 && std::signbit(values[prev]) != std::signbit(values[i])) {
            double a = thetas[prev], fa = values[prev];
            double b = thetas[i];
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = 0.5 * (a + b);
                if (b - a < 1e-13 * std::fmax(1.0, std::fabs(mid))) break;
                const double fm = f(mid);
                if (std::isnan(fm) || fm == 0.0 ||
                    std::signbit(fm) == std::signbit(fa)) {
                    // push the NaN edge inward too; the root sits beyond it
                    a = mid;
                    if (!std::isnan(fm)) fa = fm;
                } else {
                    b = mid;
                }
            }
            const double theta = 0.5 * (a + b);
            return finish(theta, f(theta));
        }
        prev = i;
    }

    // no sign change: golden-section on |residual| around the best scan point
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = thetas[std::max(best - 1, 0)];
    double b = thetas[std::min(best + 1, m - 1)];
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = std::fabs(f(x1)), f2 = std::fabs(f(x2));
    for (int iter = 0; iter < 200 && (b - a) > 1e-10 * std::fmax(1.0, std::fabs(b));
         ++iter) {
        if (std::isnan(f1)) { a = x1; x1 = b - gr * (b - a); f1 = std::fabs(f(x1)); continue; }
        if (std::isnan(f2)) { b = x2; x2 = a + gr * (b - a); f2 = std::fabs(f(x2)); continue; }
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - gr * (b - a); f1 = std::fabs(f(x1));
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + gr * (b - a); f2 = std::fabs(f(x2));
        }
    }
    double theta = 0.5 * (a + b);
    double resid = f(theta);
    // keep the scan minimum when refinement ran into an undefined pocket
    if (std::isnan(resid) || std::fabs(resid) > std::fabs(values[best])) {
        theta = thetas[best];
        resid = values[best];
    }
    return finish(theta, resid);
}

SamplingSummary verify_by_sampling(const Graphon& g, std::size_t n,
                                   std::uint64_t base_seed, std::size_t reps) {
    if (reps == 0) throw usage_error("sampling check needs reps >= 1");
    SamplingSummary s;
    s.reps = reps;
    double sum_r = 0.0, sum_c = 0.0;
    std::size_t clus_reps = 0;
    for (std::size_t k = 0; k < reps; ++k) {
        const SampledGraph graph = sample(g, n, derive_seed(base_seed, k));
        try {
            const double r = assortativity_newman(graph);
            if (s.defined_reps == 0) {
                s.min_r = s.max_r = r;
            } else {
                s.min_r = std::fmin(s.min_r, r);
                s.max_r = std::fmax(s.max_r, r);
            }
            ++s.defined_reps;
            sum_r += r;
        } catch (const undefined_error&) {
            // regular replicate; recorded through reps - defined_reps
        }
        try {
            sum_c += global_clustering(count_subgraphs(graph));
            ++clus_reps;
        } catch (const undefined_error&) {
        }
    }
    s.mean_r = s.defined_reps ? sum_r / static_cast<double>(s.defined_reps) : kNaN;
    if (s.defined_reps == 0) s.min_r = s.max_r = kNaN;
    s.mean_clustering = clus_reps ? sum_c / static_cast<double>(clus_reps) : kNaN;
    return s;
}

SamplingSummary verify_by_sampling(const CalibrationResult& result,
                                   const CalibrationTemplate& tpl,
                                   const CalibrationOptions& opts,
                                   std::uint64_t base_seed, std::size_t reps) {
    if (result.status == CalibrationStatus::unreachable)
        throw usage_error("cannot verify an unreachable calibration; the "
                          "fitted theta does not meet the target");
    return verify_by_sampling(instantiate(tpl, result.theta), opts.n,
                              base_seed, reps);
}

} // namespace copgraph

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include "copgraph/homdensity.hpp"
#include "copgraph/metrics.hpp"

namespace copgraph {

/* A graphon descriptor with exactly one theta replaced by '?', e.g.
 * "gumbel:?" or "frank:?:density*pi". Calibration searches that slot. */
struct CalibrationTemplate {
    std::vector<GraphonComponent> components;  // free slot holds theta = 1
    std::size_t free_index = 0;
    std::string text;  // original descriptor, for reporting
};

CalibrationTemplate parse_template(const std::string& descriptor);
Graphon instantiate(const CalibrationTemplate& tpl, double theta);

// Same idea for parameter sweeps, which may vary one or two slots.
struct SweepTemplate {
    std::vector<GraphonComponent> components;
    std::vector<std::size_t> free_indices;  // in component order
    std::string text;
};

SweepTemplate parse_sweep_template(const std::string& descriptor);
Graphon instantiate(const SweepTemplate& tpl, const std::vector<double>& thetas);

enum class ObjectiveKind { assortativity, motif };

enum class CalibrationStatus { converged, boundary, unreachable };
const char* calibration_status_name(CalibrationStatus s);

struct CalibrationOptions {
    ObjectiveKind objective = ObjectiveKind::assortativity;
    Motif motif = Motif::edge;  // only read when objective == motif
    double target = 0.0;
    std::size_t n = 1000;       // graph size the assortativity refers to
    double tolerance = 1e-4;    // on the objective value
    // NaN means "use the family defaults"
    double theta_lo = std::numeric_limits<double>::quiet_NaN();
    double theta_hi = std::numeric_limits<double>::quiet_NaN();
    int grid_order = 0;         // 0 picks the per-graphon default
    int scan_points = 32;       // coarse scan resolution
};

/* The objective evaluated over a uniform theta grid. Undefined points keep
 * a NaN value; monotone says whether the defined values are nondecreasing
 * or nonincreasing across the grid. */
struct ObjectiveCurve {
    std::vector<std::pair<double, double>> points;  // (theta, value)
    bool monotone = false;
};

ObjectiveCurve scan(const CalibrationTemplate& tpl,
                    const CalibrationOptions& opts, int grid_points);

/* Deterministic search: a linear coarse scan locates a sign change of
 * value(theta) - target, refined by bisection; without a sign change the
 * best scan cell is refined by golden-section on |value - target|.
 * Scan points where the objective is undefined (NaN) are skipped.
 *   converged    residual within tolerance
 *   boundary     residual within 10x tolerance at a search bound
 *   unreachable  any other miss, wherever theta landed */
struct CalibrationResult {
    double theta = 0.0;
    double value = 0.0;
    double target = 0.0;
    double residual = 0.0;  // value - target
    CalibrationStatus status = CalibrationStatus::unreachable;
    std::vector<std::pair<double, double>> objective_curve;  // the coarse scan
    int evaluations = 0;
    int grid_order = 0;
};

CalibrationResult calibrate(const CalibrationTemplate& tpl,
                            const CalibrationOptions& opts);

// Monte Carlo check of a calibrated (or any) graphon. Replicate k uses
// seed derive_seed(base_seed, k). Throws usage_error when reps == 0.
struct SamplingSummary {
    std::size_t reps = 0;
    std::size_t defined_reps = 0;  // replicates with defined assortativity
    double mean_r = 0.0;
    double min_r = 0.0;
    double max_r = 0.0;
    double mean_clustering = 0.0;
};

SamplingSummary verify_by_sampling(const Graphon& g, std::size_t n,
                                   std::uint64_t base_seed, std::size_t reps);

// Convenience form for a finished calibration; refuses unreachable results
// since there is nothing meaningful to verify at that theta.
SamplingSummary verify_by_sampling(const CalibrationResult& result,
                                   const CalibrationTemplate& tpl,
                                   const CalibrationOptions& opts,
                                   std::uint64_t base_seed, std::size_t reps);

} // namespace copgraph

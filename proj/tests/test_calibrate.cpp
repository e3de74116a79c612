#include <doctest.h>

#include <cmath>
#include <vector>

#include "copgraph/calibrate.hpp"
#include "copgraph/errors.hpp"

using namespace copgraph;

TEST_CASE("calibration templates") {
    const CalibrationTemplate tpl = parse_template("gumbel:?");
    CHECK(tpl.text == "gumbel:?");
    CHECK(tpl.free_index == 0);
    CHECK(instantiate(tpl, 2.5).descriptor() == "gumbel:2.5");

    const CalibrationTemplate tensor =
        parse_template("joe:2:density*gumbel:?:density");
    CHECK(tensor.free_index == 1);
    CHECK(instantiate(tensor, 4.0).descriptor() ==
          "joe:2:density*gumbel:4:density");

    CHECK_THROWS_AS(parse_template("gumbel:3"), usage_error);     // no slot
    CHECK_THROWS_AS(parse_template("gumbel:?*frank:?"), usage_error);
    CHECK_THROWS_AS(parse_template("pi:?"), usage_error);         // no theta
    CHECK_THROWS_AS(parse_template("gumbel:2:?"), usage_error);   // kind slot
    CHECK_THROWS_AS(instantiate(parse_template("gumbel:?"), 0.5), domain_error);
}

TEST_CASE("sweep templates take one or two slots") {
    const SweepTemplate one = parse_sweep_template("gumbel:?");
    CHECK(one.free_indices == std::vector<std::size_t>{0});
    CHECK(instantiate(one, {3.0}).descriptor() == "gumbel:3");

    const SweepTemplate two =
        parse_sweep_template("frank:?:density*frank:?:density");
    CHECK(two.free_indices == std::vector<std::size_t>{0, 1});
    CHECK(instantiate(two, {-2.0, -3.0}).descriptor() ==
          "frank:-2:density*frank:-3:density");

    CHECK_THROWS_AS(parse_sweep_template("pi"), usage_error);
    CHECK_THROWS_AS(parse_sweep_template("gumbel:?*joe:?*frank:?"), usage_error);
    CHECK_THROWS_AS(instantiate(two, {1.0}), usage_error);
}

TEST_CASE("option validation") {
    const CalibrationTemplate tpl = parse_template("gumbel:?");
    CalibrationOptions opts;
    opts.target = 0.05;
    opts.tolerance = -1.0;
    CHECK_THROWS_AS(calibrate(tpl, opts), usage_error);
    opts.tolerance = 1e-4;
    opts.scan_points = 2;
    CHECK_THROWS_AS(calibrate(tpl, opts), usage_error);
    opts.scan_points = 32;
    opts.n = 3;
    CHECK_THROWS_AS(calibrate(tpl, opts), usage_error);
    opts.n = 1000;
    opts.target = 1.0;
    CHECK_THROWS_AS(calibrate(tpl, opts), usage_error);
    opts.target = -1.0;
    CHECK_THROWS_AS(calibrate(tpl, opts), usage_error);
    opts.target = 0.05;
    opts.theta_lo = 5.0;
    opts.theta_hi = 2.0;
    CHECK_THROWS_AS(calibrate(tpl, opts), usage_error);
    opts.theta_lo = opts.theta_hi =
        std::numeric_limits<double>::quiet_NaN();
    opts.objective = ObjectiveKind::motif;
    opts.motif = Motif::edge;
    opts.target = 0.0;
    CHECK_THROWS_AS(calibrate(tpl, opts), usage_error);
    opts.target = 1.0;
    CHECK_THROWS_AS(calibrate(tpl, opts), usage_error);
}

TEST_CASE("scan reports the objective curve and its monotonicity") {
    const CalibrationTemplate tpl = parse_template("gumbel:?");
    CalibrationOptions opts;
    opts.target = 0.0;  // curve of r itself
    const ObjectiveCurve curve = scan(tpl, opts, 10);
    REQUIRE(curve.points.size() == 10);
    CHECK(curve.points.front().first == doctest::Approx(1.0));
    CHECK(curve.points.back().first == doctest::Approx(30.0));
    CHECK(curve.monotone);
    // gumbel runs from neutral toward positive dependence
    CHECK(std::fabs(curve.points.front().second) < 0.01);
    CHECK(curve.points.back().second > 0.1);
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        CHECK(curve.points[i].second >= curve.points[i - 1].second - 1e-12);

    // the dip-and-rise shape of the clamped frank kernel is not monotone
    CalibrationOptions wide;
    wide.target = 0.0;
    wide.theta_lo = -10.0;
    wide.theta_hi = 10.0;
    const ObjectiveCurve f =
        scan(parse_template("frank:?:density"), wide, 15);
    CHECK_FALSE(f.monotone);

    CHECK_THROWS_AS(scan(tpl, opts, 2), usage_error);
}

TEST_CASE("scan keeps NaN for parameter points without a defined objective") {
    // at theta = -1 the clayton density kernel is zero almost everywhere
    CalibrationOptions opts;
    opts.target = 0.1;
    opts.theta_lo = -1.0;
    opts.theta_hi = 5.0;
    const ObjectiveCurve curve =
        scan(parse_template("clayton:?:density"), opts, 7);
    CHECK(std::isnan(curve.points.front().second));
    CHECK_FALSE(std::isnan(curve.points.back().second));
}

TEST_CASE("solving gumbel for a small positive assortativity converges") {
    const CalibrationTemplate tpl = parse_template("gumbel:?");
    CalibrationOptions opts;
    opts.target = 0.05;
    const CalibrationResult res = calibrate(tpl, opts);
    CHECK(res.status == CalibrationStatus::converged);
    CHECK(res.theta == doctest::Approx(1.3504).epsilon(2e-3));
    CHECK(std::fabs(res.residual) <= opts.tolerance);
    CHECK(res.value == doctest::Approx(0.05).epsilon(1e-3));
    CHECK(res.target == 0.05);
    CHECK(res.grid_order == 64);
    CHECK(res.evaluations > 32);
    REQUIRE(res.objective_curve.size() == 32);
    CHECK(res.objective_curve.front().first == doctest::Approx(1.0));
    CHECK(res.objective_curve.back().first == doctest::Approx(30.0));
    CHECK(std::string(calibration_status_name(res.status)) == "converged");

    // bit-for-bit deterministic
    const CalibrationResult again = calibrate(tpl, opts);
    CHECK(again.theta == res.theta);
    CHECK(again.evaluations == res.evaluations);
}

TEST_CASE("an assortativity beyond the family's reach is unreachable") {
    const CalibrationTemplate tpl = parse_template("gumbel:?");
    CalibrationOptions opts;
    opts.target = 0.9;
    const CalibrationResult res = calibrate(tpl, opts);
    CHECK(res.status == CalibrationStatus::unreachable);
    // the best it can do sits far from the target even at the bound
    CHECK(std::fabs(res.residual) > 10.0 * opts.tolerance);
    CHECK(std::string(calibration_status_name(res.status)) == "unreachable");
}

TEST_CASE("an interior minimum that misses the target is unreachable too") {
    CalibrationOptions opts;
    opts.target = -0.4;
    const CalibrationResult res =
        calibrate(parse_template("frank:?:density"), opts);
    CHECK(res.status == CalibrationStatus::unreachable);
    CHECK(res.value > -0.1);  // the curve never gets anywhere near -0.4
}

TEST_CASE("a near miss pinned at a search bound reports boundary") {
    // target the edge density just above what theta = 30 reaches, by an
    // amount between tolerance and ten times tolerance
    const CalibrationTemplate tpl = parse_template("gumbel:?");
    const double top = t_path(instantiate(tpl, 30.0), 1);
    CalibrationOptions opts;
    opts.objective = ObjectiveKind::motif;
    opts.motif = Motif::edge;
    opts.tolerance = 1e-4;
    opts.target = top + 5.0 * opts.tolerance;
    const CalibrationResult res = calibrate(tpl, opts);
    CHECK(res.status == CalibrationStatus::boundary);
    CHECK(res.theta == doctest::Approx(30.0).epsilon(1e-4));
    CHECK(std::fabs(res.residual) > opts.tolerance);
    CHECK(std::fabs(res.residual) <= 10.0 * opts.tolerance);
}

TEST_CASE("motif calibration bisects the first crossing of the target") {
    // the clayton density edge density runs 0 at theta = -1, peaks at 1
    // near theta = 0 and decays, so 0.5 is crossed more than once; the
    // solver settles the first crossing. The clamp makes the quadrature
    // objective move in steps of a few 1e-4 there, hence the loose
    // tolerance.
    CalibrationOptions opts;
    opts.objective = ObjectiveKind::motif;
    opts.motif = Motif::edge;
    opts.target = 0.5;
    opts.theta_lo = -1.0;
    opts.theta_hi = 5.0;
    opts.tolerance = 1e-3;
    const CalibrationResult res =
        calibrate(parse_template("clayton:?:density"), opts);
    CHECK(res.status == CalibrationStatus::converged);
    CHECK(res.theta > -1.0);
    CHECK(res.theta < 0.0);
    CHECK(res.value == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(res.objective_curve.front().second == doctest::Approx(0.0));
    CHECK(res.objective_curve.back().second > 0.4);
}

TEST_CASE("sampling summaries") {
    const Graphon g = parse_graphon("gumbel:3");
    const SamplingSummary s = verify_by_sampling(g, 200, 77, 5);
    CHECK(s.reps == 5);
    CHECK(s.defined_reps == 5);
    CHECK(s.min_r <= s.mean_r);
    CHECK(s.mean_r <= s.max_r);
    CHECK(s.mean_clustering > 0.0);
    CHECK(s.mean_clustering < 1.0);
    const SamplingSummary t = verify_by_sampling(g, 200, 77, 5);
    CHECK(t.mean_r == s.mean_r);  // same seeds, same graphs
    CHECK_THROWS_AS(verify_by_sampling(g, 200, 77, 0), usage_error);
}

TEST_CASE("verification refuses an unreachable calibration") {
    const CalibrationTemplate tpl = parse_template("gumbel:?");
    CalibrationOptions opts;
    opts.target = 0.9;
    const CalibrationResult res = calibrate(tpl, opts);
    REQUIRE(res.status == CalibrationStatus::unreachable);
    CHECK_THROWS_AS(verify_by_sampling(res, tpl, opts, 1, 3), usage_error);

    opts.target = 0.05;
    const CalibrationResult ok = calibrate(tpl, opts);
    REQUIRE(ok.status == CalibrationStatus::converged);
    const SamplingSummary s = verify_by_sampling(ok, tpl, opts, 1, 3);
    CHECK(s.reps == 3);
    CHECK(s.defined_reps == 3);
    CHECK(std::fabs(s.mean_r - 0.05) < 0.05);
}

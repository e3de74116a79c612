#include <doctest.h>

#include <cmath>

#include "copgraph/copula.hpp"
#include "copgraph/errors.hpp"
#include "copgraph/graphon.hpp"

using namespace copgraph;

TEST_CASE("descriptors parse and print in canonical form") {
    CHECK(parse_graphon("gumbel:5").descriptor() == "gumbel:5");
    CHECK(parse_graphon("gumbel:5.0").descriptor() == "gumbel:5");
    CHECK(parse_graphon("gumbel:5:cdf").descriptor() == "gumbel:5");
    CHECK(parse_graphon("clayton:2:density").descriptor() == "clayton:2:density");
    CHECK(parse_graphon("clayton:0.10").descriptor() == "clayton:0.1");
    CHECK(parse_graphon("frank:-2.5:density").descriptor() == "frank:-2.5:density");
    CHECK(parse_graphon("pi").descriptor() == "pi");
    CHECK(parse_graphon("independence").descriptor() == "pi");
    CHECK(parse_graphon("comonotone").descriptor() == "cplus");
    CHECK(parse_graphon("countermonotone").descriptor() == "cminus");
    CHECK(parse_graphon("frank:3*pi*gumbel:1.5").descriptor() ==
          "frank:3*pi*gumbel:1.5");
    // canonical output reparses to the same thing
    const Graphon g = parse_graphon("joe:2:density*clayton:-0.5");
    CHECK(parse_graphon(g.descriptor()).descriptor() == g.descriptor());
}

TEST_CASE("parse rejects malformed descriptors") {
    CHECK_THROWS_AS(parse_graphon(""), usage_error);
    CHECK_THROWS_AS(parse_graphon("gumbel"), usage_error);      // theta missing
    CHECK_THROWS_AS(parse_graphon("pi:3"), usage_error);        // theta unwanted
    CHECK_THROWS_AS(parse_graphon("gumbel:2:pdf"), usage_error);
    CHECK_THROWS_AS(parse_graphon("gumbel:2:cdf:x"), usage_error);
    CHECK_THROWS_AS(parse_graphon("pi**pi"), usage_error);
    CHECK_THROWS_AS(parse_graphon("gaussian:2"), usage_error);
    CHECK_THROWS_AS(parse_graphon("gumbel:abc"), usage_error);
    CHECK_THROWS_AS(parse_graphon("gumbel:0.5"), domain_error);  // theta < 1
    CHECK_THROWS_AS(parse_graphon("clayton:-2:density"), domain_error);
    // the singular bound copulas have no density kernel to clamp
    CHECK_THROWS_AS(parse_graphon("cminus:density"), usage_error);
    CHECK_THROWS_AS(parse_graphon("cplus:density"), usage_error);
}

TEST_CASE("latent dimension follows the component count") {
    CHECK(parse_graphon("pi").latent_dim() == 1);
    CHECK(parse_graphon("frank:3*pi*gumbel:1.5").latent_dim() == 3);
    CHECK(parse_graphon("joe:2:density*gumbel:3:density").latent_dim() == 2);
}

TEST_CASE("cdf kind evaluates the copula itself") {
    CHECK(parse_graphon("pi").evaluate1(0.3, 0.7) ==
          doctest::Approx(0.21).epsilon(1e-15));
    CHECK(parse_graphon("cplus").evaluate1(0.3, 0.7) == doctest::Approx(0.3));
    CHECK(parse_graphon("cminus").evaluate1(0.3, 0.7) == doctest::Approx(0.0));
    CopulaSpec spec;
    spec.family = Family::gumbel;
    spec.theta = 3.0;
    CHECK(parse_graphon("gumbel:3").evaluate1(0.3, 0.7) ==
          doctest::Approx(copula_cdf(spec, 0.3, 0.7)).epsilon(1e-15));
    // symmetry
    const Graphon g = parse_graphon("clayton:2");
    CHECK(g.evaluate1(0.3, 0.7) == doctest::Approx(g.evaluate1(0.7, 0.3)));
}

TEST_CASE("density kind clamps the copula density at one") {
    // pi's density is identically 1, so this graphon is the complete kernel
    const Graphon flat = parse_graphon("pi:density");
    CHECK(flat.evaluate1(0.3, 0.7) == 1.0);
    CHECK(flat.evaluate1(0.01, 0.99) == 1.0);
    // above 1 the raw density gets cut off
    const Graphon peaked = parse_graphon("clayton:30:density");
    CopulaSpec spec;
    spec.family = Family::clayton;
    spec.theta = 30.0;
    CHECK(copula_density(spec, 0.99, 0.98) > 1.0);
    CHECK(peaked.evaluate1(0.99, 0.98) == 1.0);
    // below 1 it passes through untouched
    spec.theta = 2.0;
    CHECK(parse_graphon("clayton:2:density").evaluate1(0.3, 0.7) ==
          doctest::Approx(copula_density(spec, 0.3, 0.7)).epsilon(1e-15));
    CHECK(parse_graphon("clayton:2:density").evaluate1(0.3, 0.7) ==
          doctest::Approx(0.62928945100121642).epsilon(1e-13));
}

TEST_CASE("tensor graphons multiply component kernels") {
    const Graphon g = parse_graphon("pi*gumbel:3");
    CopulaSpec spec;
    spec.family = Family::gumbel;
    spec.theta = 3.0;
    const double expected = 0.2 * 0.5 * copula_cdf(spec, 0.3, 0.7);
    CHECK(g.evaluate({0.2, 0.3}, {0.5, 0.7}) ==
          doctest::Approx(expected).epsilon(1e-14));
    // per-component values match component_value
    const auto& comps = g.components();
    REQUIRE(comps.size() == 2);
    CHECK(component_value(comps[0], 0.2, 0.5) == doctest::Approx(0.1));
    CHECK(component_value(comps[1], 0.3, 0.7) ==
          doctest::Approx(copula_cdf(spec, 0.3, 0.7)));
    // kernel values stay inside [0,1] even with clamped densities
    const Graphon d = parse_graphon("clayton:30:density*joe:5:density");
    for (double a : {0.05, 0.5, 0.97})
        for (double b : {0.1, 0.6, 0.99}) {
            const double w = d.evaluate({a, b}, {b, a});
            CHECK(w >= 0.0);
            CHECK(w <= 1.0);
        }
}

TEST_CASE("evaluate checks latent vector lengths") {
    const Graphon g = parse_graphon("pi*pi");
    CHECK_THROWS_AS(g.evaluate({0.2}, {0.5, 0.7}), size_error);
    CHECK_THROWS_AS(g.evaluate1(0.2, 0.5), size_error);
    CHECK_NOTHROW(parse_graphon("pi").evaluate1(0.2, 0.5));
}

TEST_CASE("construction helpers mirror the descriptor grammar") {
    CopulaSpec spec;
    spec.family = Family::frank;
    spec.theta = -4.0;
    CHECK(make_cdf_graphon(spec).descriptor() == "frank:-4");
    CHECK(make_density_graphon(spec).descriptor() == "frank:-4:density");
    GraphonComponent c1, c2;
    c1.copula = spec;
    c2.copula.family = Family::independence;
    c2.kind = KernelKind::density;
    CHECK(make_tensor_graphon({c1, c2}).descriptor() == "frank:-4*pi:density");
    CHECK_THROWS_AS(make_tensor_graphon({}), usage_error);
}

#pragma once

#include <string>

#include "copgraph/errors.hpp"

namespace copgraph {

// The three Frechet-Hoeffding/independence bounds plus the four
// single-parameter Archimedean families.
enum class Family {
    independence,     // Pi(u,v) = uv
    comonotone,       // C+(u,v) = min(u,v), upper bound
    countermonotone,  // C-(u,v) = max(u+v-1, 0), lower bound
    clayton,
    frank,
    gumbel,
    joe,
};

struct CopulaSpec {
    Family family = Family::independence;
    double theta = 0.0;
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);
bool family_has_theta(Family f);

// Throws domain_error when theta lies outside the family's domain:
// Clayton [-1, inf), Frank unrestricted, Gumbel [1, inf), Joe [1, inf).
// theta within 1e-8 of 0 is accepted for Clayton/Frank and evaluated as
// independence (the continuous limit) rather than rejected.
void validate(const CopulaSpec& spec);

// Archimedean generator phi(t), and its pseudo-inverse: the ordinary
// inverse on [0, phi(0)], zero beyond. Only the four Archimedean
// families have one; others throw domain_error.
double generator(const CopulaSpec& spec, double t);
double generator_pseudo_inverse(const CopulaSpec& spec, double x);

// C(u,v) on the unit square.
double copula_cdf(const CopulaSpec& spec, double u, double v);

// c(u,v). Defined for the Archimedean families and independence (c = 1).
// The bound copulas have no density and throw domain_error. Values on the
// boundary of the square are the continuous limits.
double copula_density(const CopulaSpec& spec, double u, double v);
bool family_has_density(Family f);

// Default search interval used when a calibration problem does not
// specify theta bounds.
void default_theta_bounds(Family f, double& lo, double& hi);

} // namespace copgraph

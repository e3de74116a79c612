#include "copgraph/copula.hpp"

#include <cmath>
#include <limits>

namespace copgraph {

namespace {

constexpr double kThetaZeroTol = 1e-8;

// Clayton/Frank degenerate to independence as theta -> 0; evaluating the
// closed forms there divides ~0 by ~0, so treat a tiny theta as exactly 0.
bool effectively_independent(const CopulaSpec& s) {
    switch (s.family) {
        case Family::independence: return true;
        case Family::clayton:
        case Family::frank: return std::fabs(s.theta) < kThetaZeroTol;
        case Family::gumbel:
        case Family::joe: return s.theta == 1.0;
        default: return false;
    }
}

void check_unit_interval(double u, double v) {
    if (!(u >= 0.0 && u <= 1.0) || !(v >= 0.0 && v <= 1.0))
        throw domain_error("copula arguments must lie in [0,1], got u=" +
                           std::to_string(u) + " v=" + std::to_string(v));
}

/* Frank pieces, theta > 0 only; theta < 0 is folded onto the positive
 * branch through the reflection (U, 1-V), which maps theta to -theta:
 *   C_{-t}(u,v) = u - C_t(u, 1-v),   c_{-t}(u,v) = c_t(u, 1-v).
 *
 * Both cdf and density need log of
 *   br(u,v) = e^{-tu} + e^{-tv} - e^{-t(u+v)} - e^{-t},
 * which underflows wholesale for large t. Factoring out e^{-t*min(u,v)}
 * leaves a bracket bounded in (0,2] with no catastrophic cancellation
 * (it tends to 1 - e^{-t} at the edges and to t as t -> 0). */
double frank_log_bracket(double theta, double u, double v) {
    const double m = std::fmin(u, v);
    const double M = std::fmax(u, v);
    const double inner = 1.0 + std::exp(-theta * (M - m)) -
                         std::exp(-theta * M) - std::exp(-theta * (1.0 - m));
    return -theta * m + std::log(inner);
}

double frank_cdf_pos(double theta, double u, double v) {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    const double log_den = std::log1p(-std::exp(-theta));
    return -(frank_log_bracket(theta, u, v) - log_den) / theta;
}

double frank_density_pos(double theta, double u, double v) {
    const double log_num = std::log(theta) + std::log1p(-std::exp(-theta)) -
                           theta * (u + v);
    return std::exp(log_num - 2.0 * frank_log_bracket(theta, u, v));
}

double clayton_cdf(double theta, double u, double v) {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    if (u >= 1.0) return v;
    if (v >= 1.0) return u;
    if (theta > 0.0) {
        // log(u^-t + v^-t - 1) via the larger exponent to dodge overflow.
        const double a = -theta * std::log(u);
        const double b = -theta * std::log(v);
        const double M = std::fmax(a, b);
        const double log_s =
            M + std::log(std::exp(a - M) + std::exp(b - M) - std::exp(-M));
        return std::exp(-log_s / theta);
    }
    // theta in [-1, 0): powers lie in [0, 1], the sum can go negative.
    const double s = std::pow(u, -theta) + std::pow(v, -theta) - 1.0;
    if (s <= 0.0) return 0.0;
    return std::pow(s, -1.0 / theta);
}

double clayton_density(double theta, double u, double v) {
    if (theta > 0.0) {
        if (u <= 0.0 || v <= 0.0) return 0.0;  // edge limit
        const double a = -theta * std::log(u);
        const double b = -theta * std::log(v);
        const double M = std::fmax(a, b);
        const double log_s =
            M + std::log(std::exp(a - M) + std::exp(b - M) - std::exp(-M));
        const double log_c = std::log1p(theta) -
                             (theta + 1.0) * (std::log(u) + std::log(v)) -
                             (2.0 + 1.0 / theta) * log_s;
        return std::exp(log_c);
    }
    const double s = std::pow(u, -theta) + std::pow(v, -theta) - 1.0;
    if (s <= 0.0) return 0.0;
    return (1.0 + theta) * std::pow(u * v, -theta - 1.0) *
           std::pow(s, -2.0 - 1.0 / theta);
}

// (x^t + y^t)^{1/t} for x, y >= 0 without overflowing x^t.
double gumbel_radius(double theta, double x, double y) {
    const double M = std::fmax(x, y);
    const double m = std::fmin(x, y);
    if (M == 0.0) return 0.0;
    return M * std::exp(std::log1p(std::pow(m / M, theta)) / theta);
}

double gumbel_cdf(double theta, double u, double v) {
    if (u <= 0.0 || v <= 0.0) return 0.0;
    const double x = -std::log(u);
    const double y = -std::log(v);
    return std::exp(-gumbel_radius(theta, x, y));
}

double gumbel_density(double theta, double u, double v) {
    if (u <= 0.0 || v <= 0.0 || u >= 1.0 || v >= 1.0) return 0.0;  // edge limit
    const double x = -std::log(u);
    const double y = -std::log(v);
    const double s = gumbel_radius(theta, x, y);
    const double log_c = -s + std::log(s + theta - 1.0) +
                         (1.0 - 2.0 * theta) * std::log(s) +
                         (theta - 1.0) * (std::log(x) + std::log(y)) +
                         (x + y);
    return std::exp(log_c);
}

double joe_cdf(double theta, double u, double v) {
    if (u >= 1.0 || v >= 1.0) return std::fmin(u, v);
    const double lub = std::log1p(-u);  // log(1-u)
    const double lvb = std::log1p(-v);
    const double a = std::exp(theta * lub);
    const double b = std::exp(theta * lvb);
    const double T = a + b - a * b;  // in (0, 1], no cancellation: a+b(1-a)
    return 1.0 - std::exp(std::log(T) / theta);
}

double joe_density(double theta, double u, double v) {
    if (u <= 0.0 || v <= 0.0 || u >= 1.0 || v >= 1.0) return 0.0;  // edge limit
    const double lub = std::log1p(-u);
    const double lvb = std::log1p(-v);
    const double a = std::exp(theta * lub);
    const double b = std::exp(theta * lvb);
    const double T = a + b - a * b;
    const double log_c = (1.0 / theta - 2.0) * std::log(T) +
                         (theta - 1.0) * (lub + lvb) +
                         std::log(theta - 1.0 + T);
    return std::exp(log_c);
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::independence: return "pi";
        case Family::comonotone: return "cplus";
        case Family::countermonotone: return "cminus";
        case Family::clayton: return "clayton";
        case Family::frank: return "frank";
        case Family::gumbel: return "gumbel";
        case Family::joe: return "joe";
    }
    throw usage_error("unknown family enum value");
}

Family family_from_name(const std::string& name) {
    if (name == "pi" || name == "independence") return Family::independence;
    if (name == "cplus" || name == "comonotone") return Family::comonotone;
    if (name == "cminus" || name == "countermonotone") return Family::countermonotone;
    if (name == "clayton") return Family::clayton;
    if (name == "frank") return Family::frank;
    if (name == "gumbel") return Family::gumbel;
    if (name == "joe") return Family::joe;
    throw usage_error("unknown copula family '" + name + "'");
}

bool family_has_theta(Family f) {
    switch (f) {
        case Family::clayton:
        case Family::frank:
        case Family::gumbel:
        case Family::joe: return true;
        default: return false;
    }
}

void validate(const CopulaSpec& spec) {
    const double th = spec.theta;
    if (family_has_theta(spec.family) && !std::isfinite(th))
        throw domain_error(std::string(family_name(spec.family)) +
                           ": theta must be finite");
    switch (spec.family) {
        case Family::clayton:
            if (th < -1.0)
                throw domain_error("clayton: theta out of domain (needs "
                                   "theta >= -1, got " +
                                   std::to_string(th) + ")");
            break;
        case Family::gumbel:
            if (th < 1.0)
                throw domain_error("gumbel: theta out of domain (needs "
                                   "theta >= 1, got " +
                                   std::to_string(th) + ")");
            break;
        case Family::joe:
            if (th < 1.0)
                throw domain_error("joe: theta out of domain (needs "
                                   "theta >= 1, got " +
                                   std::to_string(th) + ")");
            break;
        default: break;  // frank: all finite theta; bounds/Pi ignore theta
    }
}

double generator(const CopulaSpec& spec, double t) {
    validate(spec);
    if (!family_has_theta(spec.family))
        throw domain_error(std::string(family_name(spec.family)) +
                           " has no Archimedean generator");
    if (!(t >= 0.0 && t <= 1.0))
        throw domain_error("generator argument must lie in [0,1]");
    if (effectively_independent(spec)) return -std::log(t);
    const double th = spec.theta;
    switch (spec.family) {
        case Family::clayton:
            // (t^-theta - 1)/theta, stable near theta = 0 as well
            return std::expm1(-th * std::log(t)) / th;
        case Family::frank:
            return -std::log(std::expm1(-th * t) / std::expm1(-th));
        case Family::gumbel:
            return std::pow(-std::log(t), th);
        case Family::joe:
            return -std::log1p(-std::exp(th * std::log1p(-t)));
        default:
            throw domain_error(std::string(family_name(spec.family)) +
                               " has no Archimedean generator");
    }
}

double generator_pseudo_inverse(const CopulaSpec& spec, double x) {
    validate(spec);
    if (!family_has_theta(spec.family))
        throw domain_error(std::string(family_name(spec.family)) +
                           " has no Archimedean generator");
    if (!(x >= 0.0))
        throw domain_error("generator pseudo-inverse argument must be >= 0");
    if (effectively_independent(spec)) return std::exp(-x);
    const double th = spec.theta;
    switch (spec.family) {
        case Family::clayton: {
            // Finite phi(0) = -1/theta for theta < 0; zero beyond it.
            const double s = 1.0 + th * x;
            if (s <= 0.0) return 0.0;
            return std::exp(-std::log1p(th * x) / th);
        }
        case Family::frank:
            return -std::log1p(std::exp(-x) * std::expm1(-th)) / th;
        case Family::gumbel:
            return std::exp(-std::pow(x, 1.0 / th));
        case Family::joe: {
            const double w = -std::expm1(-x);  // 1 - e^-x in [0,1)
            if (w <= 0.0) return 1.0;
            return 1.0 - std::exp(std::log(w) / th);
        }
        default:
            throw domain_error(std::string(family_name(spec.family)) +
                               " has no Archimedean generator");
    }
}

double copula_cdf(const CopulaSpec& spec, double u, double v) {
    validate(spec);
    check_unit_interval(u, v);
    if (effectively_independent(spec)) return u * v;
    const double th = spec.theta;
    switch (spec.family) {
        case Family::independence: return u * v;
        case Family::comonotone: return std::fmin(u, v);
        case Family::countermonotone: return std::fmax(u + v - 1.0, 0.0);
        case Family::clayton: return clayton_cdf(th, u, v);
        case Family::frank:
            return th > 0.0 ? frank_cdf_pos(th, u, v)
                            : u - frank_cdf_pos(-th, u, 1.0 - v);
        case Family::gumbel: return gumbel_cdf(th, u, v);
        case Family::joe: return joe_cdf(th, u, v);
    }
    throw usage_error("unknown family enum value");
}

bool family_has_density(Family f) {
    return f != Family::comonotone && f != Family::countermonotone;
}

double copula_density(const CopulaSpec& spec, double u, double v) {
    validate(spec);
    check_unit_interval(u, v);
    if (!family_has_density(spec.family))
        throw domain_error(std::string(family_name(spec.family)) +
                           " is singular and has no density");
    if (effectively_independent(spec)) return 1.0;
    const double th = spec.theta;
    switch (spec.family) {
        case Family::clayton: return clayton_density(th, u, v);
        case Family::frank:
            return th > 0.0 ? frank_density_pos(th, u, v)
                            : frank_density_pos(-th, u, 1.0 - v);
        case Family::gumbel: return gumbel_density(th, u, v);
        case Family::joe: return joe_density(th, u, v);
        default: return 1.0;
    }
}

void default_theta_bounds(Family f, double& lo, double& hi) {
    switch (f) {
        case Family::clayton: lo = 0.01; hi = 30.0; return;
        case Family::frank: lo = -30.0; hi = 30.0; return;
        case Family::gumbel:
        case Family::joe: lo = 1.0; hi = 30.0; return;
        default:
            throw usage_error(std::string(family_name(f)) +
                              " has no free parameter to search");
    }
}

} // namespace copgraph

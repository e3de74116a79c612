#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "copgraph/copula.hpp"
#include "copgraph/errors.hpp"

namespace copgraph {

// How a copula is turned into a symmetric kernel on [0,1]^2:
//   cdf      W(x,y) = C(x,y), already in [0,1]
//   density  W(x,y) = min(c(x,y), 1), the density clamped into range
enum class KernelKind { cdf, density };

const char* kernel_kind_name(KernelKind k);

struct GraphonComponent {
    CopulaSpec copula;
    KernelKind kind = KernelKind::cdf;
};

// Kernel value of a single component, clamped into [0,1].
double component_value(const GraphonComponent& comp, double x, double y);

/* A graphon built from copulas. One component gives a kernel on [0,1]^2;
 * several components form a tensor product over per-coordinate latents:
 *   W(x, y) = prod_j W_j(x_j, y_j),  x, y in [0,1]^s.
 * Nodes of a sampled graph carry one latent vector of length latent_dim(). */
class Graphon {
public:
    Graphon() : Graphon({GraphonComponent{}}) {}
    explicit Graphon(std::vector<GraphonComponent> components);

    std::size_t latent_dim() const { return components_.size(); }
    const std::vector<GraphonComponent>& components() const { return components_; }

    double evaluate(const std::vector<double>& x, const std::vector<double>& y) const;
    // Convenience for the common one-dimensional case.
    double evaluate1(double x, double y) const;

    // Canonical descriptor, parseable by parse_graphon.
    std::string descriptor() const;

private:
    std::vector<GraphonComponent> components_;
};

Graphon make_cdf_graphon(const CopulaSpec& spec);
Graphon make_density_graphon(const CopulaSpec& spec);
Graphon make_tensor_graphon(std::vector<GraphonComponent> components);

/* Descriptor grammar, components joined by '*':
 *   component := family[:theta][:kind]
 *   family    := pi | cplus | cminus | clayton | frank | gumbel | joe
 *                (aliases: independence, comonotone, countermonotone)
 *   kind      := cdf | density          (default cdf)
 * Examples: "gumbel:5", "clayton:2:density", "frank:3*pi*gumbel:1.5".
 * Throws usage_error on malformed input, domain_error on invalid theta. */
Graphon parse_graphon(const std::string& descriptor);

} // namespace copgraph

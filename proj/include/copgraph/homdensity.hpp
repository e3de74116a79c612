#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "copgraph/graphon.hpp"
#include "copgraph/quadrature.hpp"

namespace copgraph {

// The five motifs whose densities drive everything downstream.
enum class Motif { edge, path2, path3, triangle, star3 };

const char* motif_name(Motif m);              // p1, p2, p3, c3, s3
Motif motif_from_name(const std::string& s);  // accepts p1/edge, p2/path2, ...

// Homomorphism densities of the five motifs for one graphon.
struct DensityReport {
    double edge = 0.0;      // t(P1) = int W
    double path2 = 0.0;     // t(P2) = int lambda^2
    double path3 = 0.0;     // t(P3) = int lambda W lambda
    double triangle = 0.0;  // t(C3)
    double star3 = 0.0;     // t(S3) = int lambda^3
    std::string descriptor;
    int grid_order = 0;
};

double motif_value(const DensityReport& r, Motif m);

// Per-motif product of component reports, the tensor factorization applied
// to already-computed densities. A single report comes back unchanged.
DensityReport tensor_density(const std::vector<DensityReport>& reports);

// 64 in general, 128 when the kernel has kinks or clamping
// (density kernels and the Frechet-Hoeffding bounds).
int default_grid_order(const Graphon& g);

/* Quadrature evaluation of all five densities. Tensor graphons factor:
 * each motif density is the product of the per-component densities. */
DensityReport density_report(const Graphon& g, int grid_order = 0);

/* Same densities from one composite grid with order^s points, no use of
 * the factorization. Exists to cross-check the product rule. */
DensityReport density_report_direct(const Graphon& g, int grid_order = 0);

// Individual densities through the same machinery, for callers that need
// one number: paths by edge count (k in {1,2,3}), stars with any k >= 1,
// and the triangle.
double t_path(const Graphon& g, int k, int grid_order = 0);
double t_star(const Graphon& g, int k, int grid_order = 0);
double t_cycle3(const Graphon& g, int grid_order = 0);

// lambda(u) = int_0^1 W(u,v) dv for a one-dimensional graphon; the vector
// form handles tensor graphons, where lambda factors across components.
double degree_function(const Graphon& g, double u, int grid_order = 0);
double degree_function(const Graphon& g, const std::vector<double>& u,
                       int grid_order = 0);

// D(u) = int_0^u lambda, so D(1) = t(P1). One-dimensional graphons only.
double cumulative_degree_distribution(const Graphon& g, double u,
                                      int grid_order = 0);

/* Expected degree-assortativity of an n-vertex sample, computed from the
 * densities alone. Requires n >= 4; throws undefined_error when the edge
 * density is zero or the denominator vanishes (degree-regular case). */
double theoretical_assortativity(const DensityReport& r, std::size_t n);

double theoretical_assortativity(const Graphon& g, std::size_t n,
                                 int grid_order = 0);

} // namespace copgraph

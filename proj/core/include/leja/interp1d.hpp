#pragma once

#include <cstddef>
#include <span>

#include "leja/nodes1d.hpp"

namespace leja {

/// A real written as mantissa * 2^exponent with |mantissa| in [1,2), or
/// exactly zero. Used wherever nodal polynomials would under- or overflow.
struct ScaledReal {
    double mantissa = 0.0;
    long exponent = 0;

    double to_double() const;
    /// log2 of the absolute value; -inf for zero.
    double log2_abs() const;
};

/// The fundamental Lagrange polynomial of node j evaluated at x, in
/// barycentric form. Exactly 1 at the node itself and 0 at the others
/// (node hits are detected by floating equality, the only singular points
/// of the barycentric form).
double flip_eval(const NodeSet1D& A, std::size_t j, double x);

/// Second-form barycentric evaluation of the interpolant of f_values at x.
double interpolate(const NodeSet1D& A, std::span<const double> f_values, double x);

/// The nodal polynomial w_A(x) = prod (x - a), in scaled form.
ScaledReal nodal_poly_eval(const NodeSet1D& A, double x);

/// The Lebesgue function sum_j |l(A, a_j; x)|.
double lebesgue_function(const NodeSet1D& A, double x);

struct LebesgueEstimate {
    double value = 0.0;           // refined maximum
    double argmax = 0.0;
    std::size_t samples_per_gap = 0;
    bool refined = false;
    double certified_lower = 0.0; // max over raw samples, always a valid lower bound
};

/// Estimates the Lebesgue constant on [-1,1]: the Lebesgue function is
/// sampled on a closed grid of samples_per_gap+1 points per gap between
/// consecutive sorted nodes (domain endpoints included), then every local
/// maximum is sharpened by ternary search. Grids nest when samples_per_gap
/// doubles, so certified_lower is monotone in the sample count. The scan is
/// parallel over gaps with a deterministic merge (ties toward smaller x).
LebesgueEstimate lebesgue_constant(const NodeSet1D& A, std::size_t samples_per_gap);

/// max over x in [-1,1] of |w(x)| divided by min over probes of |w(p)|,
/// where w is the nodal polynomial of poly_nodes. The maximum is taken over
/// a Chebyshev-distributed grid (grid_size points, 0 picks a default that
/// resolves every oscillation) refined by ternary search. Throws
/// std::domain_error if a probe coincides with a node (the ratio would be
/// infinite).
double nodal_ratio_bound(const NodeSet1D& poly_nodes, std::span<const double> probes,
                         std::size_t grid_size = 0);

} // namespace leja

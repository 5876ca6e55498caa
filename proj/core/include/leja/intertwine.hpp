#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace leja {

/// Exponent vector of one tensor Newton basis function.
using MultiIndex = std::vector<unsigned>;

/// Interpolation points {x_alpha : |alpha| <= k} built from N univariate
/// node sequences, with the triangular Newton factorization that makes the
/// set unisolvent in practice.
///
/// Indices are enumerated in graded order: by total degree, and within a
/// degree with the leading components largest first, so (1,0) precedes
/// (0,1). The Newton collocation matrix N_alpha(x_beta) is lower triangular
/// in any such order because the entry vanishes exactly when some
/// beta_j < alpha_j; those entries are never computed, they are structural
/// zeros.
class IntertwinedGrid {
public:
    /// axes[j] holds at least degree+1 pairwise distinct values of the j-th
    /// univariate sequence.
    IntertwinedGrid(std::vector<std::vector<double>> axes, unsigned degree);

    std::size_t dimension() const noexcept { return axes_.size(); }
    unsigned degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return indices_.size(); } // C(k+N, N)

    const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
    std::span<const double> point(std::size_t i) const;

    /// Entry N_{col}(x_{row}) of the lower-triangular Newton factor.
    double newton_entry(std::size_t row, std::size_t col) const;

    /// Newton coefficients of the data by forward substitution.
    std::vector<double> newton_coefficients(std::span<const double> f_values) const;

    /// Interpolant of f_values at x (any point of [-1,1]^N).
    double interpolate(std::span<const double> f_values, std::span<const double> x) const;

    /// Fundamental Lagrange polynomial of grid point beta at x.
    double flip(std::size_t beta, std::span<const double> x) const;

    /// sum_beta |l_beta(x)|, evaluated in O(m^2) from the precomputed
    /// inverse of the Newton factor.
    double lebesgue_function(std::span<const double> x) const;

private:
    std::vector<double> newton_values(std::span<const double> x) const;

    std::vector<std::vector<double>> axes_;
    unsigned degree_ = 0;
    std::vector<MultiIndex> indices_;
    std::vector<double> points_;        // size() * N, row-major
    std::vector<double> factor_;        // lower triangular, row-major
    std::vector<double> inverse_;       // its inverse, lower triangular
};

/// Spec-facing free functions.
IntertwinedGrid build_grid(std::vector<std::vector<double>> axes, unsigned degree);
double interpolate_nd(const IntertwinedGrid& G, std::span<const double> f_values,
                      std::span<const double> x);
double flip_eval_nd(const IntertwinedGrid& G, std::size_t beta, std::span<const double> x);

struct NdLebesgueEstimate {
    double value = 0.0;
    std::vector<double> argmax;
    std::size_t per_axis_samples = 0;
    bool refined = false;
    double certified_lower = 0.0;
};

/// Maximum of the Lebesgue function over a Chebyshev-distributed tensor
/// sample grid (endpoints included; per_axis_samples+1 samples per axis,
/// nested under doubling) followed by coordinate-wise ternary refinement.
/// Throws if the tensor grid would exceed 10^7 points.
NdLebesgueEstimate lebesgue_constant_nd(const IntertwinedGrid& G,
                                        std::size_t per_axis_samples);

} // namespace leja

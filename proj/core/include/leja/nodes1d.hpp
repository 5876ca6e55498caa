#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leja/dyadic_angle.hpp"

namespace leja {

/// A finite ordered set of distinct interpolation nodes in [-1,1] with
/// precomputed barycentric weights.
///
/// The stored weights carry a shared power-of-two factor:
///     bary_weights()[j] * 2^scale_exponent() == 1 / prod_{i!=j} (x_j - x_i)
/// so that node sets of a thousand points do not underflow. All barycentric
/// evaluations are scale-free, so the factor only matters when the true
/// weights themselves are wanted.
class NodeSet1D {
public:
    explicit NodeSet1D(std::vector<double> nodes);

    std::size_t size() const noexcept { return nodes_.size(); }
    std::span<const double> nodes() const noexcept { return nodes_; }
    double node(std::size_t j) const { return nodes_.at(j); }

    std::span<const double> bary_weights() const noexcept { return weights_; }
    int scale_exponent() const noexcept { return scale_; }

    /// Node indices in ascending node order.
    std::span<const std::size_t> sorted_order() const noexcept { return order_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<std::size_t> order_;
    int scale_ = 0;
};

/// The d+1 Chebyshev-Lobatto points cos(j*pi/d), j = 0..d, in that order.
/// For power-of-two d the values are produced from exact dyadic angles and
/// agree bit-for-bit with the ones appearing in an R-Leja sequence.
NodeSet1D chebyshev_lobatto(std::size_t d);

/// Exact angles j/(2d) of the Chebyshev-Lobatto points; requires d = 2^n.
std::vector<DyadicAngle> lobatto_angles(std::size_t d);

/// The d modified Chebyshev points cos(2*pi*(beta + j/d)), j = 0..d-1: the
/// roots of T_d(x) = T_d(cos 2*pi*beta). beta is a fraction of a turn.
/// Throws std::domain_error if cos(2*pi*beta) is an extremal point of T_d
/// (the equation would have fewer than d roots).
NodeSet1D modified_chebyshev(std::size_t d, DyadicAngle beta);

/// Exact angles beta + j/d of the modified Chebyshev points; requires
/// d = 2^n.
std::vector<DyadicAngle> modified_chebyshev_angles(std::size_t d, DyadicAngle beta);

/// True iff cos(2*pi*beta) is an extremal point of T_d, decided exactly on
/// the dyadic representation.
bool is_chebyshev_extremal(std::size_t d, DyadicAngle beta);

} // namespace leja

#include "leja/nodes1d.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace leja {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned floor_log2(std::size_t n) {
    return static_cast<unsigned>(std::bit_width(n) - 1);
}

} // namespace

NodeSet1D::NodeSet1D(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    const std::size_t n = nodes_.size();
    if (n == 0) throw std::invalid_argument("NodeSet1D: empty node list");
    for (double x : nodes_) {
        if (!(std::fabs(x) <= 1.0)) {
            throw std::invalid_argument("NodeSet1D: node outside [-1,1]");
        }
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(),
              [this](std::size_t a, std::size_t b) { return nodes_[a] < nodes_[b]; });
    for (std::size_t i = 1; i < n; ++i) {
        if (nodes_[order_[i]] == nodes_[order_[i - 1]]) {
            throw std::invalid_argument("NodeSet1D: duplicate node");
        }
    }

    // Inverse products with each factor doubled: on [-1,1] the doubled
    // differences are O(1), so the running mantissa stays in range and the
    // power of two is tracked separately.
    weights_.resize(n);
    std::vector<double> mant(n);
    std::vector<int> expo(n);
    int max_expo = std::numeric_limits<int>::min();
    int min_expo = std::numeric_limits<int>::max();
    for (std::size_t j = 0; j < n; ++j) {
        double m = 1.0;
        int e = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            int f;
            m = std::frexp(m * 2.0 * (nodes_[j] - nodes_[i]), &f);
            e += f;
        }
        // prod_{i!=j}(x_j - x_i) = m * 2^(e - (n-1)); invert.
        int f;
        mant[j] = std::frexp(1.0 / m, &f);
        expo[j] = f - e + static_cast<int>(n) - 1;
        max_expo = std::max(max_expo, expo[j]);
        min_expo = std::min(min_expo, expo[j]);
    }
    // Mid-range scale: leaves symmetric headroom, so the stored weights
    // stay normal as long as the exponent spread is below ~1900 bits.
    scale_ = max_expo / 2 + min_expo / 2;
    if (max_expo - scale_ > 960) {
        throw std::domain_error("NodeSet1D: weight spread too large for a shared scale");
    }
    for (std::size_t j = 0; j < n; ++j) {
        weights_[j] = std::ldexp(mant[j], expo[j] - scale_);
    }
}

NodeSet1D chebyshev_lobatto(std::size_t d) {
    if (d == 0) throw std::invalid_argument("chebyshev_lobatto: degree must be >= 1");
    std::vector<double> nodes(d + 1);
    if (is_pow2(d)) {
        const unsigned q = floor_log2(d) + 1; // angle j/(2d)
        for (std::size_t j = 0; j <= d; ++j) {
            nodes[j] = DyadicAngle(j, q).cos_value();
        }
        return NodeSet1D(std::move(nodes));
    }
    for (std::size_t j = 0; 2 * j <= d; ++j) {
        const double c = std::cos(M_PI * static_cast<double>(j) / static_cast<double>(d));
        nodes[j] = c;
        nodes[d - j] = (2 * j == d) ? c : -c;
    }
    return NodeSet1D(std::move(nodes));
}

std::vector<DyadicAngle> lobatto_angles(std::size_t d) {
    if (!is_pow2(d)) throw std::invalid_argument("lobatto_angles: degree must be a power of two");
    const unsigned q = floor_log2(d) + 1;
    std::vector<DyadicAngle> angles(d + 1);
    for (std::size_t j = 0; j <= d; ++j) angles[j] = DyadicAngle(j, q);
    return angles;
}

bool is_chebyshev_extremal(std::size_t d, DyadicAngle beta) {
    // cos(2 pi b) extremal for T_d  <=>  d * b = 0 (mod 1/2)
    // <=>  2 d numerator = 0 (mod 2^q).
    if (d == 0) throw std::invalid_argument("is_chebyshev_extremal: degree must be >= 1");
    const unsigned q = beta.log2_den();
    if (q == 0) return true; // beta = 0, cos = 1
    // 2*d*num mod 2^q == 0 <=> num * d * 2 has at least q trailing zero bits.
    const unsigned tz = static_cast<unsigned>(std::countr_zero(beta.numerator())) +
                        static_cast<unsigned>(std::countr_zero(2 * static_cast<std::uint64_t>(d)));
    return tz >= q;
}

NodeSet1D modified_chebyshev(std::size_t d, DyadicAngle beta) {
    if (d == 0) throw std::invalid_argument("modified_chebyshev: degree must be >= 1");
    if (is_chebyshev_extremal(d, beta)) {
        throw std::domain_error("modified_chebyshev: cos(2*pi*" + beta.str() +
                                ") is an extremal point of T_" + std::to_string(d));
    }
    std::vector<double> nodes(d);
    if (is_pow2(d)) {
        for (std::size_t j = 0; j < d; ++j) {
            nodes[j] = (beta + DyadicAngle(j, floor_log2(d))).cos_value();
        }
        return NodeSet1D(std::move(nodes));
    }
    const double b = beta.turns();
    for (std::size_t j = 0; j < d; ++j) {
        nodes[j] = std::cos(2.0 * M_PI * (b + static_cast<double>(j) / static_cast<double>(d)));
    }
    return NodeSet1D(std::move(nodes));
}

std::vector<DyadicAngle> modified_chebyshev_angles(std::size_t d, DyadicAngle beta) {
    if (!is_pow2(d)) {
        throw std::invalid_argument("modified_chebyshev_angles: degree must be a power of two");
    }
    std::vector<DyadicAngle> angles(d);
    for (std::size_t j = 0; j < d; ++j) {
        angles[j] = beta + DyadicAngle(j, floor_log2(d));
    }
    return angles;
}

} // namespace leja

#include "leja/dyadic_angle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace leja {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

std::uint64_t pow2(unsigned q) { return std::uint64_t{1} << q; }

} // namespace

DyadicAngle::DyadicAngle(std::uint64_t numerator, unsigned log2_den) {
    if (log2_den > max_log2_den) {
        throw std::overflow_error(
            "DyadicAngle: denominator exponent " + std::to_string(log2_den) +
            " exceeds supported maximum " + std::to_string(max_log2_den) +
            " (sequence length limit exceeded)");
    }
    std::uint64_t n = log2_den == 64 ? numerator : numerator & (pow2(log2_den) - 1);
    unsigned q = log2_den;
    if (n == 0) {
        q = 0;
    } else {
        unsigned shift = static_cast<unsigned>(std::countr_zero(n));
        if (shift > q) shift = q;
        n >>= shift;
        q -= shift;
    }
    num_ = n;
    q_ = q;
}

double DyadicAngle::turns() const noexcept {
    return std::ldexp(static_cast<double>(num_), -static_cast<int>(q_));
}

double DyadicAngle::cos_value() const noexcept {
    // Quarter-turn angles are exact by fiat.
    if (q_ == 0) return 1.0;  // angle 0
    if (q_ == 1) return -1.0; // angle 1/2
    if (q_ == 2) return 0.0;  // angle 1/4 or 3/4
    // q >= 3, numerator odd. Reduce to the first octant with exact integer
    // arithmetic so that symmetric angles produce identical doubles.
    std::uint64_t n = num_;
    if (n > pow2(q_ - 1)) n = pow2(q_) - n; // cos(2pi t) = cos(2pi (1-t))
    double sign = 1.0;
    if (n > pow2(q_ - 2)) { // cos(2pi t) = -cos(2pi (1/2 - t))
        n = pow2(q_ - 1) - n;
        sign = -1.0;
    }
    // Now 0 < n/2^q < 1/4 with n odd.
    if (n > pow2(q_ - 3)) { // cos(2pi t) = sin(2pi (1/4 - t))
        const std::uint64_t m = pow2(q_ - 2) - n;
        const long double t = std::ldexp(static_cast<long double>(m), -static_cast<int>(q_));
        return sign * static_cast<double>(std::sin(kTwoPi * t));
    }
    const long double t = std::ldexp(static_cast<long double>(n), -static_cast<int>(q_));
    return sign * static_cast<double>(std::cos(kTwoPi * t));
}

double DyadicAngle::sin_value() const {
    return (DyadicAngle(1, 2) - *this).cos_value();
}

DyadicAngle DyadicAngle::negated() const noexcept {
    if (num_ == 0) return {};
    DyadicAngle r;
    r.num_ = pow2(q_) - num_; // odd stays odd: already canonical
    r.q_ = q_;
    return r;
}

DyadicAngle DyadicAngle::real_part_key() const noexcept {
    DyadicAngle neg = negated();
    return neg < *this ? neg : *this;
}

DyadicAngle operator+(DyadicAngle a, DyadicAngle b) {
    const unsigned q = std::max(a.q_, b.q_);
    const std::uint64_t sum = (a.num_ << (q - a.q_)) + (b.num_ << (q - b.q_));
    return DyadicAngle(sum, q); // constructor reduces mod 1 and canonicalizes
}

DyadicAngle operator-(DyadicAngle a, DyadicAngle b) {
    return a + b.negated();
}

std::strong_ordering operator<=>(DyadicAngle a, DyadicAngle b) noexcept {
    const unsigned q = std::max(a.q_, b.q_);
    return (a.num_ << (q - a.q_)) <=> (b.num_ << (q - b.q_));
}

std::string DyadicAngle::str() const {
    return std::to_string(num_) + "/2^" + std::to_string(q_);
}

} // namespace leja

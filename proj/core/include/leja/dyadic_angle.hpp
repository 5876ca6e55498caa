#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace leja {

/// An angle that is a dyadic fraction of a full turn: numerator / 2^log2_den
/// turns, i.e. the angle 2*pi*numerator/2^log2_den radians.
///
/// The representation is canonical: the fraction is reduced modulo one turn
/// and fully reduced, so either the numerator is odd or the angle is zero
/// (numerator = 0, log2_den = 0). This makes equality, hashing and ordering
/// exact, which is what root-of-unity bookkeeping and real-part
/// deduplication rely on.
class DyadicAngle {
public:
    /// Largest supported denominator exponent. Exceeding it is a hard error
    /// (it signals a sequence length far beyond anything this library is
    /// meant to handle), never silent wraparound.
    static constexpr unsigned max_log2_den = 63;

    /// Zero angle.
    constexpr DyadicAngle() noexcept : num_(0), q_(0) {}

    /// Angle numerator/2^log2_den turns, reduced modulo one turn and
    /// canonicalized. Throws std::overflow_error if log2_den > max_log2_den.
    DyadicAngle(std::uint64_t numerator, unsigned log2_den);

    std::uint64_t numerator() const noexcept { return num_; }
    unsigned log2_den() const noexcept { return q_; }

    /// Fraction of a full turn as a double (rounded for very deep angles).
    double turns() const noexcept;

    /// cos(2*pi*angle). Exact +-1 and 0 at the quarter-turn angles; other
    /// values are computed after exact reduction to the first octant so two
    /// angles with equal cosine produce bit-identical doubles.
    double cos_value() const noexcept;

    /// sin(2*pi*angle), evaluated as cos of the complementary angle.
    double sin_value() const;

    /// Canonical representative of {a, -a}: two angles have exactly equal
    /// cosines iff their keys are equal.
    DyadicAngle real_part_key() const noexcept;

    /// (1 - a) mod 1, i.e. the angle of the complex conjugate.
    DyadicAngle negated() const noexcept;

    DyadicAngle operator-() const noexcept { return negated(); }
    friend DyadicAngle operator+(DyadicAngle a, DyadicAngle b);
    friend DyadicAngle operator-(DyadicAngle a, DyadicAngle b);

    friend bool operator==(DyadicAngle a, DyadicAngle b) noexcept = default;
    friend std::strong_ordering operator<=>(DyadicAngle a, DyadicAngle b) noexcept;

    /// "num/2^q" rendering for diagnostics.
    std::string str() const;

private:
    std::uint64_t num_;
    unsigned q_;
};

DyadicAngle operator+(DyadicAngle a, DyadicAngle b);
DyadicAngle operator-(DyadicAngle a, DyadicAngle b);

} // namespace leja

template <>
struct std::hash<leja::DyadicAngle> {
    std::size_t operator()(const leja::DyadicAngle& a) const noexcept {
        std::uint64_t h = a.numerator() * 0x9e3779b97f4a7c15ull;
        h ^= (h >> 29) + a.log2_den();
        return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ull);
    }
};

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leja/dyadic_angle.hpp"

namespace leja {

/// Per-doubling-level choice of the rotation applied when a sequence of
/// length 2^n is extended to length 2^(n+1). The level-n entry must be a
/// 2^n-th root of -1, i.e. an angle (2t+1)/2^(n+1) turns.
class RhoChoice {
public:
    RhoChoice() = default;

    /// The doubling rule: level n gets exp(i*pi/2^n), angle 1/2^(n+1).
    static RhoChoice canonical(std::size_t levels);

    /// Uniformly random admissible entry per level, fixed by seed.
    /// (Level 0 is forced: the only square root of -1 of order 1 is -1.)
    static RhoChoice random(std::uint64_t seed, std::size_t levels);

    /// Sets the level-n entry; throws std::invalid_argument unless the
    /// angle is a 2^n-th root of -1.
    void set_level(std::size_t n, DyadicAngle rho);

    /// Entry for level n; throws std::out_of_range if none was provided.
    DyadicAngle level(std::size_t n) const;

    std::size_t levels() const noexcept { return entries_.size(); }
    bool operator==(const RhoChoice&) const = default;

private:
    std::vector<DyadicAngle> entries_;
};

enum class GenerationRule { canonical, custom_rho };

/// A lazily extendable Leja sequence for the unit disk, stored as exact
/// angles of unit-circle points. angles()[0] is always 0 (e_0 = 1), and for
/// every n with 2^n <= size() the first 2^n angles form exactly the set of
/// 2^n-th roots of unity.
class DiskLejaSequence {
public:
    /// The doubling-rule sequence.
    static DiskLejaSequence canonical();

    /// Sequence generated block-wise with the supplied per-level rotations.
    static DiskLejaSequence with_rho(RhoChoice rho);

    /// Wraps externally supplied angles, e.g. for validating a candidate
    /// sequence. No structure is assumed or checked here; such a sequence
    /// cannot be extended.
    static DiskLejaSequence from_angles(std::vector<DyadicAngle> angles);

    DiskLejaSequence() : DiskLejaSequence(canonical()) {}

    /// Grows the sequence to at least target_len points. Throws if a level
    /// has no rho entry (custom rule) or the denominator cap is exceeded.
    void extend(std::size_t target_len);

    std::size_t size() const noexcept { return angles_.size(); }
    DyadicAngle angle(std::size_t k) const { return angles_.at(k); }
    std::span<const DyadicAngle> angles() const noexcept { return angles_; }

    /// The point e_k on the unit circle.
    std::complex<double> point(std::size_t k) const;

    GenerationRule rule() const noexcept { return rule_; }
    const RhoChoice& rho() const noexcept { return rho_; }

private:
    DiskLejaSequence(GenerationRule rule, RhoChoice rho);

    std::vector<DyadicAngle> angles_;
    GenerationRule rule_ = GenerationRule::canonical;
    RhoChoice rho_;
    bool extendable_ = true;
};

/// Extends a copy of seq with the doubling rule; seq must use the canonical
/// rule.
DiskLejaSequence extend_canonical(DiskLejaSequence seq, std::size_t target_len);

/// Extends a copy of seq using the supplied rotations. seq must be a fresh
/// sequence (length <= 1) or one already generated from the same choices.
DiskLejaSequence extend_with_rho(DiskLejaSequence seq, const RhoChoice& rho,
                                 std::size_t target_len);

/// Brute-force verdict for one index of the max-product property.
struct LejaValidationEntry {
    std::size_t j = 0;
    double log_product = 0.0;  // log prod |e_j - e_m|, m < j
    double log_grid_max = 0.0; // log of the refined grid maximum
    double tolerance = 0.0;    // relative slack granted at this j
    bool pass = false;
};

struct LejaValidationReport {
    bool pass = false;
    std::size_t upto = 0;
    std::size_t grid_size = 0;
    double worst_margin = 0.0; // most negative (log_product - log_grid_max)
    std::size_t worst_j = 0;
    std::vector<LejaValidationEntry> failures;
};

/// Checks, for each j < upto, that e_j attains the maximum over the circle
/// of the product of distances to e_0..e_{j-1}. The maximum is estimated on
/// a uniform angular grid refined by ternary search around every local
/// maximum; products are accumulated in log space. Equality within the
/// tolerance counts as a pass (maximizers need not be unique).
LejaValidationReport validate_leja_property(const DiskLejaSequence& seq,
                                            std::size_t upto,
                                            std::size_t grid_size);

struct StructureReport {
    bool pass = false;
    std::size_t upto = 0;
    std::string message; // first failure, empty when pass
    /// rho_levels[n] is the extracted rotation taking the first 2^n points
    /// onto the block that follows them (present for 2^n < upto).
    std::vector<DyadicAngle> rho_levels;
};

/// Exact structural validation: every dyadic prefix must be a complete set
/// of roots of unity, and every block must be a rotated copy of a sequence
/// with the same property, the rotation being a root of -1 of the right
/// order. Works on exact angles; no floating point involved.
StructureReport structure_check(const DiskLejaSequence& seq, std::size_t upto);

} // namespace leja

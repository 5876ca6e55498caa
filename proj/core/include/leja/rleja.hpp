#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "leja/dyadic_angle.hpp"
#include "leja/leja_disk.hpp"
#include "leja/nodes1d.hpp"

namespace leja {

/// phi(0) = 0, phi(1) = 1 and, for k >= 2, the index of the disk-sequence
/// point whose real part first produces x_k:
///   phi(k) = 3k/2 - 1          when k is a power of two,
///   phi(k) = 2^floor(log2 k) + k - 1   otherwise.
std::size_t phi(std::size_t k);

enum class RLejaMode { dedup, phi };

/// The real projection of a disk Leja sequence with duplicates removed:
/// x_k = cos(2*pi*angle(k)), values pairwise distinct, x_0 = 1, x_1 = -1.
/// Stores the (extended) source so block structure can be recovered later.
class RLejaSequence {
public:
    /// Scans Re(e_0), Re(e_1), ... keeping the first `count` values that are
    /// new, decided exactly on angle keys. Extends the source as needed.
    static RLejaSequence project_dedup(DiskLejaSequence source, std::size_t count);

    /// Builds the same sequence through the closed form x_k = Re(e_phi(k)).
    static RLejaSequence build_by_phi(DiskLejaSequence source, std::size_t count);

    std::size_t size() const noexcept { return angles_.size(); }
    DyadicAngle angle(std::size_t k) const { return angles_.at(k); }
    double value(std::size_t k) const { return values_.at(k); }
    std::span<const DyadicAngle> angles() const noexcept { return angles_; }
    std::span<const double> values() const noexcept { return values_; }

    const DiskLejaSequence& source() const noexcept { return source_; }
    RLejaMode mode() const noexcept { return mode_; }

    /// Node set of the first k values (the interpolation set X_k).
    NodeSet1D prefix_nodes(std::size_t k) const;

private:
    DiskLejaSequence source_;
    std::vector<DyadicAngle> angles_;
    std::vector<double> values_;
    RLejaMode mode_ = RLejaMode::dedup;
};

/// The tail B = X(2^n+1 : k-1) of an interpolation section X_k split into
/// blocks of modified Chebyshev points, one per lower-order bit of k-1.
struct BlockDecomposition {
    struct Block {
        std::vector<DyadicAngle> angles; // slice of X, in sequence order
        std::vector<double> values;
        std::size_t degree = 0;   // 2^{n_{i+1}}, the block length
        DyadicAngle shift;        // beta_0 + ... + beta_i, a fraction of a turn
    };

    std::size_t k = 0;
    /// n_0 > n_1 > ... > n_r with k-1 = 2^{n_0 - 1} + 2^{n_1} + ... + 2^{n_r}.
    std::vector<unsigned> exponents;
    std::vector<Block> blocks;
};

/// Decomposes B = X(2^n+1 : k-1) for 2^n+1 <= k <= 2^(n+1). The degenerate
/// k = 2^n+1 (B empty) yields zero blocks. Each block is verified exactly,
/// on dyadic angles, to be the claimed set of modified Chebyshev points;
/// a mismatch throws std::logic_error since it would mean a broken
/// implementation, not bad input.
BlockDecomposition block_decompose(const RLejaSequence& X, std::size_t k);

} // namespace leja

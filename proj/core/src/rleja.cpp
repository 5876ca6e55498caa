#include "leja/rleja.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace leja {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned floor_log2(std::size_t n) {
    return static_cast<unsigned>(std::bit_width(n) - 1);
}

std::size_t source_length_for(std::size_t count) {
    return count <= 1 ? count : phi(count - 1) + 1;
}

} // namespace

std::size_t phi(std::size_t k) {
    if (k <= 1) return k;
    if (is_pow2(k)) return 3 * k / 2 - 1;
    return (std::size_t{1} << floor_log2(k)) + k - 1;
}

RLejaSequence RLejaSequence::project_dedup(DiskLejaSequence source, std::size_t count) {
    source.extend(source_length_for(count));
    RLejaSequence x;
    x.mode_ = RLejaMode::dedup;
    x.angles_.reserve(count);
    x.values_.reserve(count);
    std::unordered_set<DyadicAngle> seen;
    seen.reserve(2 * count);
    for (std::size_t k = 0; x.angles_.size() < count; ++k) {
        if (k >= source.size()) {
            throw std::logic_error("project_dedup: source exhausted before count reached");
        }
        const DyadicAngle a = source.angle(k);
        if (seen.insert(a.real_part_key()).second) {
            x.angles_.push_back(a);
            x.values_.push_back(a.cos_value());
        }
    }
    x.source_ = std::move(source);
    return x;
}

RLejaSequence RLejaSequence::build_by_phi(DiskLejaSequence source, std::size_t count) {
    source.extend(source_length_for(count));
    RLejaSequence x;
    x.mode_ = RLejaMode::phi;
    x.angles_.reserve(count);
    x.values_.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const DyadicAngle a = source.angle(phi(k));
        x.angles_.push_back(a);
        x.values_.push_back(a.cos_value());
    }
    x.source_ = std::move(source);
    return x;
}

NodeSet1D RLejaSequence::prefix_nodes(std::size_t k) const {
    if (k > size()) throw std::invalid_argument("prefix_nodes: k exceeds sequence length");
    return NodeSet1D(std::vector<double>(values_.begin(),
                                         values_.begin() + static_cast<std::ptrdiff_t>(k)));
}

BlockDecomposition block_decompose(const RLejaSequence& X, std::size_t k) {
    if (k < 3) throw std::invalid_argument("block_decompose: k must satisfy 2^n+1 <= k <= 2^(n+1)");
    if (k > X.size()) throw std::invalid_argument("block_decompose: k exceeds sequence length");
    const std::size_t km1 = k - 1;
    const unsigned n = floor_log2(km1); // 2^n <= k-1 < 2^(n+1)

    BlockDecomposition dec;
    dec.k = k;
    dec.exponents.push_back(n + 1); // n_0
    if (is_pow2(km1)) return dec;   // degenerate: B empty, zero blocks

    std::size_t rest = km1 - (std::size_t{1} << n);
    for (unsigned b = n; b-- > 0;) {
        if (rest & (std::size_t{1} << b)) dec.exponents.push_back(b);
    }

    // d_i = 2^{n_0} + ... + 2^{n_i}; block i covers E(d_i : d_{i+1}-1),
    // which is X(2^n + 1 + (d_i - d_0) : ...) elementwise.
    const auto& source = X.source();
    std::size_t d = std::size_t{1} << dec.exponents[0];
    std::size_t x_pos = (std::size_t{1} << n) + 1;
    const std::size_t r = dec.exponents.size() - 1;
    for (std::size_t i = 0; i < r; ++i) {
        BlockDecomposition::Block block;
        block.degree = std::size_t{1} << dec.exponents[i + 1];
        block.shift = source.angle(d);
        for (std::size_t j = 0; j < block.degree; ++j) {
            block.angles.push_back(X.angle(x_pos + j));
            block.values.push_back(X.value(x_pos + j));
        }
        x_pos += block.degree;
        d += block.degree;
        dec.blocks.push_back(std::move(block));
    }

    // Self-checks, exact on dyadic keys.
    if (x_pos != k) throw std::logic_error("block_decompose: blocks do not cover X(2^n+1:k-1)");
    for (const auto& block : dec.blocks) {
        std::unordered_set<DyadicAngle> expected;
        for (const DyadicAngle& a : modified_chebyshev_angles(block.degree, block.shift)) {
            expected.insert(a.real_part_key());
        }
        for (const DyadicAngle& a : block.angles) {
            if (expected.erase(a.real_part_key()) == 0) {
                throw std::logic_error("block_decompose: block is not the claimed set of "
                                       "modified Chebyshev points");
            }
        }
        if (!expected.empty()) {
            throw std::logic_error("block_decompose: block misses claimed modified Chebyshev points");
        }
    }
    return dec;
}

} // namespace leja

#include "leja/leja_disk.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace leja {

namespace {

unsigned floor_log2(std::size_t n) {
    return static_cast<unsigned>(std::bit_width(n) - 1);
}

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// |e^{2pi i a} - e^{2pi i b}| = 2 sin(pi d), d the folded angle difference.
double circle_distance(DyadicAngle a, DyadicAngle b) {
    const DyadicAngle d = (a - b).real_part_key(); // folded to [0, 1/2]
    return 2.0 * std::sin(M_PI * d.turns());
}

} // namespace

RhoChoice RhoChoice::canonical(std::size_t levels) {
    RhoChoice c;
    for (std::size_t n = 0; n < levels; ++n) {
        c.set_level(n, DyadicAngle(1, static_cast<unsigned>(n + 1)));
    }
    return c;
}

RhoChoice RhoChoice::random(std::uint64_t seed, std::size_t levels) {
    RhoChoice c;
    std::mt19937_64 rng(seed);
    for (std::size_t n = 0; n < levels; ++n) {
        const std::uint64_t t = n == 0 ? 0 : rng() & ((std::uint64_t{1} << n) - 1);
        c.set_level(n, DyadicAngle(2 * t + 1, static_cast<unsigned>(n + 1)));
    }
    return c;
}

void RhoChoice::set_level(std::size_t n, DyadicAngle rho) {
    if (rho.log2_den() != n + 1) {
        throw std::invalid_argument("RhoChoice: level " + std::to_string(n) +
                                    " entry " + rho.str() +
                                    " is not a 2^" + std::to_string(n) +
                                    "-th root of -1");
    }
    if (entries_.size() <= n) entries_.resize(n + 1);
    entries_[n] = rho;
}

DyadicAngle RhoChoice::level(std::size_t n) const {
    if (n >= entries_.size() || entries_[n].log2_den() != n + 1) {
        throw std::out_of_range("RhoChoice: no entry for level " + std::to_string(n));
    }
    return entries_[n];
}

DiskLejaSequence::DiskLejaSequence(GenerationRule rule, RhoChoice rho)
    : rule_(rule), rho_(std::move(rho)) {
    angles_.push_back(DyadicAngle{}); // e_0 = 1
}

DiskLejaSequence DiskLejaSequence::canonical() {
    return DiskLejaSequence(GenerationRule::canonical, RhoChoice{});
}

DiskLejaSequence DiskLejaSequence::with_rho(RhoChoice rho) {
    return DiskLejaSequence(GenerationRule::custom_rho, std::move(rho));
}

DiskLejaSequence DiskLejaSequence::from_angles(std::vector<DyadicAngle> angles) {
    DiskLejaSequence seq(GenerationRule::custom_rho, RhoChoice{});
    seq.angles_ = std::move(angles);
    seq.extendable_ = false;
    return seq;
}

void DiskLejaSequence::extend(std::size_t target_len) {
    if (target_len <= angles_.size()) return;
    if (!extendable_) {
        throw std::invalid_argument("DiskLejaSequence: sequence built from raw angles "
                                    "cannot be extended");
    }
    if (angles_.empty()) angles_.push_back(DyadicAngle{});
    while (angles_.size() < target_len) {
        const std::size_t len = angles_.size();
        const unsigned n = floor_log2(len); // completing the block up to 2^(n+1)
        const DyadicAngle rho = rule_ == GenerationRule::canonical
                                    ? DyadicAngle(1, n + 1)
                                    : rho_.level(n);
        const std::size_t block = std::size_t{1} << n;
        for (std::size_t j = len - block; j < block && angles_.size() < target_len; ++j) {
            angles_.push_back(rho + angles_[j]);
        }
    }
}

std::complex<double> DiskLejaSequence::point(std::size_t k) const {
    const DyadicAngle a = angles_.at(k);
    return {a.cos_value(), a.sin_value()};
}

DiskLejaSequence extend_canonical(DiskLejaSequence seq, std::size_t target_len) {
    if (seq.rule() != GenerationRule::canonical) {
        throw std::invalid_argument("extend_canonical: sequence uses a custom rho rule");
    }
    seq.extend(target_len);
    return seq;
}

DiskLejaSequence extend_with_rho(DiskLejaSequence seq, const RhoChoice& rho,
                                 std::size_t target_len) {
    if (seq.size() <= 1) {
        DiskLejaSequence fresh = DiskLejaSequence::with_rho(rho);
        fresh.extend(target_len);
        return fresh;
    }
    if (seq.rule() != GenerationRule::custom_rho) {
        throw std::invalid_argument("extend_with_rho: sequence was not generated from a RhoChoice");
    }
    // The already materialized prefix must agree with the supplied choices.
    for (std::size_t n = 0; (std::size_t{1} << n) < seq.size(); ++n) {
        if (seq.rho().level(n) != rho.level(n)) {
            throw std::invalid_argument("extend_with_rho: rho conflicts with the existing prefix");
        }
    }
    DiskLejaSequence fresh = DiskLejaSequence::with_rho(rho);
    fresh.extend(target_len);
    return fresh;
}

namespace {

/// log of the distance product from the circle point at `theta` turns to
/// the first j sequence points.
double log_product_at(double theta, std::span<const double> turns, std::size_t j) {
    double acc = 0.0;
    for (std::size_t m = 0; m < j; ++m) {
        const double s = std::fabs(std::sin(M_PI * (theta - turns[m])));
        if (s == 0.0) return -std::numeric_limits<double>::infinity();
        acc += std::log(2.0 * s);
    }
    return acc;
}

double ternary_max(double lo, double hi, const auto& f) {
    double flo = f(lo), fhi = f(hi);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        const double f1 = f(m1), f2 = f(m2);
        if (f1 < f2) {
            lo = m1;
            flo = f1;
        } else {
            hi = m2;
            fhi = f2;
        }
    }
    return std::max({flo, fhi, f(0.5 * (lo + hi))});
}

} // namespace

LejaValidationReport validate_leja_property(const DiskLejaSequence& seq,
                                            std::size_t upto,
                                            std::size_t grid_size) {
    if (upto > seq.size()) {
        throw std::invalid_argument("validate_leja_property: upto exceeds sequence length");
    }
    if (grid_size < 4 * upto) {
        throw std::invalid_argument("validate_leja_property: grid_size must be >= 4*upto");
    }
    LejaValidationReport report;
    report.pass = true;
    report.upto = upto;
    report.grid_size = grid_size;
    report.worst_margin = std::numeric_limits<double>::infinity();

    std::vector<double> turns(upto);
    for (std::size_t m = 0; m < upto; ++m) turns[m] = seq.angle(m).turns();

    std::vector<double> grid(grid_size);
    for (std::size_t j = 1; j < upto; ++j) {
        double log_prod = 0.0;
        for (std::size_t m = 0; m < j; ++m) {
            log_prod += std::log(circle_distance(seq.angle(j), seq.angle(m)));
        }

        const auto f = [&](double theta) { return log_product_at(theta, turns, j); };
        for (std::size_t i = 0; i < grid_size; ++i) {
            grid[i] = f(static_cast<double>(i) / static_cast<double>(grid_size));
        }
        double grid_max = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < grid_size; ++i) {
            const double prev = grid[(i + grid_size - 1) % grid_size];
            const double next = grid[(i + 1) % grid_size];
            if (grid[i] < prev || grid[i] < next) continue;
            const double lo = (static_cast<double>(i) - 1.0) / static_cast<double>(grid_size);
            const double hi = (static_cast<double>(i) + 1.0) / static_cast<double>(grid_size);
            grid_max = std::max(grid_max, ternary_max(lo, hi, f));
        }

        const double eps = std::numeric_limits<double>::epsilon();
        const double res = static_cast<double>(upto) / static_cast<double>(grid_size);
        const double tol = 10.0 * eps * static_cast<double>(j) + res * res;
        const double margin = log_prod - grid_max;
        const bool pass = margin >= std::log1p(-tol);
        if (margin < report.worst_margin) {
            report.worst_margin = margin;
            report.worst_j = j;
        }
        if (!pass) {
            report.pass = false;
            report.failures.push_back({j, log_prod, grid_max, tol, false});
        }
    }
    return report;
}

namespace {

/// True iff the first 2^n entries are pairwise distinct angles with
/// denominator exponent at most n — by counting, exactly the 2^n-th roots
/// of unity.
bool is_root_set(std::span<const DyadicAngle> s, unsigned n, std::string& err) {
    const std::size_t count = std::size_t{1} << n;
    std::unordered_set<DyadicAngle> seen;
    seen.reserve(count * 2);
    for (std::size_t i = 0; i < count; ++i) {
        if (s[i].log2_den() > n) {
            err = "entry " + std::to_string(i) + " = " + s[i].str() +
                  " is not a 2^" + std::to_string(n) + "-th root of unity";
            return false;
        }
        if (!seen.insert(s[i]).second) {
            err = "duplicate angle " + s[i].str() + " within the first " +
                  std::to_string(count) + " entries";
            return false;
        }
    }
    return true;
}

bool structure_rec(std::vector<DyadicAngle> s, std::string& err) {
    if (s.empty()) return true;
    if (s[0] != DyadicAngle{}) {
        err = "block does not start at angle 0 (found " + s[0].str() + ")";
        return false;
    }
    const std::size_t len = s.size();
    if (len == 1) return true;

    const unsigned n0 = floor_log2(len);
    const std::size_t head = is_pow2(len) ? len / 2 : (std::size_t{1} << n0);
    const unsigned rho_order = floor_log2(head); // head = 2^rho_order

    if (is_pow2(len) && !is_root_set(s, n0, err)) return false;

    const DyadicAngle rho = s[head];
    if (rho.log2_den() != rho_order + 1) {
        err = "entry at index " + std::to_string(head) + " = " + rho.str() +
              " is not a 2^" + std::to_string(rho_order) + "-th root of -1";
        return false;
    }

    std::vector<DyadicAngle> tail(s.begin() + static_cast<std::ptrdiff_t>(head), s.end());
    for (auto& a : tail) a = a - rho;
    s.resize(head);
    return structure_rec(std::move(s), err) && structure_rec(std::move(tail), err);
}

} // namespace

StructureReport structure_check(const DiskLejaSequence& seq, std::size_t upto) {
    if (upto > seq.size()) {
        throw std::invalid_argument("structure_check: upto exceeds sequence length");
    }
    StructureReport report;
    report.upto = upto;
    std::vector<DyadicAngle> prefix(seq.angles().begin(),
                                    seq.angles().begin() + static_cast<std::ptrdiff_t>(upto));
    report.pass = structure_rec(prefix, report.message);
    if (report.pass) {
        for (unsigned n = 0; (std::size_t{1} << n) < upto; ++n) {
            report.rho_levels.push_back(seq.angle(std::size_t{1} << n));
        }
    }
    return report;
}

} // namespace leja

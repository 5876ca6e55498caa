#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace leja {

/// Seed used by all randomized sweeps unless the caller overrides it; it is
/// recorded in every report so runs can be replayed.
inline constexpr std::uint64_t default_check_seed = 1729;

/// Numeric verdict for one quantitative claim.
///
/// Two modes. "hard-bound": the claim is a proven inequality, any violation
/// beyond rounding slack is an implementation bug and fails the check.
/// "bounded-constant": the claim is an O(.) statement; it cannot be
/// falsified at finite scale, so the check stress-tests it by requiring the
/// running sup over dyadic parameter windows to stabilize (the last window
/// must not exceed 1.05x the sup over the earlier ones).
struct BoundCheckReport {
    std::string claim;
    std::string mode;
    bool pass = false;
    double worst_ratio = 0.0; // empirical quantity / theoretical bound (or sup constant)
    std::uint64_t seed = 0;
    std::size_t sweep_size = 0;
    std::vector<std::pair<std::string, double>> witness; // parameters attaining the worst ratio
    std::vector<double> window_sups;
    std::vector<std::pair<std::string, double>> stats;
};

/// |sin a| >= |sin(2^n a)| / 2^n over random (a, n <= 20).
BoundCheckReport check_sin_halving(std::size_t trials,
                                   std::uint64_t seed = default_check_seed);

/// The product-of-sines inequality: for decreasing exponents n_0 > ... > n_r
/// and offsets with 2^{n_j} phi_j = pi (mod 2pi),
///   prod_j |sin 2^{n_{j+1}-1}(phi - phi_0 - ... - phi_j)|
///     >= 2^{-(n_0-n_r)} |cos 2^{n_0-1} phi|.
/// Sweeps `trials` random configurations, each against a phi grid.
BoundCheckReport check_trig_lemma(std::size_t trials, std::size_t phi_grid = 10000,
                                  std::uint64_t seed = default_check_seed);

/// Boundedness of Delta(T_d^(beta)) * |sin(2 pi d beta)| / log(d+1) over
/// dyadic degrees d <= d_max and random dyadic beta.
BoundCheckReport check_modcheb_lebesgue(std::size_t d_max, std::size_t betas_per_degree,
                                        std::uint64_t seed = default_check_seed);

/// Lower bounds: Delta(X(0:2^n-1)) >= 2^n - 2 for n = 3..n_max, and
/// Delta(L_d minus an interior node) >= d - 2 for d in {8, 16, 32}.
BoundCheckReport check_lower_bound(unsigned n_max);

/// The master growth estimate Delta(X_k) = O(k^3 log k), stress-tested over
/// k <= k_max together with its proven ingredients: the nodal-ratio bounds
/// max|w_B|/|w_B(a)| <= 2^(2n+2) and max|w_A|/|w_A(b)| <= 1/sin(pi/2^(n+1)),
/// and the block estimate Delta(B) = O(2^(2n) log 2^n).
BoundCheckReport check_master_bound(std::size_t k_max);

/// Kolmogorov-Smirnov distance between the empirical distribution of
/// {x_0..x_d}, d = 2^n, and the arcsine law, for n = 2..n_max; the distance
/// must decrease and scale like 1/d.
BoundCheckReport check_equilibrium_measure(unsigned n_max);

} // namespace leja

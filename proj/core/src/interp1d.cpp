#include "leja/interp1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "leja/parallel.hpp"

namespace leja {

double ScaledReal::to_double() const {
    if (mantissa == 0.0) return 0.0;
    return std::ldexp(mantissa, static_cast<int>(std::clamp<long>(exponent, -2100, 2100)));
}

double ScaledReal::log2_abs() const {
    if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log2(std::fabs(mantissa)) + static_cast<double>(exponent);
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Index of the node equal to x, or npos. Exact equality: the barycentric
/// form is singular only at the nodes themselves.
std::size_t node_hit(const NodeSet1D& A, double x) {
    const auto nodes = A.nodes();
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (x == nodes[j]) return j;
    }
    return npos;
}

} // namespace

double flip_eval(const NodeSet1D& A, std::size_t j, double x) {
    if (j >= A.size()) throw std::invalid_argument("flip_eval: node index out of range");
    const std::size_t hit = node_hit(A, x);
    if (hit != npos) return hit == j ? 1.0 : 0.0;
    const auto nodes = A.nodes();
    const auto w = A.bary_weights();
    double denom = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        denom += w[i] / (x - nodes[i]);
    }
    return (w[j] / (x - nodes[j])) / denom;
}

double interpolate(const NodeSet1D& A, std::span<const double> f_values, double x) {
    if (f_values.size() != A.size()) {
        throw std::invalid_argument("interpolate: value count does not match node count");
    }
    const std::size_t hit = node_hit(A, x);
    if (hit != npos) return f_values[hit];
    const auto nodes = A.nodes();
    const auto w = A.bary_weights();
    double num = 0.0, denom = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double t = w[i] / (x - nodes[i]);
        num += t * f_values[i];
        denom += t;
    }
    return num / denom;
}

ScaledReal nodal_poly_eval(const NodeSet1D& A, double x) {
    double m = 1.0;
    long e = 0;
    for (double a : A.nodes()) {
        int f;
        m = std::frexp(m * (x - a), &f);
        e += f;
        if (m == 0.0) return {};
    }
    // frexp leaves |m| in [0.5,1); shift to [1,2).
    return {m * 2.0, e - 1};
}

double lebesgue_function(const NodeSet1D& A, double x) {
    if (node_hit(A, x) != npos) return 1.0;
    const auto nodes = A.nodes();
    const auto w = A.bary_weights();
    double num = 0.0, denom = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double t = w[i] / (x - nodes[i]);
        num += std::fabs(t);
        denom += t;
    }
    return num / std::fabs(denom);
}

namespace {

struct GapResult {
    double best = 0.0;
    double best_x = 0.0;
    double cert = 0.0;
    double cert_x = 0.0;
    bool refined = false;
};

double ternary_max_x(double lo, double hi, const auto& f, double& out_x) {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (2.0 + std::fabs(lo) + std::fabs(hi)); ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    out_x = 0.5 * (lo + hi);
    return f(out_x);
}

} // namespace

LebesgueEstimate lebesgue_constant(const NodeSet1D& A, std::size_t samples_per_gap) {
    if (samples_per_gap < 8) {
        throw std::invalid_argument("lebesgue_constant: samples_per_gap must be >= 8");
    }
    const auto nodes = A.nodes();
    const auto order = A.sorted_order();
    const std::size_t n = A.size();

    std::vector<std::pair<double, double>> gaps;
    if (nodes[order[0]] > -1.0) gaps.emplace_back(-1.0, nodes[order[0]]);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        gaps.emplace_back(nodes[order[i]], nodes[order[i + 1]]);
    }
    if (nodes[order[n - 1]] < 1.0) gaps.emplace_back(nodes[order[n - 1]], 1.0);
    if (gaps.empty()) gaps.emplace_back(-1.0, 1.0); // single node at +-1

    const std::size_t S = samples_per_gap;
    std::vector<GapResult> results(gaps.size());
    parallel_for(gaps.size(), [&](std::size_t g) {
        const auto [lo, hi] = gaps[g];
        GapResult r;
        r.best = r.cert = -1.0;
        std::vector<double> xs(S + 1), vals(S + 1);
        for (std::size_t j = 0; j <= S; ++j) {
            xs[j] = lo + (hi - lo) * (static_cast<double>(j) / static_cast<double>(S));
            vals[j] = lebesgue_function(A, xs[j]);
            if (vals[j] > r.cert) {
                r.cert = vals[j];
                r.cert_x = xs[j];
            }
        }
        r.best = r.cert;
        r.best_x = r.cert_x;
        const auto f = [&](double x) { return lebesgue_function(A, x); };
        for (std::size_t j = 0; j <= S; ++j) {
            const bool left_ok = j == 0 || vals[j] >= vals[j - 1];
            const bool right_ok = j == S || vals[j] >= vals[j + 1];
            if (!left_ok || !right_ok) continue;
            const double a = j == 0 ? lo : xs[j - 1];
            const double b = j == S ? hi : xs[j + 1];
            double where;
            const double refined = ternary_max_x(a, b, f, where);
            r.refined = true;
            if (refined > r.best || (refined == r.best && where < r.best_x)) {
                r.best = refined;
                r.best_x = where;
            }
        }
        results[g] = r;
    });

    LebesgueEstimate est;
    est.samples_per_gap = samples_per_gap;
    est.value = -1.0;
    est.certified_lower = -1.0;
    for (const GapResult& r : results) {
        est.refined = est.refined || r.refined;
        if (r.cert > est.certified_lower) est.certified_lower = r.cert;
        if (r.best > est.value || (r.best == est.value && r.best_x < est.argmax)) {
            est.value = r.best;
            est.argmax = r.best_x;
        }
    }
    // Refinement can only sharpen the bound upward.
    est.value = std::max(est.value, est.certified_lower);
    return est;
}

double nodal_ratio_bound(const NodeSet1D& poly_nodes, std::span<const double> probes,
                         std::size_t grid_size) {
    if (probes.empty()) throw std::invalid_argument("nodal_ratio_bound: no probe points");
    double min_probe = std::numeric_limits<double>::infinity();
    for (double p : probes) {
        const double l = nodal_poly_eval(poly_nodes, p).log2_abs();
        if (std::isinf(l) && l < 0) {
            throw std::domain_error("nodal_ratio_bound: probe point coincides with a node");
        }
        min_probe = std::min(min_probe, l);
    }

    // |w(cos t)| oscillates at the node count's frequency in t; sample
    // finely enough in t to see every lobe, then sharpen.
    if (grid_size == 0) grid_size = std::max<std::size_t>(4096, 64 * poly_nodes.size());
    const auto f = [&](double theta) {
        return nodal_poly_eval(poly_nodes, std::cos(theta)).log2_abs();
    };
    std::vector<double> vals(grid_size + 1);
    for (std::size_t i = 0; i <= grid_size; ++i) {
        vals[i] = f(M_PI * static_cast<double>(i) / static_cast<double>(grid_size));
    }
    double max_log = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= grid_size; ++i) {
        max_log = std::max(max_log, vals[i]);
        const bool left_ok = i == 0 || vals[i] >= vals[i - 1];
        const bool right_ok = i == grid_size || vals[i] >= vals[i + 1];
        if (!left_ok || !right_ok) continue;
        const double a = M_PI * (i == 0 ? 0.0 : static_cast<double>(i - 1)) /
                         static_cast<double>(grid_size);
        const double b = M_PI * (i == grid_size ? static_cast<double>(grid_size)
                                                : static_cast<double>(i + 1)) /
                         static_cast<double>(grid_size);
        double where;
        max_log = std::max(max_log, ternary_max_x(a, b, f, where));
    }
    return std::exp2(max_log - min_probe);
}

} // namespace leja

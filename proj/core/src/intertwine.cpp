#include "leja/intertwine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "leja/parallel.hpp"

namespace leja {

namespace {

void enumerate_degree(unsigned remaining, std::size_t axis, std::size_t dim,
                      MultiIndex& current, std::vector<MultiIndex>& out) {
    if (axis + 1 == dim) {
        current[axis] = remaining;
        out.push_back(current);
        return;
    }
    for (unsigned a = remaining + 1; a-- > 0;) {
        current[axis] = a;
        enumerate_degree(remaining - a, axis + 1, dim, current, out);
    }
}

} // namespace

IntertwinedGrid::IntertwinedGrid(std::vector<std::vector<double>> axes, unsigned degree)
    : axes_(std::move(axes)), degree_(degree) {
    const std::size_t dim = axes_.size();
    if (dim == 0) throw std::invalid_argument("IntertwinedGrid: dimension must be >= 1");
    for (const auto& axis : axes_) {
        if (axis.size() < static_cast<std::size_t>(degree) + 1) {
            throw std::invalid_argument("IntertwinedGrid: axis shorter than degree+1");
        }
    }

    MultiIndex current(dim);
    for (unsigned t = 0; t <= degree_; ++t) {
        enumerate_degree(t, 0, dim, current, indices_);
    }
    const std::size_t m = indices_.size();

    points_.resize(m * dim);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            points_[i * dim + j] = axes_[j][indices_[i][j]];
        }
    }

    // Lower-triangular Newton factor. Entries with some beta_j < alpha_j
    // contain an exactly repeated node factor; they are left as structural
    // zeros rather than computed.
    factor_.assign(m * m, 0.0);
    for (std::size_t row = 0; row < m; ++row) {
        const MultiIndex& beta = indices_[row];
        for (std::size_t col = 0; col <= row; ++col) {
            const MultiIndex& alpha = indices_[col];
            bool supported = true;
            for (std::size_t j = 0; j < dim; ++j) {
                if (beta[j] < alpha[j]) {
                    supported = false;
                    break;
                }
            }
            if (!supported) continue;
            double v = 1.0;
            for (std::size_t j = 0; j < dim; ++j) {
                const double xb = axes_[j][beta[j]];
                for (unsigned i = 0; i < alpha[j]; ++i) {
                    v *= xb - axes_[j][i];
                }
            }
            factor_[row * m + col] = v;
        }
        if (std::fabs(factor_[row * m + row]) < 1e-300) {
            throw std::domain_error("IntertwinedGrid: degenerate Newton diagonal "
                                    "(repeated axis values?)");
        }
    }

    // Inverse by forward substitution, one unit column at a time.
    inverse_.assign(m * m, 0.0);
    for (std::size_t col = 0; col < m; ++col) {
        for (std::size_t row = col; row < m; ++row) {
            double rhs = row == col ? 1.0 : 0.0;
            for (std::size_t i = col; i < row; ++i) {
                rhs -= factor_[row * m + i] * inverse_[i * m + col];
            }
            inverse_[row * m + col] = rhs / factor_[row * m + row];
        }
    }
}

std::span<const double> IntertwinedGrid::point(std::size_t i) const {
    const std::size_t dim = dimension();
    return {points_.data() + i * dim, dim};
}

double IntertwinedGrid::newton_entry(std::size_t row, std::size_t col) const {
    return factor_.at(row * size() + col);
}

std::vector<double> IntertwinedGrid::newton_values(std::span<const double> x) const {
    const std::size_t dim = dimension();
    if (x.size() != dim) throw std::invalid_argument("IntertwinedGrid: point has wrong dimension");
    // Per-axis prefix products prod_{i<a}(x_j - axis_j[i]).
    std::vector<std::vector<double>> prefix(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        prefix[j].resize(degree_ + 1);
        double p = 1.0;
        for (unsigned a = 0; a <= degree_; ++a) {
            prefix[j][a] = p;
            p *= x[j] - axes_[j][a];
        }
    }
    std::vector<double> n(size());
    for (std::size_t i = 0; i < size(); ++i) {
        double v = 1.0;
        for (std::size_t j = 0; j < dim; ++j) v *= prefix[j][indices_[i][j]];
        n[i] = v;
    }
    return n;
}

std::vector<double> IntertwinedGrid::newton_coefficients(std::span<const double> f_values) const {
    const std::size_t m = size();
    if (f_values.size() != m) {
        throw std::invalid_argument("IntertwinedGrid: value count does not match grid size");
    }
    std::vector<double> c(m);
    for (std::size_t row = 0; row < m; ++row) {
        double rhs = f_values[row];
        for (std::size_t i = 0; i < row; ++i) rhs -= factor_[row * m + i] * c[i];
        c[row] = rhs / factor_[row * m + row];
    }
    return c;
}

double IntertwinedGrid::interpolate(std::span<const double> f_values,
                                    std::span<const double> x) const {
    const std::vector<double> c = newton_coefficients(f_values);
    const std::vector<double> n = newton_values(x);
    double acc = 0.0;
    for (std::size_t i = 0; i < size(); ++i) acc += c[i] * n[i];
    return acc;
}

double IntertwinedGrid::flip(std::size_t beta, std::span<const double> x) const {
    const std::size_t m = size();
    if (beta >= m) throw std::invalid_argument("IntertwinedGrid: flip index out of range");
    const std::vector<double> n = newton_values(x);
    // l_beta = sum_alpha inverse_[alpha][beta] N_alpha; the column is zero
    // above the diagonal.
    double acc = 0.0;
    for (std::size_t a = beta; a < m; ++a) acc += inverse_[a * m + beta] * n[a];
    return acc;
}

double IntertwinedGrid::lebesgue_function(std::span<const double> x) const {
    const std::size_t m = size();
    const std::vector<double> n = newton_values(x);
    double acc = 0.0;
    for (std::size_t b = 0; b < m; ++b) {
        double l = 0.0;
        for (std::size_t a = b; a < m; ++a) l += inverse_[a * m + b] * n[a];
        acc += std::fabs(l);
    }
    return acc;
}

IntertwinedGrid build_grid(std::vector<std::vector<double>> axes, unsigned degree) {
    return IntertwinedGrid(std::move(axes), degree);
}

double interpolate_nd(const IntertwinedGrid& G, std::span<const double> f_values,
                      std::span<const double> x) {
    return G.interpolate(f_values, x);
}

double flip_eval_nd(const IntertwinedGrid& G, std::size_t beta, std::span<const double> x) {
    return G.flip(beta, x);
}

NdLebesgueEstimate lebesgue_constant_nd(const IntertwinedGrid& G,
                                        std::size_t per_axis_samples) {
    if (per_axis_samples < 16) {
        throw std::invalid_argument("lebesgue_constant_nd: per_axis_samples must be >= 16");
    }
    const std::size_t dim = G.dimension();
    const std::size_t S = per_axis_samples;
    double budget = 1.0;
    for (std::size_t j = 0; j < dim; ++j) budget *= static_cast<double>(S + 1);
    if (budget > 1e7) throw std::invalid_argument("lebesgue_constant_nd: sample budget exceeded");
    const std::size_t total = static_cast<std::size_t>(budget);

    std::vector<double> axis_samples(S + 1);
    for (std::size_t i = 0; i <= S; ++i) {
        axis_samples[i] = std::cos(M_PI * static_cast<double>(i) / static_cast<double>(S));
    }

    const auto decode = [&](std::size_t flat, std::vector<std::size_t>& digits) {
        for (std::size_t j = dim; j-- > 0;) {
            digits[j] = flat % (S + 1);
            flat /= (S + 1);
        }
    };

    constexpr std::size_t chunk = 4096;
    const std::size_t n_chunks = (total + chunk - 1) / chunk;
    struct Best {
        double value = -1.0;
        std::size_t flat = 0;
    };
    std::vector<Best> chunk_best(n_chunks);
    parallel_for(n_chunks, [&](std::size_t c) {
        std::vector<std::size_t> digits(dim);
        std::vector<double> x(dim);
        Best b;
        const std::size_t lo = c * chunk;
        const std::size_t hi = std::min(total, lo + chunk);
        for (std::size_t flat = lo; flat < hi; ++flat) {
            decode(flat, digits);
            for (std::size_t j = 0; j < dim; ++j) x[j] = axis_samples[digits[j]];
            const double v = G.lebesgue_function(x);
            if (v > b.value) {
                b.value = v;
                b.flat = flat;
            }
        }
        chunk_best[c] = b;
    });

    Best best;
    for (const Best& b : chunk_best) {
        if (b.value > best.value) best = b; // earlier chunks win ties: smaller x lexicographically
    }

    NdLebesgueEstimate est;
    est.per_axis_samples = per_axis_samples;
    est.certified_lower = best.value;

    std::vector<std::size_t> digits(dim);
    decode(best.flat, digits);
    std::vector<double> x(dim);
    for (std::size_t j = 0; j < dim; ++j) x[j] = axis_samples[digits[j]];

    // Coordinate-wise sharpening between the neighbouring grid planes.
    std::vector<std::pair<double, double>> bracket(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        const std::size_t i = digits[j]; // axis_samples descends with i
        const double hi_x = i == 0 ? 1.0 : axis_samples[i - 1];
        const double lo_x = i == S ? -1.0 : axis_samples[i + 1];
        bracket[j] = {lo_x, hi_x};
    }
    double value = best.value;
    for (int pass = 0; pass < 40; ++pass) {
        const double before = value;
        for (std::size_t j = 0; j < dim; ++j) {
            auto [lo, hi] = bracket[j];
            const auto f = [&](double t) {
                x[j] = t;
                return G.lebesgue_function(x);
            };
            const double keep = x[j];
            double left = lo, right = hi;
            for (int it = 0; it < 120 && right - left > 1e-13; ++it) {
                const double m1 = left + (right - left) / 3.0;
                const double m2 = right - (right - left) / 3.0;
                if (f(m1) < f(m2)) {
                    left = m1;
                } else {
                    right = m2;
                }
            }
            const double mid = 0.5 * (left + right);
            const double v = f(mid);
            if (v > value) {
                value = v;
                x[j] = mid;
            } else {
                x[j] = keep;
            }
        }
        est.refined = true;
        if (value <= before * (1.0 + 1e-9)) break;
    }

    est.value = std::max(value, est.certified_lower);
    est.argmax.assign(x.begin(), x.end());
    return est;
}

} // namespace leja

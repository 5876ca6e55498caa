#include "experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "leja/interp1d.hpp"
#include "leja/intertwine.hpp"
#include "leja/rleja.hpp"
#include "leja/version.hpp"
#include "svg.hpp"

namespace leja::tools {

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string render_report(const ReportTable& table, const Meta& meta, OutputFormat format) {
    return format == OutputFormat::csv ? table_to_csv(table) : table_to_json(table, meta);
}

void emit_report(const ReportTable& table, const Meta& meta, OutputFormat format,
                 const std::string& path) {
    write_file(path, render_report(table, meta, format));
}

namespace {

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
};

SlopeFit fit_loglog(const std::vector<std::pair<double, double>>& pts, double min_x) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (const auto& [x, y] : pts) {
        if (x < min_x || !(y > 0.0)) continue;
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return {};
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    const double slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
    return {slope, (sy - slope * sx) / static_cast<double>(n)};
}

} // namespace

GrowthResult run_growth_experiment(const GrowthConfig& cfg) {
    if (cfg.max_k < 1) throw std::invalid_argument("growth: empty k range");
    if (cfg.dim < 1) throw std::invalid_argument("growth: dimension must be >= 1");
    if (cfg.out_base.empty()) throw std::invalid_argument("growth: missing output path");
    if (cfg.dim == 1 && cfg.samples < 8) {
        throw std::invalid_argument("growth: need at least 8 samples per gap");
    }
    if (cfg.dim >= 2 && cfg.samples < 16) {
        throw std::invalid_argument("growth: need at least 16 samples per axis");
    }

    GrowthResult result;
    std::vector<std::pair<double, double>> pts;
    if (cfg.dim == 1) {
        result.table.columns = {"k", "delta", "delta_over_k3logk"};
        const RLejaSequence x =
            RLejaSequence::project_dedup(DiskLejaSequence::canonical(), cfg.max_k);
        for (std::size_t k = 1; k <= cfg.max_k; ++k) {
            const double delta = lebesgue_constant(x.prefix_nodes(k), cfg.samples).value;
            const double kd = static_cast<double>(k);
            const double bound = kd * kd * kd * std::log(kd);
            result.table.rows.push_back(
                {kd, delta, bound > 0.0 ? delta / bound
                                        : std::numeric_limits<double>::quiet_NaN()});
            pts.emplace_back(kd, delta);
        }
    } else {
        result.table.columns = {"k", "delta", "delta_over_bound"};
        const double nn = static_cast<double>(cfg.dim);
        const double exponent = (nn * nn + 11.0 * nn - 6.0) / 2.0;
        const std::vector<double> axis = [&] {
            const RLejaSequence x = RLejaSequence::project_dedup(
                DiskLejaSequence::canonical(), cfg.max_k + 1);
            return std::vector<double>(x.values().begin(), x.values().end());
        }();
        for (std::size_t k = 1; k <= cfg.max_k; ++k) {
            const IntertwinedGrid grid(
                std::vector<std::vector<double>>(cfg.dim, axis), static_cast<unsigned>(k));
            const double delta = lebesgue_constant_nd(grid, cfg.samples).value;
            const double kd = static_cast<double>(k);
            const double bound =
                std::pow(kd, exponent) * std::pow(std::log(kd), nn);
            result.table.rows.push_back(
                {kd, delta, bound > 0.0 ? delta / bound
                                        : std::numeric_limits<double>::quiet_NaN()});
            pts.emplace_back(kd, delta);
        }
    }

    const SlopeFit fit = fit_loglog(pts, cfg.dim == 1 ? 8.0 : 2.0);
    result.slope = fit.slope;
    result.intercept = fit.intercept;

    Meta meta{{"command", "growth"},
              {"dim", std::to_string(cfg.dim)},
              {"max_k", std::to_string(cfg.max_k)},
              {"samples", std::to_string(cfg.samples)},
              {"seed", std::to_string(cfg.seed)},
              {"slope", format_double(result.slope)},
              {"version", version}};

    const std::string table_path =
        cfg.out_base + (cfg.format == OutputFormat::csv ? ".csv" : ".json");
    emit_report(result.table, meta, cfg.format, table_path);
    result.files.push_back(table_path);

    const std::string svg = render_loglog_svg(
        pts, result.slope, result.intercept,
        cfg.dim == 1 ? "Lebesgue constant growth, 1D sections"
                     : "Lebesgue constant growth, intertwined grids",
        "k", "delta");
    const std::string svg_path = cfg.out_base + ".svg";
    write_file(svg_path, svg);
    result.files.push_back(svg_path);
    return result;
}

double eval_test_function(const std::string& id, double x) {
    if (id == "runge") return 1.0 / (1.0 + 25.0 * x * x);
    if (id == "abs5") return std::pow(std::fabs(x), 5);
    if (id == "cinf") return std::exp(std::cos(3.0 * x));
    if (id == "const") return 1.0;
    throw std::invalid_argument("unknown test function: " + id);
}

ConvergeResult run_convergence_demo(const ConvergeConfig& cfg) {
    eval_test_function(cfg.function, 0.0); // validate the id up front
    if (cfg.family != "rleja" && cfg.family != "equispaced") {
        throw std::invalid_argument("unknown node family: " + cfg.family);
    }
    if (cfg.max_k < 4) throw std::invalid_argument("converge: max_k must be >= 4");
    if (cfg.grid < 16) throw std::invalid_argument("converge: grid too small");
    if (cfg.out_path.empty()) throw std::invalid_argument("converge: missing output path");

    ConvergeResult result;
    result.table.columns = {"k", "sup_error"};

    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), cfg.max_k);
    for (std::size_t k = 4; k <= cfg.max_k; k *= 2) {
        std::vector<double> nodes;
        if (cfg.family == "rleja") {
            nodes.assign(x.values().begin(),
                         x.values().begin() + static_cast<std::ptrdiff_t>(k));
        } else {
            nodes.resize(k);
            for (std::size_t i = 0; i < k; ++i) {
                nodes[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(k - 1);
            }
        }
        const NodeSet1D A(std::move(nodes));
        std::vector<double> f(A.size());
        for (std::size_t i = 0; i < A.size(); ++i) {
            f[i] = eval_test_function(cfg.function, A.node(i));
        }
        double sup = 0.0;
        for (std::size_t i = 0; i <= cfg.grid; ++i) {
            const double t =
                -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(cfg.grid);
            sup = std::max(sup,
                           std::fabs(interpolate(A, f, t) - eval_test_function(cfg.function, t)));
        }
        result.table.rows.push_back({static_cast<double>(k), sup});
    }

    Meta meta{{"command", "converge"},
              {"family", cfg.family},
              {"function", cfg.function},
              {"grid", std::to_string(cfg.grid)},
              {"max_k", std::to_string(cfg.max_k)},
              {"seed", std::to_string(cfg.seed)},
              {"version", version}};
    emit_report(result.table, meta, cfg.format, cfg.out_path);
    result.files.push_back(cfg.out_path);
    return result;
}

} // namespace leja::tools

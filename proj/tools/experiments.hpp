#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "leja/checks.hpp"
#include "leja/io.hpp"

namespace leja::tools {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& name);

/// Renders a table in the requested format (CSV ignores the meta block;
/// JSON embeds it). Output is deterministic: same table and meta, same
/// bytes.
std::string render_report(const ReportTable& table, const Meta& meta, OutputFormat format);

/// Renders and writes in one step.
void emit_report(const ReportTable& table, const Meta& meta, OutputFormat format,
                 const std::string& path);

struct GrowthConfig {
    std::size_t max_k = 0;   // rows k = 1..max_k
    unsigned dim = 1;        // 1: Delta(X_k); >= 2: Delta(P_k) on intertwined grids
    std::size_t samples = 64;    // per gap (1D) or per axis (ND)
    std::string out_base;        // writes <out_base>.csv and <out_base>.svg
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = default_check_seed;
};

struct GrowthResult {
    ReportTable table;
    double slope = 0.0;     // least-squares slope of log delta vs log k
    double intercept = 0.0; // natural-log intercept of the fit
    std::vector<std::string> files;
};

/// Lebesgue-constant growth table plus a log-log plot with the fitted
/// slope. Validates the configuration before any file is written.
GrowthResult run_growth_experiment(const GrowthConfig& cfg);

struct ConvergeConfig {
    std::string function;          // runge | abs5 | cinf | const
    std::string family = "rleja";  // rleja | equispaced
    std::size_t max_k = 256;       // dyadic k from 4 up to max_k
    std::size_t grid = 10000;      // sup-norm sample points
    std::string out_path;
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = default_check_seed;
};

struct ConvergeResult {
    ReportTable table;
    std::vector<std::string> files;
};

/// Interpolation sup-error against k for one test function.
ConvergeResult run_convergence_demo(const ConvergeConfig& cfg);

/// The built-in test functions; throws std::invalid_argument for unknown
/// ids.
double eval_test_function(const std::string& id, double x);

} // namespace leja::tools

#include <algorithm>
#include <clocale>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "experiments.hpp"
#include "leja/checks.hpp"
#include "leja/interp1d.hpp"
#include "leja/intertwine.hpp"
#include "leja/io.hpp"
#include "leja/parallel.hpp"
#include "leja/rleja.hpp"
#include "leja/version.hpp"

using namespace leja;

namespace {

/// "P/2^Q" -> DyadicAngle(P, Q).
DyadicAngle parse_beta(const std::string& text) {
    const auto sep = text.find("/2^");
    if (sep == std::string::npos) {
        throw std::invalid_argument("expected an angle of the form P/2^Q, got '" + text + "'");
    }
    const std::uint64_t num = std::stoull(text.substr(0, sep));
    const unsigned q = static_cast<unsigned>(std::stoul(text.substr(sep + 3)));
    return {num, q};
}

std::size_t levels_for(std::size_t len) {
    std::size_t levels = 1;
    while ((std::size_t{1} << levels) < len) ++levels;
    return levels;
}

DiskLejaSequence make_source(bool rho_seeded, std::uint64_t rho_seed, std::size_t len) {
    if (!rho_seeded) return DiskLejaSequence::canonical();
    return DiskLejaSequence::with_rho(RhoChoice::random(rho_seed, levels_for(len) + 2));
}

std::vector<double> canonical_axis(std::size_t count) {
    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), count);
    return {x.values().begin(), x.values().end()};
}

void apply_threads(std::size_t threads) {
    if (threads == 0) {
        if (const char* env = std::getenv("LEJA_THREADS")) {
            threads = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
        }
    }
    set_max_threads(threads);
}

} // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"Leja sequences on the unit disk, their real projections, and "
                 "Lagrange interpolation diagnostics"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    std::size_t threads = 0;
    app.add_option("--threads", threads,
                   "Worker threads for grid scans (0 = auto, env LEJA_THREADS)");

    // gen-leja
    auto* gen_leja = app.add_subcommand("gen-leja", "Generate a disk Leja sequence");
    std::size_t gl_len = 16;
    std::uint64_t gl_rho_seed = 0;
    bool gl_rho_set = false;
    std::string gl_out;
    gen_leja->add_option("--len", gl_len, "Number of points")->required();
    gen_leja->add_option("--rho-seed", gl_rho_seed, "Random per-level rotations from this seed")
        ->each([&](const std::string&) { gl_rho_set = true; });
    gen_leja->add_option("--out", gl_out, "Output JSON path")->required();

    // gen-rleja
    auto* gen_rleja = app.add_subcommand("gen-rleja", "Generate a projected sequence");
    std::size_t gr_count = 9;
    std::string gr_mode = "dedup";
    std::uint64_t gr_rho_seed = 0;
    bool gr_rho_set = false;
    std::string gr_out;
    gen_rleja->add_option("--count", gr_count, "Number of points")->required();
    gen_rleja->add_option("--mode", gr_mode, "dedup or phi")
        ->check(CLI::IsMember({"dedup", "phi"}));
    gen_rleja->add_option("--rho-seed", gr_rho_seed, "Random per-level rotations")
        ->each([&](const std::string&) { gr_rho_set = true; });
    gen_rleja->add_option("--out", gr_out, "Output JSON path")->required();

    // gen-nodes
    auto* gen_nodes = app.add_subcommand("gen-nodes", "Generate a 1D node family");
    std::string gn_family, gn_beta, gn_out;
    std::size_t gn_degree = 0;
    gen_nodes->add_option("--family", gn_family, "lobatto or modcheb")
        ->required()
        ->check(CLI::IsMember({"lobatto", "modcheb"}));
    gen_nodes->add_option("--degree", gn_degree, "Polynomial degree")->required();
    gen_nodes->add_option("--beta", gn_beta, "Shift angle P/2^Q (modcheb only)");
    gen_nodes->add_option("--out", gn_out, "Output JSON path")->required();

    // gen-grid
    auto* gen_grid = app.add_subcommand("gen-grid", "Generate an intertwined grid");
    std::size_t gg_dim = 2, gg_degree = 8;
    std::string gg_out;
    gen_grid->add_option("--dim", gg_dim, "Dimension")->required();
    gen_grid->add_option("--degree", gg_degree, "Total degree")->required();
    gen_grid->add_option("--out", gg_out, "Output JSON path")->required();

    // lebesgue1d
    auto* leb1 = app.add_subcommand("lebesgue1d", "Lebesgue constants of 1D node sets");
    std::string l1_nodes_file, l1_family = "rleja", l1_beta, l1_out, l1_format = "csv";
    std::vector<std::size_t> l1_degrees, l1_counts;
    std::size_t l1_samples = 64;
    leb1->add_option("--nodes", l1_nodes_file, "JSON node file (overrides --family)");
    leb1->add_option("--family", l1_family, "rleja, lobatto or modcheb")
        ->check(CLI::IsMember({"rleja", "lobatto", "modcheb"}));
    leb1->add_option("--degree", l1_degrees, "Degrees (lobatto/modcheb), repeatable");
    leb1->add_option("--count", l1_counts, "Point counts (rleja), repeatable");
    leb1->add_option("--beta", l1_beta, "Shift angle P/2^Q for modcheb");
    leb1->add_option("--samples", l1_samples, "Samples per node gap");
    leb1->add_option("--format", l1_format)->check(CLI::IsMember({"csv", "json"}));
    leb1->add_option("--out", l1_out, "Output table path")->required();

    // lebesgue-nd
    auto* lebn = app.add_subcommand("lebesgue-nd", "Lebesgue constants of intertwined grids");
    std::size_t ln_dim = 2, ln_degree = 8, ln_samples = 64;
    std::string ln_out, ln_format = "csv";
    lebn->add_option("--dim", ln_dim, "Dimension")->required();
    lebn->add_option("--degree", ln_degree, "Total degree")->required();
    lebn->add_option("--samples", ln_samples, "Samples per axis");
    lebn->add_option("--format", ln_format)->check(CLI::IsMember({"csv", "json"}));
    lebn->add_option("--out", ln_out, "Output table path")->required();

    // check
    auto* check = app.add_subcommand("check", "Run a numeric claim check");
    std::string ck_claim, ck_out;
    std::uint64_t ck_seed = default_check_seed;
    std::size_t ck_trials = 1000000, ck_dmax = 256, ck_betas = 50, ck_maxk = 512;
    unsigned ck_nmax = 8;
    check->add_option("--claim", ck_claim)
        ->required()
        ->check(CLI::IsMember(
            {"sin-halving", "trig-lemma", "modcheb", "lower-bound", "master", "equilibrium"}));
    check->add_option("--seed", ck_seed, "Sweep seed");
    check->add_option("--trials", ck_trials, "Random trials (sin-halving, trig-lemma)");
    check->add_option("--d-max", ck_dmax, "Largest degree (modcheb)");
    check->add_option("--betas", ck_betas, "Shift angles per degree (modcheb)");
    check->add_option("--n-max", ck_nmax, "Largest dyadic exponent (lower-bound, equilibrium)");
    check->add_option("--max-k", ck_maxk, "Largest section length (master)");
    check->add_option("--out", ck_out, "Output JSON path")->required();

    // growth
    auto* growth = app.add_subcommand("growth", "Lebesgue growth experiment");
    tools::GrowthConfig g_cfg;
    std::string g_format = "csv";
    growth->add_option("--max-k", g_cfg.max_k, "Largest k")->required();
    growth->add_option("--dim", g_cfg.dim, "Dimension (1 = univariate sections)");
    growth->add_option("--samples", g_cfg.samples, "Samples per gap / per axis");
    growth->add_option("--seed", g_cfg.seed, "Recorded in metadata");
    growth->add_option("--format", g_format)->check(CLI::IsMember({"csv", "json"}));
    growth->add_option("--out", g_cfg.out_base, "Output base path (.csv/.svg appended)")
        ->required();

    // converge
    auto* converge = app.add_subcommand("converge", "Interpolation convergence demo");
    tools::ConvergeConfig c_cfg;
    std::string c_format = "csv";
    converge->add_option("--function", c_cfg.function, "runge, abs5, cinf or const")
        ->required();
    converge->add_option("--family", c_cfg.family, "rleja or equispaced");
    converge->add_option("--max-k", c_cfg.max_k, "Largest (dyadic) node count");
    converge->add_option("--grid", c_cfg.grid, "Sup-norm sample grid size");
    converge->add_option("--seed", c_cfg.seed, "Recorded in metadata");
    converge->add_option("--format", c_format)->check(CLI::IsMember({"csv", "json"}));
    converge->add_option("--out", c_cfg.out_path, "Output table path")->required();

    CLI11_PARSE(app, argc, argv);
    apply_threads(threads);

    try {
        if (*gen_leja) {
            DiskLejaSequence seq = make_source(gl_rho_set, gl_rho_seed, gl_len);
            seq.extend(gl_len);
            Meta meta{{"command", "gen-leja"},
                      {"len", std::to_string(gl_len)},
                      {"rule", gl_rho_set ? "custom-rho" : "canonical"},
                      {"version", version}};
            if (gl_rho_set) meta["rho_seed"] = std::to_string(gl_rho_seed);
            write_file(gl_out, disk_sequence_to_json(seq, gl_len, meta));
        } else if (*gen_rleja) {
            const DiskLejaSequence source = make_source(gr_rho_set, gr_rho_seed, 2 * gr_count + 2);
            const RLejaSequence x = gr_mode == "phi"
                                        ? RLejaSequence::build_by_phi(source, gr_count)
                                        : RLejaSequence::project_dedup(source, gr_count);
            Meta meta{{"command", "gen-rleja"},
                      {"count", std::to_string(gr_count)},
                      {"mode", gr_mode},
                      {"rule", gr_rho_set ? "custom-rho" : "canonical"},
                      {"version", version}};
            if (gr_rho_set) meta["rho_seed"] = std::to_string(gr_rho_seed);
            write_file(gr_out, rleja_to_json(x, meta));
        } else if (*gen_nodes) {
            Meta meta{{"command", "gen-nodes"},
                      {"degree", std::to_string(gn_degree)},
                      {"family", gn_family},
                      {"version", version}};
            if (gn_family == "lobatto") {
                const NodeSet1D nodes = chebyshev_lobatto(gn_degree);
                std::vector<DyadicAngle> angles;
                if (gn_degree != 0 && (gn_degree & (gn_degree - 1)) == 0) {
                    angles = lobatto_angles(gn_degree);
                }
                write_file(gn_out, nodes_to_json({nodes.nodes().begin(), nodes.nodes().end()},
                                                 angles, meta));
            } else {
                if (gn_beta.empty()) {
                    throw std::invalid_argument("gen-nodes: modcheb requires --beta P/2^Q");
                }
                const DyadicAngle beta = parse_beta(gn_beta);
                meta["beta"] = beta.str();
                const NodeSet1D nodes = modified_chebyshev(gn_degree, beta);
                std::vector<DyadicAngle> angles;
                if ((gn_degree & (gn_degree - 1)) == 0) {
                    angles = modified_chebyshev_angles(gn_degree, beta);
                }
                write_file(gn_out, nodes_to_json({nodes.nodes().begin(), nodes.nodes().end()},
                                                 angles, meta));
            }
        } else if (*gen_grid) {
            const std::vector<double> axis = canonical_axis(gg_degree + 1);
            const IntertwinedGrid grid(std::vector<std::vector<double>>(gg_dim, axis),
                                       static_cast<unsigned>(gg_degree));
            Meta meta{{"command", "gen-grid"},
                      {"degree", std::to_string(gg_degree)},
                      {"dim", std::to_string(gg_dim)},
                      {"points", std::to_string(grid.size())},
                      {"version", version}};
            write_file(gg_out, grid_to_json(grid, meta));
        } else if (*leb1) {
            ReportTable table;
            table.columns = {"n_nodes", "delta", "argmax", "refined"};
            const auto add_row = [&](const NodeSet1D& nodes) {
                const LebesgueEstimate est = lebesgue_constant(nodes, l1_samples);
                table.rows.push_back({static_cast<double>(nodes.size()), est.value, est.argmax,
                                      est.refined ? 1.0 : 0.0});
            };
            if (!l1_nodes_file.empty()) {
                std::ifstream in(l1_nodes_file, std::ios::binary);
                if (!in) throw std::runtime_error("cannot read " + l1_nodes_file);
                std::string text((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
                add_row(NodeSet1D(nodes_from_json(text)));
            } else if (l1_family == "lobatto") {
                if (l1_degrees.empty()) throw std::invalid_argument("lebesgue1d: no --degree");
                for (std::size_t d : l1_degrees) add_row(chebyshev_lobatto(d));
            } else if (l1_family == "modcheb") {
                if (l1_degrees.empty()) throw std::invalid_argument("lebesgue1d: no --degree");
                if (l1_beta.empty()) throw std::invalid_argument("lebesgue1d: modcheb needs --beta");
                for (std::size_t d : l1_degrees) {
                    add_row(modified_chebyshev(d, parse_beta(l1_beta)));
                }
            } else {
                if (l1_counts.empty()) throw std::invalid_argument("lebesgue1d: no --count");
                const std::size_t top = *std::max_element(l1_counts.begin(), l1_counts.end());
                const RLejaSequence x =
                    RLejaSequence::project_dedup(DiskLejaSequence::canonical(), top);
                for (std::size_t c : l1_counts) add_row(x.prefix_nodes(c));
            }
            Meta meta{{"command", "lebesgue1d"},
                      {"samples", std::to_string(l1_samples)},
                      {"version", version}};
            tools::emit_report(table, meta, tools::parse_format(l1_format), l1_out);
        } else if (*lebn) {
            const std::vector<double> axis = canonical_axis(ln_degree + 1);
            const IntertwinedGrid grid(std::vector<std::vector<double>>(ln_dim, axis),
                                       static_cast<unsigned>(ln_degree));
            const NdLebesgueEstimate est = lebesgue_constant_nd(grid, ln_samples);
            ReportTable table;
            table.columns = {"dim", "degree", "n_points", "delta", "certified_lower", "refined"};
            table.rows.push_back({static_cast<double>(ln_dim), static_cast<double>(ln_degree),
                                  static_cast<double>(grid.size()), est.value,
                                  est.certified_lower, est.refined ? 1.0 : 0.0});
            Meta meta{{"command", "lebesgue-nd"},
                      {"samples", std::to_string(ln_samples)},
                      {"version", version}};
            tools::emit_report(table, meta, tools::parse_format(ln_format), ln_out);
        } else if (*check) {
            BoundCheckReport report;
            if (ck_claim == "sin-halving") {
                report = check_sin_halving(ck_trials, ck_seed);
            } else if (ck_claim == "trig-lemma") {
                report = check_trig_lemma(ck_trials, 10000, ck_seed);
            } else if (ck_claim == "modcheb") {
                report = check_modcheb_lebesgue(ck_dmax, ck_betas, ck_seed);
            } else if (ck_claim == "lower-bound") {
                report = check_lower_bound(ck_nmax);
            } else if (ck_claim == "master") {
                report = check_master_bound(ck_maxk);
            } else {
                report = check_equilibrium_measure(std::max(ck_nmax, 3u));
            }
            write_file(ck_out, report_to_json(report, {{"command", "check"},
                                                       {"version", version}}));
            if (!report.pass) {
                std::cerr << "check " << report.claim << ": FAIL\n";
                return 1;
            }
            std::cout << "check " << report.claim << ": pass (worst ratio "
                      << format_double(report.worst_ratio) << ")\n";
        } else if (*growth) {
            g_cfg.format = tools::parse_format(g_format);
            const tools::GrowthResult r = tools::run_growth_experiment(g_cfg);
            std::cout << "growth: wrote " << r.files[0] << " and " << r.files[1]
                      << " (fitted slope " << format_double(r.slope) << ")\n";
        } else if (*converge) {
            c_cfg.format = tools::parse_format(c_format);
            const tools::ConvergeResult r = tools::run_convergence_demo(c_cfg);
            std::cout << "converge: wrote " << r.files[0] << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

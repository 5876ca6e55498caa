#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "experiments.hpp"

using namespace leja;
using namespace leja::tools;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempPath {
    std::string path;
    explicit TempPath(std::string p) : path(std::move(p)) {}
    ~TempPath() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("test function corpus") {
    CHECK(eval_test_function("runge", 0.0) == 1.0);
    CHECK(eval_test_function("abs5", -0.5) == doctest::Approx(0.03125));
    CHECK(eval_test_function("const", 0.3) == 1.0);
    CHECK_THROWS_AS(eval_test_function("nope", 0.0), std::invalid_argument);
}

TEST_CASE("report rendering") {
    ReportTable t;
    t.columns = {"a", "b"};
    CHECK(render_report(t, {}, OutputFormat::csv) == "a,b\n");
    t.rows.push_back({1.0, 2.5});
    CHECK(render_report(t, {}, OutputFormat::csv) == "a,b\n1,2.5\n");
    const std::string j = render_report(t, {{"command", "test"}}, OutputFormat::json);
    CHECK(j.find("\"rows\"") != std::string::npos);
    CHECK(j.find("\"command\": \"test\"") != std::string::npos);
}

TEST_CASE("growth experiment") {
    TempPath csv("growth_test.csv"), svg("growth_test.svg");
    GrowthConfig cfg;
    cfg.max_k = 24;
    cfg.out_base = "growth_test";
    const GrowthResult r = run_growth_experiment(cfg);
    CHECK(r.table.rows.size() == 24);
    CHECK(r.table.rows[0][1] == 1.0); // Delta of a single node
    CHECK(std::isfinite(r.slope));

    const std::string content = slurp(csv.path);
    CHECK(content.rfind("k,delta,delta_over_k3logk\n", 0) == 0);
    const std::string plot = slurp(svg.path);
    CHECK(plot.find("<svg") != std::string::npos);
    CHECK(plot.find("fitted slope") != std::string::npos);

    // Deterministic: the same configuration produces identical bytes.
    run_growth_experiment(cfg);
    CHECK(slurp(csv.path) == content);
    CHECK(slurp(svg.path) == plot);
}

TEST_CASE("growth experiment in two dimensions") {
    TempPath csv("growth_nd_test.csv"), svg("growth_nd_test.svg");
    GrowthConfig cfg;
    cfg.max_k = 4;
    cfg.dim = 2;
    cfg.samples = 32;
    cfg.out_base = "growth_nd_test";
    const GrowthResult r = run_growth_experiment(cfg);
    REQUIRE(r.table.rows.size() == 4);
    CHECK(r.table.rows[0][1] == doctest::Approx(3.0).epsilon(1e-6)); // Delta(P_1)
}

TEST_CASE("growth rejects an empty range without touching the filesystem") {
    GrowthConfig cfg;
    cfg.max_k = 0;
    cfg.out_base = "growth_should_not_exist";
    CHECK_THROWS_AS(run_growth_experiment(cfg), std::invalid_argument);
    std::ifstream in("growth_should_not_exist.csv");
    CHECK_FALSE(in.good());
}

TEST_CASE("convergence demo") {
    TempPath out("conv_test.csv");
    ConvergeConfig cfg;
    cfg.function = "const";
    cfg.max_k = 64;
    cfg.grid = 1000;
    cfg.out_path = out.path;
    const ConvergeResult r = run_convergence_demo(cfg);
    for (const auto& row : r.table.rows) {
        CHECK(row[1] == 0.0); // constants are reproduced exactly
    }

    ConvergeConfig abs5 = cfg;
    abs5.function = "abs5";
    const ConvergeResult ra = run_convergence_demo(abs5);
    CHECK(ra.table.rows.front()[1] > ra.table.rows.back()[1]);

    // The classical equispaced failure on the Runge function, contrasted
    // with the projected sequence.
    ConvergeConfig runge_eq = cfg;
    runge_eq.function = "runge";
    runge_eq.family = "equispaced";
    runge_eq.max_k = 64;
    const ConvergeResult re = run_convergence_demo(runge_eq);
    CHECK(re.table.rows.back()[1] > re.table.rows.front()[1]);
    CHECK(re.table.rows.back()[1] > 1.0);

    ConvergeConfig runge_x = runge_eq;
    runge_x.family = "rleja";
    const ConvergeResult rx = run_convergence_demo(runge_x);
    CHECK(rx.table.rows.back()[1] < re.table.rows.back()[1]);

    ConvergeConfig bad = cfg;
    bad.function = "unknown";
    CHECK_THROWS_AS(run_convergence_demo(bad), std::invalid_argument);
}

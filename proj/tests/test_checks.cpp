#include <doctest.h>

#include <cmath>

#include "leja/checks.hpp"
#include "leja/interp1d.hpp"
#include "leja/nodes1d.hpp"

using namespace leja;

TEST_CASE("sine halving inequality") {
    // Hand values first: |sin(pi/2)| = 1 >= |sin pi|/2 ~ 0,
    // |sin(pi/4)| = sqrt(2)/2 >= |sin(pi/2)|/2 = 1/2.
    CHECK(std::fabs(std::sin(M_PI / 2)) >= std::fabs(std::sin(M_PI)) / 2);
    CHECK(std::fabs(std::sin(M_PI / 4)) >= std::fabs(std::sin(M_PI / 2)) / 2);

    const BoundCheckReport report = check_sin_halving(100000);
    CHECK(report.pass);
    // The ratio may drift past 1 only by rounding noise near sine zeros;
    // the pass verdict uses the absolute slack.
    CHECK(report.worst_ratio <= 1.0 + 1e-3);
    CHECK(report.claim == "sin-halving");

    // Witness replay.
    REQUIRE(report.witness.size() == 2);
    const double alpha = report.witness[0].second;
    const int n = static_cast<int>(report.witness[1].second);
    CHECK(std::fabs(std::sin(alpha)) >=
          std::fabs(std::sin(std::ldexp(alpha, n))) / std::ldexp(1.0, n) - 1e-12);
}

TEST_CASE("product-of-sines inequality") {
    // r = 1, n_0 = 1, n_1 = 0, phi_0 = pi/2, phi = 0:
    // |sin(2^{-1}(0 - pi/2))| = sqrt(2)/2 >= (1/2)|cos 0| = 1/2.
    const double lhs = std::fabs(std::sin(-M_PI / 4));
    CHECK(lhs >= 0.5 - 1e-15);

    const BoundCheckReport report = check_trig_lemma(300, 2000);
    CHECK(report.pass);
    CHECK(std::isfinite(report.worst_ratio));
}

TEST_CASE("reports are deterministic under a fixed seed") {
    const BoundCheckReport a = check_sin_halving(5000, 99);
    const BoundCheckReport b = check_sin_halving(5000, 99);
    CHECK(a.worst_ratio == b.worst_ratio);
    CHECK(a.witness == b.witness);
    CHECK(a.seed == 99);
}

TEST_CASE("modified Chebyshev Lebesgue bound") {
    // Analytic anchor: T_2 with beta = 1/8 of a turn has nodes +-sqrt(2)/2
    // and Lebesgue constant sqrt(2), attained at the interval ends.
    const NodeSet1D t2 = modified_chebyshev(2, DyadicAngle(1, 3));
    CHECK(lebesgue_constant(t2, 64).value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    const BoundCheckReport report = check_modcheb_lebesgue(32, 10);
    CHECK(report.pass);
    CHECK(report.window_sups.size() == 5); // d = 2, 4, 8, 16, 32
    CHECK(std::isfinite(report.worst_ratio));
    CHECK(report.worst_ratio > 0.0);
}

TEST_CASE("lower bounds on sections and punctured Lobatto sets") {
    const BoundCheckReport report = check_lower_bound(5);
    CHECK(report.pass);
    CHECK(report.worst_ratio >= 1.0 - 1e-6);

    // The d = 4 case from first principles: remove a_1 from L_4.
    const NodeSet1D full = chebyshev_lobatto(4);
    std::vector<double> reduced;
    for (std::size_t i = 0; i <= 4; ++i) {
        if (i != 1) reduced.push_back(full.node(i));
    }
    CHECK(lebesgue_constant(NodeSet1D(reduced), 64).value >= 2.0 - 1e-6);
}

TEST_CASE("equilibrium measure") {
    const BoundCheckReport report = check_equilibrium_measure(8);
    CHECK(report.pass);
    // {x_0..x_d} is the full Lobatto set, whose KS distance to the arcsine
    // law is exactly 1/(d+1).
    REQUIRE(report.window_sups.size() == 7);
    for (unsigned n = 2; n <= 8; ++n) {
        const double d = static_cast<double>(std::size_t{1} << n);
        CHECK(report.window_sups[n - 2] == doctest::Approx(1.0 / (d + 1.0)).epsilon(1e-12));
    }
    CHECK(report.worst_ratio <= 1.0);

    // Arcsine CDF at 0 is 1/2.
    CHECK(0.5 + std::asin(0.0) / M_PI == 0.5);
}

TEST_CASE("master bound on a short range") {
    const BoundCheckReport report = check_master_bound(64);
    CHECK(report.pass);
    CHECK(std::isfinite(report.worst_ratio));
    double slope = 0.0, worst_tail = 0.0, worst_head = 0.0;
    for (const auto& [key, value] : report.stats) {
        if (key == "slope") slope = value;
        if (key == "tail_ratio_worst_over_bound") worst_tail = value;
        if (key == "head_ratio_worst_over_bound") worst_head = value;
    }
    CHECK(slope <= 3.0);
    CHECK(worst_tail <= 1.0 + 1e-6);
    CHECK(worst_tail > 0.0);
    CHECK(worst_head <= 1.0 + 1e-6);
    CHECK(worst_head > 0.0);
}

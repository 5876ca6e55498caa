#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "leja/dyadic_angle.hpp"

using leja::DyadicAngle;

namespace {

DyadicAngle random_angle(std::mt19937_64& rng) {
    const unsigned q = static_cast<unsigned>(rng() % 41);
    if (q == 0) return {};
    const std::uint64_t num = (rng() & ((std::uint64_t{1} << q) - 1)) | 1;
    return {num, q};
}

} // namespace

TEST_CASE("canonical form") {
    CHECK(DyadicAngle(0, 7) == DyadicAngle{});
    CHECK(DyadicAngle(4, 3) == DyadicAngle(1, 1));  // 4/8 = 1/2
    CHECK(DyadicAngle(6, 3) == DyadicAngle(3, 2));  // 6/8 = 3/4
    CHECK(DyadicAngle(8, 3) == DyadicAngle{});      // wraps to 0
    CHECK(DyadicAngle(11, 3) == DyadicAngle(3, 3)); // 11 mod 8 = 3
    CHECK_THROWS_AS(DyadicAngle(1, 64), std::overflow_error);
    CHECK_NOTHROW(DyadicAngle(1, 63));
}

TEST_CASE("addition") {
    CHECK(DyadicAngle(1, 2) + DyadicAngle(1, 2) == DyadicAngle(1, 1)); // 1/4+1/4
    CHECK(DyadicAngle{} + DyadicAngle(3, 3) == DyadicAngle(3, 3));
    CHECK(DyadicAngle(1, 1) + DyadicAngle(3, 2) == DyadicAngle(1, 2)); // wraps
}

TEST_CASE("negation") {
    CHECK(DyadicAngle{}.negated() == DyadicAngle{});
    CHECK(DyadicAngle(1, 2).negated() == DyadicAngle(3, 2));
    CHECK(DyadicAngle(3, 3).negated() == DyadicAngle(5, 3));
}

TEST_CASE("cos values") {
    CHECK(DyadicAngle{}.cos_value() == 1.0);
    CHECK(DyadicAngle(1, 2).cos_value() == 0.0);
    CHECK(DyadicAngle(1, 1).cos_value() == -1.0);
    CHECK(DyadicAngle(3, 2).cos_value() == 0.0);
    CHECK(DyadicAngle(1, 3).cos_value() == doctest::Approx(0.7071067811865476).epsilon(1e-16));
    CHECK(DyadicAngle(1, 3).cos_value() == 0.7071067811865476);
    CHECK(DyadicAngle{}.sin_value() == 0.0);
    CHECK(DyadicAngle(1, 2).sin_value() == 1.0);
}

TEST_CASE("real part key") {
    CHECK(DyadicAngle(3, 2).real_part_key() == DyadicAngle(1, 2));
    CHECK(DyadicAngle(1, 3).real_part_key() == DyadicAngle(1, 3));
    CHECK(DyadicAngle(1, 1).real_part_key() == DyadicAngle(1, 1));
}

TEST_CASE("algebraic properties on random angles") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        const DyadicAngle a = random_angle(rng);
        const DyadicAngle b = random_angle(rng);
        const DyadicAngle c = random_angle(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a.negated().negated() == a);
        CHECK(a.cos_value() == a.negated().cos_value());
        CHECK(a.real_part_key() == a.negated().real_part_key());
        CHECK(a + a.negated() == DyadicAngle{});
    }
}

TEST_CASE("cos agrees with libm on shallow angles") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 500; ++t) {
        const DyadicAngle a = random_angle(rng);
        if (a.log2_den() > 20) continue;
        const double reference = std::cos(2.0 * M_PI * a.turns());
        CHECK(a.cos_value() == doctest::Approx(reference).epsilon(1e-14));
    }
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "leja/rleja.hpp"

using namespace leja;

namespace {

/// Independent dedup oracle: linear scan deciding "same cosine" directly
/// from the angle symmetry a == b or a + b == 0 (mod 1), never through
/// real_part_key.
std::vector<DyadicAngle> oracle_dedup(const DiskLejaSequence& source, std::size_t count) {
    std::vector<DyadicAngle> out;
    for (std::size_t k = 0; out.size() < count; ++k) {
        const DyadicAngle a = source.angle(k);
        bool duplicate = false;
        for (const DyadicAngle& b : out) {
            if (a == b || a + b == DyadicAngle{}) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) out.push_back(a);
    }
    return out;
}

} // namespace

TEST_CASE("phi closed form") {
    const std::size_t expected[] = {0, 1, 2, 4, 5, 8, 9, 10, 11};
    for (std::size_t k = 0; k < 9; ++k) CHECK(phi(k) == expected[k]);
    CHECK(phi(4) == 5);   // power-of-two branch: 3*4/2 - 1
    CHECK(phi(5) == 8);   // generic branch: 4 + 5 - 1
    CHECK(phi(16) == 23);
    CHECK(phi(100) == 163);
}

TEST_CASE("projection with dedup: first values") {
    const RLejaSequence x3 =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), 3);
    CHECK(x3.value(0) == 1.0);
    CHECK(x3.value(1) == -1.0);
    CHECK(x3.value(2) == 0.0);

    const RLejaSequence x5 =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), 5);
    CHECK(x5.value(3) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-15));
    CHECK(x5.value(4) == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-15));

    // First 9 points: exact source angles e_{phi(k)} frozen from the
    // doubling rule, then the cosines.
    const RLejaSequence x9 =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), 9);
    const std::vector<DyadicAngle> expected{DyadicAngle{}, {1, 1}, {1, 2},  {1, 3}, {5, 3},
                                            {1, 4},        {9, 4}, {5, 4},  {13, 4}};
    for (std::size_t k = 0; k < 9; ++k) CHECK(x9.angle(k) == expected[k]);
    CHECK(x9.value(5) == doctest::Approx(std::cos(M_PI / 8)).epsilon(1e-15));
    CHECK(x9.value(6) == doctest::Approx(-std::cos(M_PI / 8)).epsilon(1e-15));
    CHECK(x9.value(7) == doctest::Approx(-std::sin(M_PI / 8)).epsilon(1e-15));
    CHECK(x9.value(8) == doctest::Approx(std::sin(M_PI / 8)).epsilon(1e-15));
}

TEST_CASE("projection agrees with the independent dedup oracle") {
    DiskLejaSequence source = DiskLejaSequence::canonical();
    source.extend(phi(1023) + 1);
    const std::vector<DyadicAngle> expected = oracle_dedup(source, 1024);
    const RLejaSequence x = RLejaSequence::project_dedup(source, 1024);
    for (std::size_t k = 0; k < 1024; ++k) CHECK(x.angle(k) == expected[k]);

    for (std::uint64_t seed = 50; seed < 53; ++seed) {
        DiskLejaSequence s = DiskLejaSequence::with_rho(RhoChoice::random(seed, 10));
        s.extend(phi(255) + 1);
        const std::vector<DyadicAngle> exp = oracle_dedup(s, 256);
        const RLejaSequence got = RLejaSequence::project_dedup(s, 256);
        for (std::size_t k = 0; k < 256; ++k) CHECK(got.angle(k) == exp[k]);
    }
}

TEST_CASE("the two construction paths agree exactly") {
    const std::size_t count = std::size_t{1} << 12;
    const RLejaSequence a =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), count);
    const RLejaSequence b =
        RLejaSequence::build_by_phi(DiskLejaSequence::canonical(), count);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < count; ++k) {
        REQUIRE(a.angle(k) == b.angle(k));
        REQUIRE(a.value(k) == b.value(k)); // bit-for-bit
    }

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const RhoChoice rho = RhoChoice::random(seed, 12);
        const RLejaSequence da =
            RLejaSequence::project_dedup(DiskLejaSequence::with_rho(rho), 1 << 10);
        const RLejaSequence db =
            RLejaSequence::build_by_phi(DiskLejaSequence::with_rho(rho), 1 << 10);
        for (std::size_t k = 0; k < da.size(); ++k) REQUIRE(da.angle(k) == db.angle(k));
    }
}

TEST_CASE("prefix sets are Chebyshev-Lobatto point sets") {
    const std::size_t top = (std::size_t{1} << 12) + 1;
    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), top);
    for (unsigned n = 0; n <= 12; ++n) {
        const std::size_t d = std::size_t{1} << n;
        std::unordered_set<DyadicAngle> got;
        for (std::size_t k = 0; k <= d; ++k) got.insert(x.angle(k).real_part_key());
        REQUIRE(got.size() == d + 1);
        for (const DyadicAngle& a : lobatto_angles(d)) {
            CHECK(got.contains(a.real_part_key()));
        }
    }
}

TEST_CASE("tail of a dyadic section projects the next disk block") {
    // X(2^n+1 : 2^(n+1)) = Re(E(2^(n+1) : 2^(n+1)+2^n-1)) as tuples.
    const std::size_t top = (std::size_t{1} << 12) + 1;
    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), top);
    const DiskLejaSequence& e = x.source();
    for (unsigned n = 1; n <= 11; ++n) {
        const std::size_t p = std::size_t{1} << n;
        for (std::size_t i = 0; i < p; ++i) {
            REQUIRE(x.angle(p + 1 + i).real_part_key() ==
                    e.angle(2 * p + i).real_part_key());
        }
    }
}

TEST_CASE("which projections are new: the proof pattern") {
    // For 2^j <= s < 2^j + 2^(j-1) the projection of e_s is a new value;
    // for 2^j + 2^(j-1) <= s < 2^(j+1) it has been seen before.
    DiskLejaSequence e = DiskLejaSequence::canonical();
    e.extend(std::size_t{1} << 13);
    std::unordered_set<DyadicAngle> seen;
    seen.insert(e.angle(0).real_part_key());
    seen.insert(e.angle(1).real_part_key());
    for (unsigned j = 1; j <= 12; ++j) {
        const std::size_t p = std::size_t{1} << j;
        for (std::size_t s = p; s < 2 * p; ++s) {
            const bool fresh = seen.insert(e.angle(s).real_part_key()).second;
            if (s < p + p / 2) {
                REQUIRE(fresh);
            } else {
                REQUIRE_FALSE(fresh);
            }
        }
    }
}

TEST_CASE("block decomposition") {
    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), 1 << 10);

    SUBCASE("k = 6: one block of degree 1") {
        const BlockDecomposition dec = block_decompose(x, 6);
        CHECK(dec.exponents == std::vector<unsigned>{3, 0});
        REQUIRE(dec.blocks.size() == 1);
        CHECK(dec.blocks[0].degree == 1);
        CHECK(dec.blocks[0].angles == std::vector<DyadicAngle>{x.angle(5)});
        CHECK(dec.blocks[0].shift == x.source().angle(8));
    }

    SUBCASE("k = 8: blocks of degrees 2 and 1") {
        const BlockDecomposition dec = block_decompose(x, 8);
        CHECK(dec.exponents == std::vector<unsigned>{3, 1, 0});
        REQUIRE(dec.blocks.size() == 2);
        CHECK(dec.blocks[0].degree == 2);
        CHECK(dec.blocks[1].degree == 1);
        CHECK(dec.blocks[0].shift == DyadicAngle(1, 4));
        CHECK(dec.blocks[1].shift == DyadicAngle(5, 4));
    }

    SUBCASE("degenerate k = 2^n+1 has no blocks") {
        for (unsigned n = 1; n <= 8; ++n) {
            CHECK(block_decompose(x, (std::size_t{1} << n) + 1).blocks.empty());
        }
    }

    SUBCASE("k = 2^(n+1): union of blocks equals the projected block set") {
        for (unsigned n = 2; n <= 8; ++n) {
            const std::size_t p = std::size_t{1} << n;
            const BlockDecomposition dec = block_decompose(x, 2 * p);
            std::unordered_set<DyadicAngle> got;
            std::size_t total = 0;
            for (const auto& block : dec.blocks) {
                for (const DyadicAngle& a : block.angles) {
                    got.insert(a.real_part_key());
                    ++total;
                }
            }
            REQUIRE(total == p - 1);
            // Independent oracle: the projections of the next disk block.
            for (std::size_t i = 0; i + 1 < p; ++i) {
                CHECK(got.contains(x.source().angle(2 * p + i).real_part_key()));
            }
        }
    }

    SUBCASE("self-checks run for every admissible k") {
        for (unsigned n = 1; n <= 8; ++n) {
            for (std::size_t k = (std::size_t{1} << n) + 1; k <= (std::size_t{1} << (n + 1)); ++k) {
                CHECK_NOTHROW(block_decompose(x, k));
            }
        }
    }

    SUBCASE("out of range") {
        CHECK_THROWS_AS(block_decompose(x, 2), std::invalid_argument);
        CHECK_THROWS_AS(block_decompose(x, (std::size_t{1} << 10) + 1), std::invalid_argument);
    }
}

TEST_CASE("node families") {
    const NodeSet1D l2 = chebyshev_lobatto(2);
    CHECK(l2.nodes()[0] == 1.0);
    CHECK(l2.nodes()[1] == 0.0);
    CHECK(l2.nodes()[2] == -1.0);
    const NodeSet1D l1 = chebyshev_lobatto(1);
    CHECK(l1.nodes()[0] == 1.0);
    CHECK(l1.nodes()[1] == -1.0);
    const NodeSet1D l4 = chebyshev_lobatto(4);
    CHECK(l4.nodes()[1] == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-15));
    CHECK(l4.nodes()[3] == -l4.nodes()[1]); // exact symmetry
    CHECK_THROWS_AS(chebyshev_lobatto(0), std::invalid_argument);

    // Non-dyadic degrees still carry the mirror symmetry exactly.
    const NodeSet1D l5 = chebyshev_lobatto(5);
    for (std::size_t j = 0; j <= 5; ++j) CHECK(l5.node(j) == -l5.node(5 - j));

    const NodeSet1D t1 = modified_chebyshev(1, DyadicAngle(1, 2));
    CHECK(t1.nodes()[0] == 0.0); // cos(pi/2)

    const NodeSet1D t4 = modified_chebyshev(4, DyadicAngle(1, 4));
    CHECK(t4.nodes()[0] == doctest::Approx(std::cos(M_PI / 8)).epsilon(1e-15));
    CHECK(t4.nodes()[1] == doctest::Approx(std::cos(5 * M_PI / 8)).epsilon(1e-15));
    CHECK(t4.nodes()[2] == doctest::Approx(std::cos(9 * M_PI / 8)).epsilon(1e-15));
    CHECK(t4.nodes()[3] == doctest::Approx(std::cos(13 * M_PI / 8)).epsilon(1e-15));

    // Shifts that land on an extremal point leave fewer than d roots and
    // are rejected, decided exactly on the dyadic angle.
    CHECK(is_chebyshev_extremal(2, DyadicAngle(1, 2)));
    CHECK_FALSE(is_chebyshev_extremal(2, DyadicAngle(1, 3)));
    CHECK(is_chebyshev_extremal(4, DyadicAngle{}));
    CHECK(is_chebyshev_extremal(6, DyadicAngle(1, 2))); // cos(pi) = -1 is a T_6 extremum
    CHECK_THROWS_AS(modified_chebyshev(2, DyadicAngle(1, 2)), std::domain_error);
    CHECK_THROWS_AS(modified_chebyshev(4, DyadicAngle(3, 3)), std::domain_error);
}

TEST_CASE("dedup edge counts") {
    const RLejaSequence x0 =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), 0);
    CHECK(x0.size() == 0);
    const RLejaSequence x1 =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), 1);
    REQUIRE(x1.size() == 1);
    CHECK(x1.value(0) == 1.0);
}

TEST_CASE("prefix node set") {
    const RLejaSequence x =
        RLejaSequence::project_dedup(DiskLejaSequence::canonical(), 16);
    const NodeSet1D nodes = x.prefix_nodes(5);
    CHECK(nodes.size() == 5);
    CHECK(nodes.node(0) == 1.0);
    CHECK(nodes.node(1) == -1.0);
    CHECK_THROWS_AS(x.prefix_nodes(17), std::invalid_argument);
}

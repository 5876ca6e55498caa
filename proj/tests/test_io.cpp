#include <doctest.h>

#include "leja/io.hpp"

using namespace leja;

TEST_CASE("angle JSON round trip") {
    const DyadicAngle a(13, 6);
    CHECK(angle_from_json(angle_to_json(a)) == a);
    CHECK(angle_to_json(DyadicAngle{}) == R"({"log2den":0,"num":0})");
}

TEST_CASE("doubles are printed with round-trip fidelity") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.7071067811865476) == "-0.70710678118654757");
}

TEST_CASE("CSV tables") {
    ReportTable t;
    t.columns = {"k", "delta"};
    CHECK(table_to_csv(t) == "k,delta\n");
    t.rows.push_back({2.0, 1.25});
    CHECK(table_to_csv(t) == "k,delta\n2,1.25\n");
    t.rows.push_back({3.0});
    CHECK_THROWS_AS(table_to_csv(t), std::invalid_argument);
}

TEST_CASE("sequence documents") {
    DiskLejaSequence e = DiskLejaSequence::canonical();
    e.extend(4);
    const std::string doc = disk_sequence_to_json(e, 4, {{"rule", "canonical"}});
    CHECK(doc.find("\"angles\"") != std::string::npos);
    CHECK(doc.find("\"log2den\"") != std::string::npos);

    const RLejaSequence x = RLejaSequence::project_dedup(e, 4);
    const std::string xdoc = rleja_to_json(x, {});
    const std::vector<double> values = nodes_from_json(xdoc);
    REQUIRE(values.size() == 4);
    CHECK(values[0] == 1.0);
    CHECK(values[1] == -1.0);
}

#include <gtest/gtest.h>

#include "support.hpp"

#include "cpint/io.hpp"

using namespace cpint;
using nlohmann::json;

TEST(IO, RoundTripsEveryKind) {
    harness::Rng rng(21);
    const auto f = harness::random_distribution(rng);
    const auto back = io::distribution_from(io::parse_function(io::to_json(f)));
    EXPECT_TRUE(back.primitive() == f.primitive());

    const BVFunction g(PiecewisePolynomial({0.0, 1.0}, {Polynomial({2.0, 1.0})}, 0.0, 1.0), {{0.0, 5.0}});
    const auto gj = io::to_json(g);
    EXPECT_EQ(gj.at("kind"), "bv");
    const auto gb = io::bv_from(io::parse_function(gj));
    EXPECT_EQ(gb.rep(), g.rep());
    EXPECT_EQ(gb.point_values(), g.point_values());

    const auto l = io::l1_from(io::parse_function(io::to_json(harness::unit_box())));
    EXPECT_EQ(l.rep(), harness::unit_box().rep());

    const auto phi = harness::random_test_function(rng);
    EXPECT_EQ(io::test_from(io::parse_function(io::to_json(phi))).rep(), phi.rep());
}

TEST(IO, FileRoundTrip) {
    const auto path = testing::TempDir() + "cpint_io_roundtrip.json";
    io::write_json(path, io::to_json(harness::tent_distribution()));
    EXPECT_TRUE(io::distribution_from(io::load(path)).primitive() == harness::tent_distribution().primitive());
    EXPECT_THROW(io::load(testing::TempDir() + "does/not/exist.json"), InputError);
}

TEST(IO, PointValuesOnlyForBV) {
    json j = io::to_json(harness::tent_distribution());
    j["point_values"] = json::array({json::array({0.0, 1.0})});
    EXPECT_THROW(io::parse_function(j), InputError);
}

TEST(IO, KindMismatchIsAnInputError) {
    const auto file = io::parse_function(io::to_json(harness::unit_box()));
    EXPECT_THROW(io::distribution_from(file), InputError);
    EXPECT_NO_THROW(io::bv_from(file)); // an integrable function is also accepted as bounded variation
}

TEST(IO, MalformedInput) {
    EXPECT_THROW(io::parse_function(json::object()), InputError);
    EXPECT_THROW(io::parse_function(json{{"kind", "wave"}, {"breakpoints", {0.0}}, {"pieces", json::array()}}),
                 InputError);
    EXPECT_THROW(io::parse_function(json{{"kind", "bv"}, {"breakpoints", "zero"}, {"pieces", json::array()}}),
                 InputError);
    EXPECT_THROW(io::parse_function(json{{"kind", "bv"}, {"breakpoints", {1.0, 0.0}}, {"pieces", {{1.0}}}}),
                 InputError);
    EXPECT_THROW(io::parse_function(json{{"kind", "bv"}, {"breakpoints", {0.0, 1.0}}, {"pieces", json::array()}}),
                 InputError);
    EXPECT_THROW(io::parse_function(json{{"kind", "bv"},
                                         {"breakpoints", {0.0, 1.0}},
                                         {"pieces", {{1.0}}},
                                         {"point_values", {{0.0}}}}),
                 InputError);
    // A discontinuous primitive is rejected.
    EXPECT_THROW(io::distribution_from(io::parse_function(
                     json{{"kind", "primitive"}, {"breakpoints", {0.0, 1.0}}, {"pieces", {{1.0}}}})),
                 InputError);
}

#include "slicecliff/json.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace slicecliff;

TEST(Json, MultivectorLayout)
{
    nlohmann::json j = to_json(parse_multivector("3/2 - e13 + 4 e2"));
    EXPECT_EQ(j.dump(), R"({"":"3/2","13":"-1","2":"4"})");
    EXPECT_EQ(to_json(parse_multivector("e{1,13}", 13)).dump(), R"({"1,13":"1"})");
    EXPECT_EQ(to_json(Multivector()).dump(), "{}");
}

TEST(Json, MultivectorRejectsBadInput)
{
    EXPECT_THROW(multivector_from_json(nlohmann::json::array()), ParseError);
    EXPECT_THROW(multivector_from_json(nlohmann::json{{"1", 3}}), ParseError);
    EXPECT_THROW(multivector_from_json(nlohmann::json{{"21", "3"}}), ParseError);
    EXPECT_THROW(multivector_from_json(nlohmann::json{{"1", "1/0"}}), ParseError);
}

TEST(Json, BiPolyLayout)
{
    BiPoly f = frak_F(SlicePoly::monomial(AlgebraSignature(5), 5), 1, DiracConvention::Unital);
    EXPECT_EQ(to_json(f).dump(),
              R"({"terms":[{"a":2,"b":0,"coef":{"":"160"}},{"a":0,"b":2,"coef":{"":"-32"}}]})");
    EXPECT_THROW(bipoly_from_json(nlohmann::json::object()), ParseError);
    EXPECT_THROW(bipoly_from_json(nlohmann::json::parse(R"({"terms":[{"a":1}]})")), ParseError);
}

TEST(Json, KernelReportLayout)
{
    KernelReport r = verify_main_theorem(5, 1, 4, 2, 42);
    nlohmann::json j = to_json(r);
    EXPECT_EQ(j["m"], 5);
    EXPECT_EQ(j["trials"], 2);
    EXPECT_TRUE(j["failures"].is_array());
    EXPECT_TRUE(j["failures"].empty());
    EXPECT_TRUE(j["elapsed_ms"].is_number());
}

TEST(JsonProperties, RoundTrips)
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        Multivector x = support::random_multivector(5, rng);
        ASSERT_EQ(multivector_from_json(nlohmann::json::parse(to_json(x).dump())), x);

        SlicePoly p = support::random_poly(AlgebraSignature(7), 6, rng, 0.2, 2);
        BiPoly f = frak_F(p, trial % 3, DiracConvention::Half);
        ASSERT_EQ(bipoly_from_json(nlohmann::json::parse(to_json(f).dump())), f);
    }
}

#include "slicecliff/mpoly.hpp"
#include "slicecliff/slice.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace slicecliff;

namespace {

BiPoly bipoly(std::initializer_list<std::tuple<int, int, long>> terms, Parity parity = Parity::None)
{
    BiPoly f(parity);
    for (auto [a, b, c] : terms)
        f.add_term(a, b, Multivector(c));
    return f;
}

}  // namespace

TEST(SlicePolyText, ParsesBothCoefficientSides)
{
    AlgebraSignature sig(5);
    SlicePoly p = parse_slice_poly("x^5 + (1/2 + 2 e1) x^2 - 3", sig);
    EXPECT_EQ(p.degree(), 5);
    EXPECT_EQ(p.coefficient(2), parse_multivector("1/2 + 2 e1"));
    EXPECT_EQ(p.coefficient(0), Multivector(-3));
    EXPECT_EQ(to_string(p), "x^5 + x^2 (1/2 + 2 e1) - 3");
    EXPECT_EQ(parse_slice_poly(to_string(p), sig), p);
    EXPECT_EQ(parse_slice_poly("x^2 (1/2 + 2 e1)", sig), parse_slice_poly("(1/2 + 2 e1) x^2", sig));
    EXPECT_EQ(parse_slice_poly("x^2 + e1 x + 3", sig).coefficient(1), Multivector::generator(1));
    EXPECT_EQ(parse_slice_poly("x x", sig), SlicePoly::monomial(sig, 2));
    EXPECT_TRUE(parse_slice_poly("x - x", sig).is_zero());
    EXPECT_EQ(to_string(parse_slice_poly("x - x", sig)), "0");
}

TEST(SlicePolyText, RejectsBadInput)
{
    AlgebraSignature sig(3);
    EXPECT_THROW(parse_slice_poly("x^", sig), ParseError);
    EXPECT_THROW(parse_slice_poly("x^2 e4", sig), ParseError);
    EXPECT_THROW(parse_slice_poly("(x + 1)", sig), ParseError);
    EXPECT_THROW(parse_slice_poly("y", sig), ParseError);
}

TEST(SlicePoly, TrimsTrailingZeros)
{
    AlgebraSignature sig(3);
    SlicePoly p(sig, {Multivector(1), Multivector(), Multivector()});
    EXPECT_EQ(p.degree(), 0);
    EXPECT_THROW(SlicePoly(sig, {Multivector::generator(4)}), std::invalid_argument);
}

TEST(StemComponents, Examples)
{
    AlgebraSignature sig(5);
    StemPair sq = stem_components(SlicePoly::monomial(sig, 2));
    EXPECT_EQ(sq.f0, bipoly({{2, 0, 1}, {0, 2, -1}}));
    EXPECT_EQ(sq.f1, bipoly({{1, 1, 2}}));

    StemPair fifth = stem_components(SlicePoly::monomial(sig, 5));
    EXPECT_EQ(fifth.f0, bipoly({{5, 0, 1}, {3, 2, -10}, {1, 4, 5}}));
    EXPECT_EQ(fifth.f1, bipoly({{4, 1, 5}, {2, 3, -10}, {0, 5, 1}}));
    EXPECT_EQ(to_string(fifth.f0), "a^5 - 10 a^3 b^2 + 5 a b^4");

    Multivector a0 = parse_multivector("2 - e13");
    StemPair c = stem_components(SlicePoly(sig, {a0}));
    EXPECT_EQ(c.f0.coefficient(0, 0), a0);
    EXPECT_EQ(c.f0.terms().size(), 1U);
    EXPECT_TRUE(c.f1.is_zero());
}

TEST(StemComponents, RightCoefficientsMultiplyOnTheRight)
{
    AlgebraSignature sig(3);
    Multivector a = parse_multivector("e2 + e12");
    StemPair s = stem_components(SlicePoly::monomial(sig, 1, a));
    EXPECT_EQ(s.f0.coefficient(1, 0), a);
    EXPECT_EQ(s.f1.coefficient(0, 1), a);
}

TEST(SphericalDerivative, Examples)
{
    AlgebraSignature sig(5);
    EXPECT_EQ(spherical_derivative(stem_components(SlicePoly::monomial(sig, 5))),
              bipoly({{4, 0, 5}, {2, 2, -10}, {0, 4, 1}}));
    EXPECT_EQ(spherical_derivative(stem_components(SlicePoly::monomial(sig, 1))), bipoly({{0, 0, 1}}));
    EXPECT_TRUE(spherical_derivative(stem_components(SlicePoly(sig, {Multivector(4)}))).is_zero());
}

TEST(SphericalDerivative, RejectsCorruptedStem)
{
    StemPair s;
    BiPoly bad(Parity::None);
    bad.add_term(1, 0, Multivector(1));
    s.f1 = bad;
    EXPECT_THROW(spherical_derivative(s), std::domain_error);
}

TEST(BiPoly, ParityIsEnforced)
{
    BiPoly even(Parity::Even);
    EXPECT_THROW(even.add_term(0, 1, Multivector(1)), std::logic_error);
    BiPoly odd(Parity::Odd);
    EXPECT_THROW(odd.add_term(3, 2, Multivector(1)), std::logic_error);
    EXPECT_EQ(partial_beta(bipoly({{0, 2, 1}}, Parity::Even)).parity(), Parity::Odd);
}

TEST(GRepresentation, Examples)
{
    BiPoly fs = bipoly({{4, 0, 5}, {2, 2, -10}, {0, 4, 1}}, Parity::Even);
    GPoly g = g_representation(fs);
    EXPECT_EQ(to_string(g), "5 a^4 - 10 a^2 g + g^2");
    EXPECT_TRUE(g_representation(BiPoly(Parity::Even)).is_zero());
    EXPECT_EQ(to_string(g_representation(bipoly({{0, 6, 1}}))), "g^3");
    EXPECT_THROW(g_representation(bipoly({{0, 3, 1}})), std::domain_error);
}

TEST(SliceEval, Examples)
{
    AlgebraSignature sig(5);
    StemPair fifth = stem_components(SlicePoly::monomial(sig, 5));
    EXPECT_EQ(slice_eval(fifth, 1, 1, Multivector::generator(1)), parse_multivector("-4 - 4 e1"));
    EXPECT_EQ(slice_eval(fifth, 2, 0, Multivector::generator(3)), Multivector(32));

    StemPair lin = stem_components(SlicePoly::monomial(sig, 1));
    Multivector J = parse_multivector("3/5 e2 + 4/5 e3");
    EXPECT_EQ(slice_eval(lin, Rational(1, 2), 3, J), Multivector(Rational(1, 2)) + J * Rational(3));
}

TEST(SliceEval, RejectsBadArguments)
{
    AlgebraSignature sig(3);
    StemPair s = stem_components(SlicePoly::monomial(sig, 2));
    EXPECT_THROW(slice_eval(s, 1, 1, parse_multivector("e1 + e2")), std::invalid_argument);
    EXPECT_THROW(slice_eval(s, 1, -1, Multivector::generator(1)), std::invalid_argument);
}

// Properties.

TEST(SliceProperties, StemEvaluationAgreesWithExpansion)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        AlgebraSignature sig(trial % 2 == 0 ? 3 : 5);
        SlicePoly p = support::random_poly(sig, 6, rng);
        Rational x0 = support::small_rational(rng);
        Rational x1 = support::positive_rational(rng);
        ASSERT_EQ(slice_eval(stem_components(p), x0, x1, Multivector::generator(1)),
                  mp_eval(expand_slice_poly(p), support::axis_point(sig.m(), x0, x1)))
            << to_string(p);
    }
}

TEST(SliceProperties, StemParityAndSphericalDerivative)
{
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        SlicePoly p = support::random_poly(AlgebraSignature(5), 8, rng);
        StemPair s = stem_components(p);
        ASSERT_EQ(detect_parity(s.f0), Parity::Even);
        ASSERT_NE(detect_parity(s.f1), Parity::None);
        if (!s.f1.is_zero()) {
            ASSERT_EQ(detect_parity(s.f1), Parity::Odd);
        }
        BiPoly fs = spherical_derivative(s);
        BiPoly times_beta(Parity::None);
        for (const auto& [key, c] : fs.terms())
            times_beta.add_term(key.first, key.second + 1, c);
        ASSERT_EQ(times_beta, s.f1);
        ASSERT_EQ(substitute_beta_squared(g_representation(fs)), fs);
    }
}

TEST(SliceProperties, CircularStemIsIndependentOfJ)
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        SlicePoly p = support::random_poly(AlgebraSignature(5), 6, rng);
        StemPair circular;
        circular.f0 = spherical_derivative(stem_components(p));
        Rational a = support::small_rational(rng);
        Rational b = support::positive_rational(rng);
        ASSERT_EQ(slice_eval(circular, a, b, Multivector::generator(1)),
                  slice_eval(circular, a, b, Multivector::generator(2)));
    }
}

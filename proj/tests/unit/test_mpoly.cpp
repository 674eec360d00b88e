#include "slicecliff/mpoly.hpp"
#include "slicecliff/slice.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace slicecliff;

namespace {

Exponents ex(std::initializer_list<int> e) { return Exponents(e); }

MultiPoly xi(AlgebraSignature sig, int i, const Multivector& c = Multivector(1))
{
    return MultiPoly::variable(sig, i, c);
}

}  // namespace

TEST(MpProduct, Examples)
{
    AlgebraSignature sig(3);
    MultiPoly prod = mp_product(xi(sig, 0), xi(sig, 1, Multivector::generator(1)));
    EXPECT_EQ(prod.terms().size(), 1U);
    EXPECT_EQ(prod.coefficient(ex({1, 1, 0, 0})), Multivector::generator(1));

    MultiPoly sq = mp_product(xi(sig, 1, Multivector::generator(1)), xi(sig, 1, Multivector::generator(1)));
    EXPECT_EQ(sq.terms().size(), 1U);
    EXPECT_EQ(sq.coefficient(ex({0, 2, 0, 0})), Multivector(-1));

    MultiPoly f = xi(sig, 2, parse_multivector("1 + e3")) + xi(sig, 0);
    EXPECT_EQ(mp_product(f, MultiPoly::constant(sig, Multivector(1))), f);
}

TEST(MpProduct, SignatureMismatchThrows)
{
    EXPECT_THROW(mp_product(xi(AlgebraSignature(3), 0), xi(AlgebraSignature(5), 0)), std::invalid_argument);
}

TEST(ExpandSlicePoly, Linear)
{
    AlgebraSignature sig(3);
    MultiPoly x = expand_slice_poly(SlicePoly::monomial(sig, 1));
    EXPECT_EQ(x, MultiPoly::paravector(sig));
    EXPECT_EQ(to_string(x), "x0 + x1 (e1) + x2 (e2) + x3 (e3)");
}

TEST(ExpandSlicePoly, Square)
{
    for (int m : {3, 5}) {
        AlgebraSignature sig(m);
        MultiPoly expected = mp_product(xi(sig, 0), xi(sig, 0));
        for (int j = 1; j <= m; ++j) {
            expected -= mp_product(xi(sig, j), xi(sig, j));
            Exponents e(static_cast<std::size_t>(m) + 1, 0);
            e[0] = 1;
            e[static_cast<std::size_t>(j)] = 1;
            expected.add_term(e, Multivector::generator(j) * Rational(2));
        }
        EXPECT_EQ(expand_slice_poly(SlicePoly::monomial(sig, 2)), expected) << "m=" << m;
    }
}

TEST(ExpandSlicePoly, FifthPowerAlongOneAxisMatchesBinomialExpansion)
{
    // f(alpha + J beta) = alpha^5 - 10 alpha^3 beta^2 + 5 alpha beta^4
    //                     + J beta (5 alpha^4 - 10 alpha^2 beta^2 + beta^4)
    AlgebraSignature sig(5);
    MultiPoly f = expand_slice_poly(SlicePoly::monomial(sig, 5));
    for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 3}, std::pair{-1, 2}}) {
        Rational alpha(a);
        Rational beta(b);
        Multivector expected(alpha * alpha * alpha * alpha * alpha - 10 * alpha * alpha * alpha * beta * beta +
                             5 * alpha * beta * beta * beta * beta);
        expected += Multivector::generator(1) *
                    Rational(beta * (5 * alpha * alpha * alpha * alpha - 10 * alpha * alpha * beta * beta +
                                     beta * beta * beta * beta));
        EXPECT_EQ(mp_eval(f, support::axis_point(5, alpha, beta)), expected);
    }
    EXPECT_EQ(mp_eval(f, support::axis_point(5, 1, 1)), parse_multivector("-4 - 4 e1"));
}

TEST(MpPartial, Examples)
{
    AlgebraSignature sig(3);
    MultiPoly f(sig);
    f.add_term(ex({2, 1, 0, 0}), Multivector(1));
    MultiPoly d0(sig);
    d0.add_term(ex({1, 1, 0, 0}), Multivector(2));
    MultiPoly d1(sig);
    d1.add_term(ex({2, 0, 0, 0}), Multivector(1));
    EXPECT_EQ(mp_partial(f, 0), d0);
    EXPECT_EQ(mp_partial(f, 1), d1);
    EXPECT_TRUE(mp_partial(MultiPoly::constant(sig, parse_multivector("2 + e1")), 2).is_zero());
    EXPECT_THROW(mp_partial(f, 4), std::out_of_range);
    EXPECT_THROW(mp_partial(f, -1), std::out_of_range);
}

TEST(DiracApply, Paravector)
{
    for (int m : {3, 5, 7}) {
        AlgebraSignature sig(m);
        MultiPoly x = MultiPoly::paravector(sig);
        EXPECT_EQ(dirac_apply(x, DiracConvention::Half), MultiPoly::constant(sig, Multivector(Rational(1 - m, 2))));
        EXPECT_EQ(dirac_apply(x, DiracConvention::Unital), MultiPoly::constant(sig, Multivector(1 - m)));
    }
    AlgebraSignature sig(3);
    EXPECT_TRUE(dirac_apply(MultiPoly::constant(sig, parse_multivector("e12")), DiracConvention::Half).is_zero());
}

TEST(DiracApply, GeneratorActsFromTheLeft)
{
    AlgebraSignature sig(3);
    // dbar (x1 e2) = e1 e2 with the unital scaling.
    MultiPoly f = xi(sig, 1, Multivector::generator(2));
    EXPECT_EQ(dirac_apply(f, DiracConvention::Unital), MultiPoly::constant(sig, parse_multivector("e12")));
}

TEST(LaplacianApply, Examples)
{
    AlgebraSignature sig(3);
    MultiPoly harmonic = mp_product(xi(sig, 0), xi(sig, 0)) - mp_product(xi(sig, 1), xi(sig, 1));
    EXPECT_TRUE(laplacian_apply(harmonic, 1).is_zero());
    for (int m : {3, 5}) {
        AlgebraSignature s(m);
        MultiPoly sq = expand_slice_poly(SlicePoly::monomial(s, 2));
        EXPECT_EQ(laplacian_apply(sq, 1), MultiPoly::constant(s, Multivector(2 * (1 - m))));
        EXPECT_EQ(laplacian_apply(sq, 0), sq);
    }
    EXPECT_THROW(laplacian_apply(harmonic, -1), std::invalid_argument);
}

TEST(MpEval, Examples)
{
    AlgebraSignature sig(3);
    MultiPoly f = xi(sig, 0) + xi(sig, 1, Multivector::generator(1));
    std::vector<Rational> p{2, 3, 0, 0};
    EXPECT_EQ(mp_eval(f, p), parse_multivector("2 + 3 e1"));
    EXPECT_TRUE(mp_eval(MultiPoly(sig), p).is_zero());
    std::vector<Rational> short_point{1, 2};
    EXPECT_THROW(mp_eval(f, short_point), std::invalid_argument);
}

TEST(MultiPolyText, GradedOrder)
{
    AlgebraSignature sig(3);
    MultiPoly f = expand_slice_poly(SlicePoly::monomial(sig, 2));
    EXPECT_EQ(to_string(f), "x0^2 + x0 x1 (2 e1) + x0 x2 (2 e2) + x0 x3 (2 e3) - x1^2 - x2^2 - x3^2");
}

// Properties.

TEST(MpolyProperties, DiracCommutesWithLaplacian)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        AlgebraSignature sig(3);
        MultiPoly f = expand_slice_poly(support::random_poly(sig, 5, rng));
        // Add a non-slice term so the check is not confined to slice functions.
        f += mp_product(xi(sig, 2, support::random_multivector(3, rng)), xi(sig, 3));
        for (int k = 0; k <= 2; ++k) {
            ASSERT_EQ(dirac_apply(laplacian_apply(f, k), DiracConvention::Half),
                      laplacian_apply(dirac_apply(f, DiracConvention::Half), k));
        }
    }
}

TEST(MpolyProperties, PowersOfXTakeParavectorValues)
{
    std::mt19937_64 rng(22);
    for (int n = 0; n <= 6; ++n) {
        AlgebraSignature sig(5);
        MultiPoly f = expand_slice_poly(SlicePoly::monomial(sig, n));
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<Rational> p;
            for (int i = 0; i <= 5; ++i)
                p.push_back(support::small_rational(rng));
            ASSERT_LE(mp_eval(f, p).max_grade(), 1);
        }
    }
}

TEST(MpolyProperties, EvaluationIsMultiplicativeForScalarRightFactor)
{
    std::mt19937_64 rng(23);
    AlgebraSignature sig(3);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly f = expand_slice_poly(support::random_poly(sig, 3, rng));
        MultiPoly g(sig);
        for (int t = 0; t < 4; ++t) {
            Exponents e(4, 0);
            e[static_cast<std::size_t>(t)] = t % 3;
            g.add_term(e, Multivector(support::small_rational(rng)));
        }
        std::vector<Rational> p;
        for (int i = 0; i <= 3; ++i)
            p.push_back(support::small_rational(rng));
        ASSERT_EQ(mp_eval(mp_product(f, g), p), mp_eval(f, p) * mp_eval(g, p));
    }
}

TEST(MpolyProperties, ProductDegreeIsAdditiveOnDenseInputs)
{
    std::mt19937_64 rng(24);
    AlgebraSignature sig(3);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly f(sig);
        MultiPoly g(sig);
        std::uniform_int_distribution<int> e(0, 3);
        for (int t = 0; t < 6; ++t) {
            f.add_term({e(rng), e(rng), e(rng), e(rng)}, Multivector(support::positive_rational(rng)));
            g.add_term({e(rng), e(rng), e(rng), e(rng)}, Multivector(support::positive_rational(rng)));
        }
        // Positive scalar coefficients cannot cancel in the top degree.
        ASSERT_EQ(mp_product(f, g).total_degree(), f.total_degree() + g.total_degree());
        MultiPoly h = expand_slice_poly(support::random_poly(sig, 3, rng));
        ASSERT_LE(mp_product(f, h).total_degree(), f.total_degree() + h.total_degree());
    }
}

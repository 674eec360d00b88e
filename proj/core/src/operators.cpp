#include "slicecliff/operators.hpp"

#include <stdexcept>
#include <string>

namespace slicecliff {

Rational CoeffTable::at(int l) const
{
    if (l < 1 || l > k)
        return 0;
    return entries[static_cast<std::size_t>(l - 1)];
}

Rational coeff_closed(int k, int l)
{
    if (k < 1 || l < 1 || l > k)
        throw std::out_of_range("a(" + std::to_string(k) + "," + std::to_string(l) + ") needs 1 <= l <= k");
    Rational q(factorial(static_cast<unsigned long>(2 * k - l - 1)),
               factorial(static_cast<unsigned long>(l - 1)) * factorial(static_cast<unsigned long>(k - l)));
    q.canonicalize();
    return q * rational_pow(Rational(-2), l - k);
}

std::vector<CoeffTable> coeff_table_recursive(int k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("k_max must be >= 1");
    std::vector<CoeffTable> tables;
    tables.push_back({1, {Rational(1)}});
    for (int k = 1; k < k_max; ++k) {
        const CoeffTable& prev = tables.back();
        CoeffTable next{k + 1, {}};
        for (int l = 1; l <= k; ++l)
            next.entries.push_back(prev.at(l - 1) - Rational(2 * k - l) * prev.at(l));
        next.entries.emplace_back(1);
        tables.push_back(std::move(next));
    }
    return tables;
}

BigInt falling_factorial(long a, int n)
{
    if (n < 0)
        throw std::invalid_argument("falling factorial length must be >= 0");
    BigInt r = 1;
    for (int j = 0; j < n; ++j)
        r *= a - j;
    return r;
}

BigInt lemma_sum(int k, int h)
{
    if (k < 1 || h < 0)
        throw std::invalid_argument("lemma_sum needs k >= 1 and h >= 0");
    BigInt total = 0;
    for (int l = 1; l <= k; ++l) {
        BigInt num = factorial(static_cast<unsigned long>(2 * k - l - 1));
        BigInt den = factorial(static_cast<unsigned long>(l - 1)) * factorial(static_cast<unsigned long>(k - l));
        BigInt ratio;
        mpz_divexact(ratio.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        BigInt pow2;
        mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(l));
        if (l % 2 != 0)
            pow2 = -pow2;
        total += pow2 * ratio * falling_factorial(2L * h, l);
    }
    return total;
}

BigInt laplacian_prefactor(int m, int k)
{
    if (k < 0)
        throw std::invalid_argument("Laplacian power must be >= 0");
    BigInt r = 1;
    for (int j = 1; j <= k; ++j)
        r *= m - 2 * j - 1;
    return r;
}

Rational dirac_scale(int m, DiracConvention conv)
{
    Rational s(1 - m);
    if (conv == DiracConvention::Half)
        s /= 2;
    return s;
}

void LaurentBiPoly::add_term(int alpha_exp, int beta_exp, const Multivector& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(Key{alpha_exp, beta_exp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int LaurentBiPoly::min_beta_exponent() const noexcept
{
    int lo = 0;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (first || k.second < lo)
            lo = k.second;
        first = false;
    }
    return lo;
}

BiPoly LaurentBiPoly::to_polynomial(Parity parity) const
{
    BiPoly out(parity);
    for (const auto& [k, c] : terms_) {
        if (k.second < 0)
            throw std::logic_error("negative power b^" + std::to_string(k.second) + " did not cancel");
        out.add_term(k.first, k.second, c);
    }
    return out;
}

LaurentBiPoly laplacian_series_terms(const BiPoly& spherical, int k)
{
    LaurentBiPoly sum;
    if (k <= 0)
        return sum;
    for (int l = 1; l <= k; ++l) {
        Rational a = coeff_closed(k, l);
        BiPoly derivative = partial_beta(spherical, l);
        for (const auto& [key, c] : derivative.terms())
            sum.add_term(key.first, key.second + l - 2 * k, c * a);
    }
    return sum;
}

BiPoly laplacian_power_spherical(const SlicePoly& p, int k)
{
    if (k < 0)
        throw std::invalid_argument("Laplacian power must be >= 0");
    BiPoly fs = spherical_derivative(stem_components(p));
    if (k == 0)
        return fs;
    BiPoly reduced = laplacian_series_terms(fs, k).to_polynomial(Parity::Even);
    return reduced * Rational(laplacian_prefactor(p.signature().m(), k));
}

BiPoly laplacian_power_via_g(const SlicePoly& p, int k)
{
    if (k < 0)
        throw std::invalid_argument("Laplacian power must be >= 0");
    GPoly g = g_representation(spherical_derivative(stem_components(p)));
    BigInt scale = laplacian_prefactor(p.signature().m(), k);
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(k));
    return substitute_beta_squared(partial_gamma(g, k)) * Rational(scale);
}

BiPoly dirac_slice(const SlicePoly& p, DiracConvention conv)
{
    return spherical_derivative(stem_components(p)) * dirac_scale(p.signature().m(), conv);
}

BiPoly frak_F(const SlicePoly& p, int k, DiracConvention conv)
{
    return laplacian_power_spherical(p, k) * dirac_scale(p.signature().m(), conv);
}

bool vanishes_by_prefactor(int m, int k) { return k >= (m - 1) / 2 && k >= 1; }

bool fueter_sce_check(const SlicePoly& p)
{
    MultiPoly f = expand_slice_poly(p);
    return dirac_apply(laplacian_apply(f, p.signature().sce_exponent()), DiracConvention::Half).is_zero();
}

}  // namespace slicecliff

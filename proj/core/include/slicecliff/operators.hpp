#pragma once

// Iterated Laplacians of the spherical derivative and the operators
// F_k = dbar Delta^k on slice regular polynomials, computed from the stem.

#include "slicecliff/mpoly.hpp"
#include "slicecliff/slice.hpp"

#include <map>
#include <utility>
#include <vector>

namespace slicecliff {

/// a_1^(k) .. a_k^(k); entry l-1 holds a_l^(k).
struct CoeffTable {
    int k = 0;
    std::vector<Rational> entries;

    /// a_l^(k), with a_0^(k) = 0 and zero outside 1..k.
    Rational at(int l) const;

    friend bool operator==(const CoeffTable&, const CoeffTable&) = default;
};

/// (-2)^{l-k} (2k-l-1)! / ((l-1)! (k-l)!). Throws std::out_of_range unless
/// 1 <= l <= k.
Rational coeff_closed(int k, int l);

/// Tables for k = 1..k_max built only from
///   a_l^(k+1) = a_{l-1}^(k) - (2k - l) a_l^(k),  a_k^(k) = 1,  a_0^(k) = 0.
std::vector<CoeffTable> coeff_table_recursive(int k_max);

/// a (a-1) ... (a-n+1); 1 when n = 0.
BigInt falling_factorial(long a, int n);

/// sum_{l=1}^k (-2)^l (2k-l-1)! / ((l-1)! (k-l)!) (2h)_l with the falling
/// factorial (2h)_l.
BigInt lemma_sum(int k, int h);

/// (m-3)(m-5)...(m-2k-1): k factors stepping by 2; 1 for k = 0.
BigInt laplacian_prefactor(int m, int k);

/// (1-m)/2 for Half, 1-m for Unital.
Rational dirac_scale(int m, DiracConvention conv);

/// Polynomial in alpha and a signed power of beta.
class LaurentBiPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Multivector>;

    const Terms& terms() const noexcept { return terms_; }
    void add_term(int alpha_exp, int beta_exp, const Multivector& c);
    /// Lowest beta exponent among stored terms (0 when empty).
    int min_beta_exponent() const noexcept;
    /// Throws std::logic_error if any negative beta power survived.
    BiPoly to_polynomial(Parity parity) const;

private:
    Terms terms_;
};

/// sum_{l=1}^k a_l^(k) beta^{l-2k} d_beta^l F, before cancellation.
LaurentBiPoly laplacian_series_terms(const BiPoly& spherical, int k);

/// Delta^k f'_s on the cone, via the stem: prefactor(m, k) times the
/// cancelled Laurent sum. k = 0 returns f'_s. Result is even in beta.
BiPoly laplacian_power_spherical(const SlicePoly& p, int k);

/// Same quantity through G: 2^k prefactor(m, k) d_gamma^k G(alpha, beta^2).
BiPoly laplacian_power_via_g(const SlicePoly& p, int k);

/// dbar f = scale * f'_s.
BiPoly dirac_slice(const SlicePoly& p, DiracConvention conv);

/// F_k f = dbar Delta^k f = scale * Delta^k f'_s, a circular stem.
BiPoly frak_F(const SlicePoly& p, int k, DiracConvention conv = DiracConvention::Half);

/// True when the prefactor of Delta^k f'_s contains the zero factor
/// m - 2 gamma_m - 1, i.e. k >= gamma_m.
bool vanishes_by_prefactor(int m, int k);

/// Brute-force check that dbar Delta^{gamma_m} f = 0 on the expansion.
bool fueter_sce_check(const SlicePoly& p);

}  // namespace slicecliff

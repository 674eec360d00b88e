#pragma once

// Exact arithmetic in the Clifford algebra R_m = Cl(0, m): m anticommuting
// generators e_1..e_m with e_i^2 = -1.

#include "slicecliff/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace slicecliff {

/// Number of imaginary generators m, restricted to odd m >= 3.
class AlgebraSignature {
public:
    /// Throws std::invalid_argument unless m is odd, 3 <= m <= kMaxGenerators.
    explicit AlgebraSignature(int m);

    static constexpr int kMaxGenerators = 31;

    int m() const noexcept { return m_; }
    /// gamma_m = (m - 1) / 2.
    int sce_exponent() const noexcept { return (m_ - 1) / 2; }
    /// Number of paravector coordinates x_0..x_m.
    int variables() const noexcept { return m_ + 1; }

    friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;

private:
    int m_;
};

/// A basis blade e_A, A a subset of {1..m}; generator i lives at bit i-1.
struct BladeMask {
    std::uint32_t bits = 0;

    static constexpr BladeMask unit() { return {}; }
    static constexpr BladeMask generator(int i) { return {std::uint32_t{1} << (i - 1)}; }
    static BladeMask of(std::initializer_list<int> generators);

    int grade() const noexcept;
    bool contains(int i) const noexcept { return (bits >> (i - 1)) & 1U; }
    /// Largest generator index, 0 for the unit.
    int top() const noexcept;
    std::vector<int> indices() const;

    friend auto operator<=>(const BladeMask&, const BladeMask&) = default;
};

struct BladeProduct {
    int sign;
    BladeMask blade;
};

/// e_A * e_B = sign * e_{A xor B}.
BladeProduct blade_product(BladeMask a, BladeMask b) noexcept;

/// Element of R_m as a sparse blade -> coefficient map. Zero coefficients are
/// never stored, so structural equality is algebraic equality.
class Multivector {
public:
    using Terms = std::map<BladeMask, Rational>;

    Multivector() = default;
    Multivector(const Rational& scalar);  // NOLINT(google-explicit-constructor)
    Multivector(long scalar) : Multivector(Rational(scalar)) {}  // NOLINT
    Multivector(BladeMask blade, const Rational& coef);

    static Multivector blade(BladeMask b) { return {b, Rational(1)}; }
    static Multivector generator(int i) { return blade(BladeMask::generator(i)); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_scalar() const noexcept;
    Rational scalar_part() const;
    Rational coefficient(BladeMask b) const;
    /// Largest generator appearing in any stored blade.
    int top_generator() const noexcept;
    int max_grade() const noexcept;

    /// Adds c * e_b in place.
    void add_term(BladeMask b, const Rational& c);

    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    Multivector& operator*=(const Rational& s);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(Multivector a) { return a *= Rational(-1); }
    friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
    friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
    /// Geometric product.
    friend Multivector operator*(const Multivector& a, const Multivector& b);

    friend bool operator==(const Multivector&, const Multivector&) = default;

private:
    Terms terms_;
};

/// Geometric product, bilinear extension of blade_product.
Multivector mv_mul(const Multivector& a, const Multivector& b);

/// Clifford conjugation: the anti-automorphism with e_i -> -e_i.
Multivector mv_conjugate(const Multivector& x);

struct QuadraticInvariants {
    Multivector trace;  ///< t(x) = x + x^c
    Multivector norm;   ///< n(x) = x x^c
};

QuadraticInvariants quadratic_invariants(const Multivector& x);

enum class ConeKind { NotInCone, Real, NonReal };

/// x = alpha + J beta on the quadratic cone. beta is kept squared, and the
/// imaginary part J*beta is stored as-is, so no irrational number appears.
struct ConeDecomposition {
    ConeKind kind = ConeKind::NotInCone;
    Rational alpha;
    Rational beta_squared;
    Multivector imaginary;
};

ConeDecomposition cone_decompose(const Multivector& x);

/// t(x) = 0 and n(x) = 1.
bool is_imaginary_unit(const Multivector& x);

/// Blade suffix: "" for the unit, "13" for e1e3, "{1,13}" when any index > 9.
std::string blade_label(BladeMask b);
/// Blade key used in JSON: "" / "13" / "1,13".
std::string blade_key(BladeMask b);
BladeMask parse_blade_key(std::string_view key);

/// Orders blades by grade, then by index sequence.
bool canonical_blade_less(BladeMask a, BladeMask b);

/// Canonical text: "3/2 + 2 e1 - 1/3 e13"; "0" for zero.
std::string to_string(const Multivector& x);

/// Parses the canonical grammar (and anything built from +, -, rationals,
/// blades and parentheses). Throws ParseError; blades must fit in m if given.
Multivector parse_multivector(std::string_view text, int max_generator = AlgebraSignature::kMaxGenerators);

}  // namespace slicecliff

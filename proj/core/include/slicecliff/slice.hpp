#pragma once

// Slice regular polynomials sum x^n a_n and their stem functions
// F = F0 + i F1 on C, written as polynomials in (alpha, beta).

#include "slicecliff/clifford.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slicecliff {

/// sum_{n=0}^{d} x^n a_n with coefficients on the right.
class SlicePoly {
public:
    explicit SlicePoly(AlgebraSignature sig) : sig_(sig) {}
    /// Drops trailing zero coefficients. Throws std::invalid_argument if a
    /// coefficient uses a generator beyond m.
    SlicePoly(AlgebraSignature sig, std::vector<Multivector> coefficients);

    static SlicePoly monomial(AlgebraSignature sig, int n, const Multivector& coef = Multivector(1));

    AlgebraSignature signature() const noexcept { return sig_; }
    const std::vector<Multivector>& coefficients() const noexcept { return coefs_; }
    Multivector coefficient(int n) const;
    bool is_zero() const noexcept { return coefs_.empty(); }
    /// Index of the last nonzero coefficient; 0 for the zero polynomial.
    int degree() const noexcept { return coefs_.empty() ? 0 : static_cast<int>(coefs_.size()) - 1; }

    friend bool operator==(const SlicePoly&, const SlicePoly&) = default;

private:
    AlgebraSignature sig_;
    std::vector<Multivector> coefs_;
};

/// Accepts e.g. "x^5 + (1/2 + 2 e1) x^2 - 3"; a coefficient may stand on
/// either side of x^n and is always read as a right coefficient.
SlicePoly parse_slice_poly(std::string_view text, AlgebraSignature sig);

/// "x^5 + x^2 (1/2 + 2 e1) - 3".
std::string to_string(const SlicePoly& p);

enum class Parity { Even, Odd, None };

/// Key (alpha exponent, beta exponent). Ordered by descending total degree,
/// then descending first exponent, which is the printing order.
struct DescendingGraded {
    bool operator()(const std::pair<int, int>& l, const std::pair<int, int>& r) const
    {
        int dl = l.first + l.second;
        int dr = r.first + r.second;
        if (dl != dr)
            return dl > dr;
        return l.first > r.first;
    }
};

/// Polynomial in (alpha, beta) with multivector coefficients and a declared
/// parity in beta that every stored term satisfies.
class BiPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Multivector, DescendingGraded>;

    explicit BiPoly(Parity parity = Parity::None) : parity_(parity) {}

    Parity parity() const noexcept { return parity_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Multivector coefficient(int alpha_exp, int beta_exp) const;
    /// Highest beta exponent, -1 for zero.
    int beta_degree() const noexcept;

    /// Throws std::logic_error when the term breaks the declared parity.
    void add_term(int alpha_exp, int beta_exp, const Multivector& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }

    /// Term-wise equality; the declared parity is not compared.
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    Multivector eval(const Rational& alpha, const Rational& beta) const;

private:
    Parity parity_;
    Terms terms_;
};

BiPoly partial_alpha(const BiPoly& f, int times = 1);
BiPoly partial_beta(const BiPoly& f, int times = 1);
/// Parity actually exhibited by the stored terms (Even for zero).
Parity detect_parity(const BiPoly& f);

/// "160 a^2 - 32 b^2" with a = alpha, b = beta.
std::string to_string(const BiPoly& f);

struct StemPair {
    BiPoly f0{Parity::Even};
    BiPoly f1{Parity::Odd};
};

/// (alpha + i beta)^n = P_n + i Q_n, F0 = sum P_n a_n, F1 = sum Q_n a_n.
StemPair stem_components(const SlicePoly& p);

/// F1 / beta. Throws std::domain_error if F1 has a beta-free term.
BiPoly spherical_derivative(const StemPair& s);

/// Polynomial in (alpha, gamma) standing for gamma = beta^2.
class GPoly {
public:
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Multivector, DescendingGraded>;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add_term(int alpha_exp, int gamma_exp, const Multivector& c);

    friend bool operator==(const GPoly&, const GPoly&) = default;

private:
    Terms terms_;
};

/// beta^{2j} -> gamma^j. Throws std::domain_error on an odd beta power.
GPoly g_representation(const BiPoly& even);
/// gamma^j -> beta^{2j}.
BiPoly substitute_beta_squared(const GPoly& g);
GPoly partial_gamma(const GPoly& g, int times = 1);
/// "5 a^4 - 10 a^2 g + g^2".
std::string to_string(const GPoly& g);

/// F0(alpha, beta) + J F1(alpha, beta). Throws std::invalid_argument unless
/// J is an imaginary unit and beta >= 0.
Multivector slice_eval(const StemPair& s, const Rational& alpha, const Rational& beta, const Multivector& J);

}  // namespace slicecliff

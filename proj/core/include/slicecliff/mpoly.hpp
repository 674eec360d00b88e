#pragma once

// Brute-force representation: polynomials in the paravector coordinates
// x_0..x_m with multivector coefficients, and the Dirac and Laplace operators
// applied coordinate by coordinate. Independent of the stem-function path in
// slice.hpp / operators.hpp and used to check it.

#include "slicecliff/clifford.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace slicecliff {

class SlicePoly;

/// Exponent vector of length m+1, entry i is the power of x_i.
using Exponents = std::vector<int>;

/// Total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Scaling of the Dirac operator: Half is 1/2 (d_0 + sum e_j d_j), Unital
/// drops the 1/2.
enum class DiracConvention { Half, Unital };

/// Variables commute with everything; coefficients multiply in the order
/// the factors are written.
class MultiPoly {
public:
    using Terms = std::map<Exponents, Multivector, GradedLex>;

    explicit MultiPoly(AlgebraSignature sig) : sig_(sig) {}

    static MultiPoly constant(AlgebraSignature sig, const Multivector& c);
    /// The monomial x_i with coefficient c.
    static MultiPoly variable(AlgebraSignature sig, int i, const Multivector& c = Multivector(1));
    /// x = x_0 + sum_j x_j e_j.
    static MultiPoly paravector(AlgebraSignature sig);

    AlgebraSignature signature() const noexcept { return sig_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;
    Multivector coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, const Multivector& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }

    /// Multiplies every coefficient by c on the right.
    MultiPoly times_right(const Multivector& c) const;
    /// Multiplies every coefficient by c on the left.
    MultiPoly times_left(const Multivector& c) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    AlgebraSignature sig_;
    Terms terms_;
};

/// Throws std::invalid_argument on signature mismatch.
MultiPoly mp_product(const MultiPoly& f, const MultiPoly& g);

/// Substitutes x = x_0 + sum x_j e_j into sum x^n a_n.
MultiPoly expand_slice_poly(const SlicePoly& p);

/// Formal derivative in x_i, 0 <= i <= m. Throws std::out_of_range.
MultiPoly mp_partial(const MultiPoly& f, int i);

/// c (d_0 f + sum_j e_j d_j f), e_j acting from the left.
MultiPoly dirac_apply(const MultiPoly& f, DiracConvention conv);

/// k-fold Laplacian of R^{m+1}.
MultiPoly laplacian_apply(const MultiPoly& f, int k);

/// Exact evaluation; point must have m+1 entries (std::invalid_argument).
Multivector mp_eval(const MultiPoly& f, std::span<const Rational> point);

/// Descending graded-lex text, e.g. "x0^2 - x1^2 + 2 x0 x1 (e1)".
std::string to_string(const MultiPoly& f);

}  // namespace slicecliff

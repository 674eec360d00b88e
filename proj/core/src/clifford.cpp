#include "slicecliff/clifford.hpp"

#include "term_parser.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace slicecliff {

AlgebraSignature::AlgebraSignature(int m) : m_(m)
{
    if (m < 3 || m % 2 == 0 || m > kMaxGenerators)
        throw std::invalid_argument("m must be odd with 3 <= m <= 31, got " + std::to_string(m));
}

BladeMask BladeMask::of(std::initializer_list<int> generators)
{
    BladeMask b;
    for (int i : generators)
        b.bits |= generator(i).bits;
    return b;
}

int BladeMask::grade() const noexcept { return std::popcount(bits); }

int BladeMask::top() const noexcept { return 32 - std::countl_zero(bits); }

std::vector<int> BladeMask::indices() const
{
    std::vector<int> out;
    for (std::uint32_t rest = bits; rest != 0; rest &= rest - 1)
        out.push_back(std::countr_zero(rest) + 1);
    return out;
}

BladeProduct blade_product(BladeMask a, BladeMask b) noexcept
{
    // Moving each generator of b leftwards past the larger generators of a
    // costs one sign flip per transposition.
    int swaps = 0;
    for (std::uint32_t rest = b.bits; rest != 0; rest &= rest - 1) {
        std::uint32_t low = rest & (~rest + 1);
        swaps += std::popcount(a.bits & ~(low | (low - 1)));
    }
    // Each shared generator contributes e_i^2 = -1.
    swaps += std::popcount(a.bits & b.bits);
    return {(swaps & 1) ? -1 : 1, BladeMask{a.bits ^ b.bits}};
}

// GMP arithmetic assumes canonical operands, and mpq_class(p, q) does not
// reduce, so every coefficient entering from outside is canonicalized here.
namespace {

Rational canonical(const Rational& q)
{
    Rational r = q;
    r.canonicalize();
    return r;
}

}  // namespace

Multivector::Multivector(const Rational& scalar)
{
    Rational c = canonical(scalar);
    if (c != 0)
        terms_.emplace(BladeMask::unit(), std::move(c));
}

Multivector::Multivector(BladeMask blade, const Rational& coef)
{
    Rational c = canonical(coef);
    if (c != 0)
        terms_.emplace(blade, std::move(c));
}

bool Multivector::is_scalar() const noexcept
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == BladeMask::unit());
}

Rational Multivector::scalar_part() const { return coefficient(BladeMask::unit()); }

Rational Multivector::coefficient(BladeMask b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Multivector::top_generator() const noexcept
{
    int top = 0;
    for (const auto& [b, c] : terms_)
        top = std::max(top, b.top());
    return top;
}

int Multivector::max_grade() const noexcept
{
    int g = 0;
    for (const auto& [b, c] : terms_)
        g = std::max(g, b.grade());
    return g;
}

void Multivector::add_term(BladeMask b, const Rational& coef)
{
    Rational c = canonical(coef);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Multivector& Multivector::operator+=(const Multivector& o)
{
    for (const auto& [b, c] : o.terms_)
        add_term(b, c);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& o)
{
    for (const auto& [b, c] : o.terms_)
        add_term(b, -c);
    return *this;
}

Multivector& Multivector::operator*=(const Rational& scale)
{
    Rational s = canonical(scale);
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_)
        c *= s;
    return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b)
{
    Multivector out;
    Rational prod;
    for (const auto& [ba, ca] : a.terms_) {
        for (const auto& [bb, cb] : b.terms_) {
            auto [sign, blade] = blade_product(ba, bb);
            prod = ca * cb;
            if (sign < 0)
                prod = -prod;
            out.add_term(blade, prod);
        }
    }
    return out;
}

Multivector mv_mul(const Multivector& a, const Multivector& b) { return a * b; }

Multivector mv_conjugate(const Multivector& x)
{
    Multivector out = x;
    for (const auto& [b, c] : x.terms()) {
        int g = b.grade();
        // (-1)^{g(g+1)/2}: + for grades 0, 3 mod 4.
        if ((g * (g + 1) / 2) % 2 != 0)
            out.add_term(b, -2 * c);
    }
    return out;
}

QuadraticInvariants quadratic_invariants(const Multivector& x)
{
    Multivector c = mv_conjugate(x);
    return {x + c, x * c};
}

ConeDecomposition cone_decompose(const Multivector& x)
{
    auto [t, n] = quadratic_invariants(x);
    ConeDecomposition d;
    if (!t.is_scalar() || !n.is_scalar())
        return d;
    d.alpha = t.scalar_part() / 2;
    d.beta_squared = n.scalar_part() - d.alpha * d.alpha;
    d.imaginary = x - Multivector(d.alpha);
    if (d.imaginary.is_zero()) {
        d.kind = ConeKind::Real;
        d.beta_squared = 0;
    } else {
        // Nonzero imaginary part with t = 2 alpha, n real forces beta^2 > 0
        // (x - alpha squares to -beta^2 and n(x - alpha) = beta^2 is a sum of squares).
        if (d.beta_squared <= 0)
            return ConeDecomposition{};
        d.kind = ConeKind::NonReal;
    }
    return d;
}

bool is_imaginary_unit(const Multivector& x)
{
    auto [t, n] = quadratic_invariants(x);
    return t.is_zero() && n == Multivector(1);
}

std::string blade_label(BladeMask b)
{
    auto idx = b.indices();
    bool wide = std::any_of(idx.begin(), idx.end(), [](int i) { return i > 9; });
    std::string s;
    if (wide) {
        s = "{";
        for (std::size_t i = 0; i < idx.size(); ++i)
            s += (i ? "," : "") + std::to_string(idx[i]);
        s += "}";
    } else {
        for (int i : idx)
            s += std::to_string(i);
    }
    return s;
}

std::string blade_key(BladeMask b)
{
    auto idx = b.indices();
    bool wide = std::any_of(idx.begin(), idx.end(), [](int i) { return i > 9; });
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (wide && i)
            s += ",";
        s += std::to_string(idx[i]);
    }
    return s;
}

BladeMask parse_blade_key(std::string_view key)
{
    if (key.empty())
        return BladeMask::unit();
    std::string text = key.find(',') != std::string_view::npos ? "e{" + std::string(key) + "}" : "e" + std::string(key);
    auto terms = detail::parse_terms(text, false, AlgebraSignature::kMaxGenerators);
    if (terms.size() != 1 || terms[0].coef.terms().size() != 1)
        throw ParseError("malformed blade key '" + std::string(key) + "'");
    return terms[0].coef.terms().begin()->first;
}

bool canonical_blade_less(BladeMask a, BladeMask b)
{
    if (a.grade() != b.grade())
        return a.grade() < b.grade();
    return a.indices() < b.indices();
}

std::string to_string(const Multivector& x)
{
    if (x.is_zero())
        return "0";
    std::vector<std::pair<BladeMask, Rational>> terms(x.terms().begin(), x.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return canonical_blade_less(l.first, r.first); });
    std::string s;
    bool first = true;
    for (const auto& [b, c] : terms) {
        Rational mag = abs(c);
        if (first)
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        first = false;
        bool unit = b == BladeMask::unit();
        if (unit || mag != 1)
            s += to_string(mag);
        if (!unit) {
            if (mag != 1)
                s += " ";
            s += "e" + blade_label(b);
        }
    }
    return s;
}

Multivector parse_multivector(std::string_view text, int max_generator)
{
    Multivector out;
    for (auto& t : detail::parse_terms(text, false, max_generator))
        out += t.coef;
    return out;
}

}  // namespace slicecliff

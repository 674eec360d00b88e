#include "slicecliff/slice.hpp"

#include "term_parser.hpp"

#include <stdexcept>

namespace slicecliff {

namespace {

bool fits(Parity p, int beta_exp)
{
    switch (p) {
    case Parity::Even:
        return beta_exp % 2 == 0;
    case Parity::Odd:
        return beta_exp % 2 != 0;
    case Parity::None:
        return true;
    }
    return true;
}

Parity flip(Parity p)
{
    switch (p) {
    case Parity::Even:
        return Parity::Odd;
    case Parity::Odd:
        return Parity::Even;
    case Parity::None:
        return Parity::None;
    }
    return Parity::None;
}

std::string monomial(char a, int ea, char b, int eb)
{
    std::string s;
    auto put = [&s](char v, int e) {
        if (e == 0)
            return;
        if (!s.empty())
            s += " ";
        s += v;
        if (e > 1)
            s += "^" + std::to_string(e);
    };
    put(a, ea);
    put(b, eb);
    return s;
}

// Shared term printer: scalar coefficients lead, other coefficients follow
// the monomial in parentheses.
void append_term(std::string& s, bool first, const std::string& mono, const Multivector& c)
{
    if (c.is_scalar()) {
        Rational q = c.scalar_part();
        s += first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
        Rational mag = abs(q);
        if (mono.empty())
            s += to_string(mag);
        else
            s += (mag == 1 ? "" : to_string(mag) + " ") + mono;
    } else {
        s += first ? "" : " + ";
        s += mono.empty() ? "(" + to_string(c) + ")" : mono + " (" + to_string(c) + ")";
    }
}

template <class Terms>
std::string render(const Terms& terms, char a, char b)
{
    if (terms.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [key, c] : terms) {
        append_term(s, first, monomial(a, key.first, b, key.second), c);
        first = false;
    }
    return s;
}

template <class Terms>
void accumulate(Terms& terms, const typename Terms::key_type& key, const Multivector& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms.erase(it);
    }
}

}  // namespace

SlicePoly::SlicePoly(AlgebraSignature sig, std::vector<Multivector> coefficients) : sig_(sig), coefs_(std::move(coefficients))
{
    for (const auto& c : coefs_)
        if (c.top_generator() > sig_.m())
            throw std::invalid_argument("coefficient " + to_string(c) + " uses a generator beyond m=" +
                                        std::to_string(sig_.m()));
    while (!coefs_.empty() && coefs_.back().is_zero())
        coefs_.pop_back();
}

SlicePoly SlicePoly::monomial(AlgebraSignature sig, int n, const Multivector& coef)
{
    if (n < 0)
        throw std::invalid_argument("negative power");
    std::vector<Multivector> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = coef;
    return SlicePoly(sig, std::move(c));
}

Multivector SlicePoly::coefficient(int n) const
{
    if (n < 0 || n >= static_cast<int>(coefs_.size()))
        return {};
    return coefs_[static_cast<std::size_t>(n)];
}

SlicePoly parse_slice_poly(std::string_view text, AlgebraSignature sig)
{
    std::vector<Multivector> coefs;
    for (auto& t : detail::parse_terms(text, true, sig.m())) {
        if (static_cast<int>(coefs.size()) <= t.power)
            coefs.resize(static_cast<std::size_t>(t.power) + 1);
        coefs[static_cast<std::size_t>(t.power)] += t.coef;
    }
    return SlicePoly(sig, std::move(coefs));
}

std::string to_string(const SlicePoly& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (int n = p.degree(); n >= 0; --n) {
        const Multivector& c = p.coefficients()[static_cast<std::size_t>(n)];
        if (c.is_zero())
            continue;
        std::string mono = n == 0 ? "" : (n == 1 ? "x" : "x^" + std::to_string(n));
        append_term(s, first, mono, c);
        first = false;
    }
    return s;
}

Multivector BiPoly::coefficient(int alpha_exp, int beta_exp) const
{
    auto it = terms_.find({alpha_exp, beta_exp});
    return it == terms_.end() ? Multivector() : it->second;
}

int BiPoly::beta_degree() const noexcept
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.second);
    return d;
}

void BiPoly::add_term(int alpha_exp, int beta_exp, const Multivector& c)
{
    if (alpha_exp < 0 || beta_exp < 0)
        throw std::logic_error("negative exponent in BiPoly");
    if (c.is_zero())
        return;
    if (!fits(parity_, beta_exp))
        throw std::logic_error("term b^" + std::to_string(beta_exp) + " violates declared parity");
    accumulate(terms_, Key{alpha_exp, beta_exp}, c);
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_)
        c *= s;
    return *this;
}

Multivector BiPoly::eval(const Rational& alpha, const Rational& beta) const
{
    Multivector out;
    for (const auto& [k, c] : terms_) {
        Rational w = rational_pow(alpha, k.first) * rational_pow(beta, k.second);
        if (w != 0)
            out += c * w;
    }
    return out;
}

BiPoly partial_alpha(const BiPoly& f, int times)
{
    BiPoly out(f.parity());
    for (const auto& [k, c] : f.terms()) {
        if (k.first < times)
            continue;
        Rational factor = 1;
        for (int j = 0; j < times; ++j)
            factor *= k.first - j;
        out.add_term(k.first - times, k.second, c * factor);
    }
    return out;
}

BiPoly partial_beta(const BiPoly& f, int times)
{
    BiPoly out(times % 2 == 0 ? f.parity() : flip(f.parity()));
    for (const auto& [k, c] : f.terms()) {
        if (k.second < times)
            continue;
        Rational factor = 1;
        for (int j = 0; j < times; ++j)
            factor *= k.second - j;
        out.add_term(k.first, k.second - times, c * factor);
    }
    return out;
}

Parity detect_parity(const BiPoly& f)
{
    bool even = true;
    bool odd = true;
    for (const auto& [k, c] : f.terms()) {
        (k.second % 2 == 0 ? odd : even) = false;
    }
    if (even)
        return Parity::Even;
    return odd ? Parity::Odd : Parity::None;
}

std::string to_string(const BiPoly& f) { return render(f.terms(), 'a', 'b'); }

StemPair stem_components(const SlicePoly& p)
{
    StemPair s;
    const auto& coefs = p.coefficients();
    for (std::size_t n = 0; n < coefs.size(); ++n) {
        if (coefs[n].is_zero())
            continue;
        BigInt binom = 1;
        for (int j = 0; j <= static_cast<int>(n); ++j) {
            if (j > 0)
                binom = binom * static_cast<long>(n - static_cast<std::size_t>(j) + 1) / j;
            // i^j: real for even j, imaginary for odd j, sign (-1)^{floor(j/2)}.
            Rational w(binom);
            if ((j / 2) % 2 != 0)
                w = -w;
            int ea = static_cast<int>(n) - j;
            if (j % 2 == 0)
                s.f0.add_term(ea, j, coefs[n] * w);
            else
                s.f1.add_term(ea, j, coefs[n] * w);
        }
    }
    return s;
}

BiPoly spherical_derivative(const StemPair& s)
{
    BiPoly out(Parity::Even);
    for (const auto& [k, c] : s.f1.terms()) {
        if (k.second == 0)
            throw std::domain_error("F1 has a beta-free term; stem is not odd");
        out.add_term(k.first, k.second - 1, c);
    }
    return out;
}

void GPoly::add_term(int alpha_exp, int gamma_exp, const Multivector& c)
{
    if (alpha_exp < 0 || gamma_exp < 0)
        throw std::logic_error("negative exponent in GPoly");
    accumulate(terms_, Key{alpha_exp, gamma_exp}, c);
}

GPoly g_representation(const BiPoly& even)
{
    GPoly g;
    for (const auto& [k, c] : even.terms()) {
        if (k.second % 2 != 0)
            throw std::domain_error("odd power b^" + std::to_string(k.second) + " has no representation in b^2");
        g.add_term(k.first, k.second / 2, c);
    }
    return g;
}

BiPoly substitute_beta_squared(const GPoly& g)
{
    BiPoly out(Parity::Even);
    for (const auto& [k, c] : g.terms())
        out.add_term(k.first, 2 * k.second, c);
    return out;
}

GPoly partial_gamma(const GPoly& g, int times)
{
    GPoly out;
    for (const auto& [k, c] : g.terms()) {
        if (k.second < times)
            continue;
        Rational factor = 1;
        for (int j = 0; j < times; ++j)
            factor *= k.second - j;
        out.add_term(k.first, k.second - times, c * factor);
    }
    return out;
}

std::string to_string(const GPoly& g) { return render(g.terms(), 'a', 'g'); }

Multivector slice_eval(const StemPair& s, const Rational& alpha, const Rational& beta, const Multivector& J)
{
    if (!is_imaginary_unit(J))
        throw std::invalid_argument(to_string(J) + " is not an imaginary unit");
    if (beta < 0)
        throw std::invalid_argument("beta must be >= 0");
    return s.f0.eval(alpha, beta) + J * s.f1.eval(alpha, beta);
}

}  // namespace slicecliff

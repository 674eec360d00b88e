#include "slicecliff/mpoly.hpp"

#include "slicecliff/slice.hpp"

#include <numeric>
#include <stdexcept>

namespace slicecliff {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_same(const MultiPoly& f, const MultiPoly& g)
{
    if (!(f.signature() == g.signature()))
        throw std::invalid_argument("MultiPoly signature mismatch: m=" + std::to_string(f.signature().m()) +
                                    " vs m=" + std::to_string(g.signature().m()));
}

}  // namespace

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const
{
    int da = degree_of(a);
    int db = degree_of(b);
    if (da != db)
        return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(AlgebraSignature sig, const Multivector& c)
{
    MultiPoly p(sig);
    p.add_term(Exponents(sig.variables(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(AlgebraSignature sig, int i, const Multivector& c)
{
    if (i < 0 || i > sig.m())
        throw std::out_of_range("variable index " + std::to_string(i) + " outside 0.." + std::to_string(sig.m()));
    MultiPoly p(sig);
    Exponents e(sig.variables(), 0);
    e[i] = 1;
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::paravector(AlgebraSignature sig)
{
    MultiPoly x = variable(sig, 0);
    for (int j = 1; j <= sig.m(); ++j)
        x += variable(sig, j, Multivector::generator(j));
    return x;
}

int MultiPoly::total_degree() const
{
    // GradedLex puts the highest degree last.
    return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first);
}

Multivector MultiPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Multivector() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Multivector& c)
{
    if (static_cast<int>(e.size()) != sig_.variables())
        throw std::invalid_argument("exponent vector must have length m+1");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    check_same(*this, o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

MultiPoly MultiPoly::times_right(const Multivector& c) const
{
    MultiPoly out(sig_);
    for (const auto& [e, a] : terms_)
        out.add_term(e, a * c);
    return out;
}

MultiPoly MultiPoly::times_left(const Multivector& c) const
{
    MultiPoly out(sig_);
    for (const auto& [e, a] : terms_)
        out.add_term(e, c * a);
    return out;
}

MultiPoly mp_product(const MultiPoly& f, const MultiPoly& g)
{
    check_same(f, g);
    MultiPoly out(f.signature());
    Exponents e(f.signature().variables());
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ef[i] + eg[i];
            out.add_term(e, cf * cg);
        }
    }
    return out;
}

MultiPoly expand_slice_poly(const SlicePoly& p)
{
    AlgebraSignature sig = p.signature();
    MultiPoly x = MultiPoly::paravector(sig);
    MultiPoly power = MultiPoly::constant(sig, Multivector(1));
    MultiPoly out(sig);
    const auto& coefs = p.coefficients();
    for (std::size_t n = 0; n < coefs.size(); ++n) {
        if (n > 0)
            power = mp_product(power, x);
        if (!coefs[n].is_zero())
            out += power.times_right(coefs[n]);
    }
    return out;
}

MultiPoly mp_partial(const MultiPoly& f, int i)
{
    if (i < 0 || i > f.signature().m())
        throw std::out_of_range("partial derivative index " + std::to_string(i) + " outside 0.." +
                                std::to_string(f.signature().m()));
    MultiPoly out(f.signature());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0)
            continue;
        Exponents d = e;
        --d[i];
        out.add_term(d, c * Rational(e[i]));
    }
    return out;
}

MultiPoly dirac_apply(const MultiPoly& f, DiracConvention conv)
{
    MultiPoly out = mp_partial(f, 0);
    for (int j = 1; j <= f.signature().m(); ++j)
        out += mp_partial(f, j).times_left(Multivector::generator(j));
    if (conv == DiracConvention::Half)
        out *= Rational(1, 2);
    return out;
}

MultiPoly laplacian_apply(const MultiPoly& f, int k)
{
    if (k < 0)
        throw std::invalid_argument("Laplacian power must be >= 0");
    MultiPoly cur = f;
    for (int step = 0; step < k; ++step) {
        MultiPoly next(f.signature());
        for (const auto& [e, c] : cur.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 2)
                    continue;
                Exponents d = e;
                d[i] -= 2;
                next.add_term(d, c * Rational(e[i] * (e[i] - 1)));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

Multivector mp_eval(const MultiPoly& f, std::span<const Rational> point)
{
    if (static_cast<int>(point.size()) != f.signature().variables())
        throw std::invalid_argument("evaluation point needs m+1 = " + std::to_string(f.signature().variables()) +
                                    " coordinates, got " + std::to_string(point.size()));
    Multivector out;
    for (const auto& [e, c] : f.terms()) {
        Rational w = 1;
        for (std::size_t i = 0; i < e.size() && w != 0; ++i)
            if (e[i] != 0)
                w *= rational_pow(point[i], e[i]);
        if (w != 0)
            out += c * w;
    }
    return out;
}

std::string to_string(const MultiPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += " ";
            mono += "x" + std::to_string(i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
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
        first = false;
    }
    return s;
}

}  // namespace slicecliff

#include "slicecliff/rational.hpp"

#include <cctype>

namespace slicecliff {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den))
            throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (!all_digits(digits))
        throw ParseError("malformed rational '" + std::string(text) + "'");

    Rational q;
    q.get_num() = BigInt(std::string(num.front() == '+' ? num.substr(1) : num));
    q.get_den() = den.empty() ? BigInt(1) : BigInt(std::string(den));
    if (q.get_den() == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& base, long exp)
{
    if (exp < 0) {
        if (base == 0)
            throw std::domain_error("negative power of zero");
        Rational inv = 1 / base;
        return rational_pow(inv, -exp);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    r.canonicalize();
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace slicecliff

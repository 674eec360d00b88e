#include "term_parser.hpp"

#include <cctype>
#include <string>

namespace slicecliff::detail {

namespace {

class Parser {
public:
    Parser(std::string_view text, bool allow_x, int max_generator)
        : text_(text), allow_x_(allow_x), max_generator_(max_generator)
    {
    }

    std::vector<ParsedTerm> parse()
    {
        auto terms = sum(/*nested=*/false);
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    std::string digits()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    int small_int()
    {
        std::string d = digits();
        if (d.size() > 6)
            fail("integer too large");
        return std::stoi(d);
    }

    bool starts_factor()
    {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'e' || c == '(' || (c == 'x' && allow_x_);
    }

    std::vector<ParsedTerm> sum(bool nested)
    {
        std::vector<ParsedTerm> out;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept('-'))
                sign = -1;
            else if (!accept('+') && !first)
                break;
            first = false;
            ParsedTerm t = term();
            if (sign < 0)
                t.coef = -t.coef;
            out.push_back(std::move(t));
            char c = peek();
            if (c != '+' && c != '-')
                break;
        }
        if (out.empty())
            fail(nested ? "empty parentheses" : "empty expression");
        return out;
    }

    ParsedTerm term()
    {
        if (!starts_factor())
            fail("expected a term");
        ParsedTerm t{0, Multivector(1)};
        while (starts_factor())
            factor(t);
        return t;
    }

    void factor(ParsedTerm& t)
    {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            if (accept('/'))
                den = digits();
            t.coef = t.coef * Rational(parse_rational(num + "/" + den));
        } else if (c == 'e') {
            ++pos_;
            t.coef = t.coef * Multivector::blade(blade());
        } else if (c == 'x') {
            ++pos_;
            int n = 1;
            if (accept('^'))
                n = small_int();
            t.power += n;
        } else if (c == '(') {
            ++pos_;
            auto inner = sum(/*nested=*/true);
            if (!accept(')'))
                fail("expected ')'");
            Multivector v;
            for (auto& it : inner) {
                if (it.power != 0)
                    fail("powers of x inside parentheses");
                v += it.coef;
            }
            t.coef = t.coef * v;
        }
    }

    BladeMask blade()
    {
        std::vector<int> idx;
        if (pos_ < text_.size() && text_[pos_] == '{') {
            ++pos_;
            do {
                idx.push_back(small_int());
            } while (accept(','));
            if (!accept('}'))
                fail("expected '}'");
        } else {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                idx.push_back(text_[pos_++] - '0');
            if (idx.empty())
                fail("blade needs generator indices");
        }
        BladeMask b;
        int prev = 0;
        for (int i : idx) {
            if (i <= prev)
                fail("blade indices must be strictly increasing and positive");
            if (i > max_generator_)
                fail("generator e" + std::to_string(i) + " exceeds m=" + std::to_string(max_generator_));
            b.bits |= BladeMask::generator(i).bits;
            prev = i;
        }
        return b;
    }

    std::string_view text_;
    bool allow_x_;
    int max_generator_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, bool allow_x, int max_generator)
{
    return Parser(text, allow_x, max_generator).parse();
}

}  // namespace slicecliff::detail

#pragma once

// Shared recursive-descent parser for the multivector and slice polynomial
// grammars:
//
//   sum    := [+|-] term { (+|-) term }
//   term   := factor { factor }
//   factor := int [ '/' int ] | blade | 'x' [ '^' int ] | '(' sum ')'
//   blade  := 'e' digit+ | 'e{' int { ',' int } '}'
//
// Factors of one term multiply left to right; powers of x collect into a
// single exponent. Parentheses must not contain x.

#include "slicecliff/clifford.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace slicecliff::detail {

struct ParsedTerm {
    int power = 0;
    Multivector coef;
};

std::vector<ParsedTerm> parse_terms(std::string_view text, bool allow_x, int max_generator);

}  // namespace slicecliff::detail

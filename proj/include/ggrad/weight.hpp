#pragma once

#include <string>
#include <vector>

#include "ggrad/rational.hpp"

namespace ggrad {

// A weight is its coordinate vector in the group's chosen basis. The basis
// conventions live in the group descriptors; a bare Weight carries no group
// tag.
using Weight = std::vector<Rat>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_neg(const Weight& a);
Weight weight_scale(const Rat& c, const Weight& a);
bool is_zero_weight(const Weight& a);

// Strict lexicographic order on coordinates; the canonical deterministic
// order used everywhere a list of weights is emitted.
bool lex_less(const Weight& a, const Weight& b);

struct WeightLexLess {
  bool operator()(const Weight& a, const Weight& b) const {
    return lex_less(a, b);
  }
};

std::string format_weight(const Weight& w);  // "(1, 1/2, -1/2)"

// Parses "1,1/2,-3/2"; on a malformed coordinate the error message names its
// 1-based position.
Weight parse_weight_csv(const std::string& s);

}  // namespace ggrad

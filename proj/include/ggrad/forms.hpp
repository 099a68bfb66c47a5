#pragma once

#include <vector>

#include "ggrad/weight.hpp"

namespace ggrad {

// Highest weight(s) of the SO(n) representation underlying Lambda^p R^n:
// (1,...,1,0,...,0) with min(p, n-p) ones, except p = n/2 for even n, where
// the complexification splits into the selfdual pair (1,...,1,+-1).
std::vector<Weight> form_rep_weights(int n, int p);

// One irreducible component of d or delta on p-forms, at the representation
// level: the source highest weight and the relevant direction.
struct FormArrow {
  Weight source_rep;
  Weight eps;
};

// All components of d : Lambda^p -> Lambda^{p+1}; 0 <= p <= n-1. Two arrows
// appear at the even-n selfdual boundaries, one otherwise; the middle-degree
// cases of odd n have eps = 0.
std::vector<FormArrow> d_arrows(int n, int p);

// All components of delta : Lambda^p -> Lambda^{p-1}; 1 <= p <= n.
std::vector<FormArrow> delta_arrows(int n, int p);

}  // namespace ggrad

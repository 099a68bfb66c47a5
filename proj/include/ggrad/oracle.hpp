#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ggrad/dominance.hpp"
#include "ggrad/group.hpp"

namespace ggrad {

// A dominant weight together with the determinant of the Weyl element that
// carried the input into the dominant chamber.
struct SignedWeight {
  Weight weight;
  int sign = 1;  // +-1
};

// If w + delta lies on a chamber wall, returns nothing; otherwise returns
// (sigma(w + delta) - delta, det sigma) for the unique Weyl element sigma
// making sigma(w + delta) strictly dominant. Implemented by sorting with sign
// bookkeeping for the classical types and by simple-root descent for G2.
std::optional<SignedWeight> reflect_to_dominant(const GroupDescriptor& g,
                                                const Weight& w);

// Klimyk summation over the tau weights: decomposes tau (x) lambda into
// dominant weights with multiplicities, by signed reflection into the
// dominant chamber. Independent of the selection-rule path. Throws
// InternalInconsistencyError if any net multiplicity is negative.
std::vector<std::pair<DominantWeight, int>> tensor_decompose_oracle(
    const GroupDescriptor& g, const DominantWeight& lambda);

// Weyl dimension formula, exact: product over positive roots of
// <lambda + delta, alpha> / <delta, alpha>. Throws if the result is not a
// positive integer.
Int weyl_dim(const GroupDescriptor& g, const DominantWeight& lambda);

// Assembles the conformal weight operator on (R^n)* (x) Lambda^p R^n as an
// integer matrix (e_i wedge alpha acting through the derivation action on
// forms) and extracts its eigenvalue/multiplicity multiset by exact
// kernel-rank computations against the candidate eigenvalues of the
// closed-form formulas. Requires 3 <= n <= 8, 1 <= p <= n-1. The result is
// sorted by eigenvalue.
std::vector<std::pair<Rat, Int>> weight_operator_eigenvalues_forms(int n,
                                                                   int p);

// Rank of an integer matrix by fraction-free (Bareiss) elimination with full
// pivoting. Exposed for tests.
int bareiss_rank(std::vector<std::vector<Int>> a);

}  // namespace ggrad

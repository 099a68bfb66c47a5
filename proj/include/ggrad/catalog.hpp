#pragma once

#include <string>
#include <vector>

#include "ggrad/selection.hpp"

namespace ggrad {

enum class OperatorKind {
  ExteriorDerivative,  // index = p
  Codifferential,      // index = p
  FormTwistor,         // index = p
  Dirac,
  PenroseTwistor,
  RaritaSchwinger,
  KahlerGradientPlus,   // index = i
  KahlerGradientMinus,  // index = i
};

struct NamedOperator {
  OperatorKind kind;
  int index = 0;  // p for forms, i for Kaehlerian gradients, else unused
  GroupId group;
  DominantWeight lambda;
  Weight epsilon;
  Rat expected_weight;
  bool endomorphism_type = false;  // eps = 0: same source and target bundle
  std::string display_name;
};

// Catalog entry for the named operator at dimension n (forms, spin
// operators) or complex dimension m (Kaehlerian gradients).
//
// Conventions:
//  - forms: n odd covers every 1 <= p <= n-1 (the middle degrees have
//    eps = 0); n even excludes the selfdual boundaries, where d (p = m-1, m)
//    or delta (p = m, m+1) is not a single generalized gradient;
//  - Dirac / Penrose twistor / Rarita-Schwinger on even n act on the
//    positive half-spinor bundle (the negative entry mirrors it with
//    -eps_m <-> +eps_m and the same weight);
//  - Kaehlerian gradients are evaluated on the staircase weight
//    (m-1, m-2, ..., 0), on which every +-eps_i is relevant.
// The entry's expected weight always equals the Casimir-path conformal
// weight; this cross-module identity is enforced by the test suite.
NamedOperator lookup(OperatorKind kind, int n_or_m, int index = 0);

// Names of catalog operators matching (group, lambda, eps), for decompose
// output.
std::vector<std::string> operator_names(const GroupId& id,
                                        const DominantWeight& lambda,
                                        const Weight& eps);

struct AdjointData {
  DominantWeight mu;   // lambda + eps
  Weight epsilon;      // -eps
  Rat weight;          // w_{-eps}(lambda + eps)
};

// The formal adjoint of the gradient (lambda, eps): the gradient
// (lambda + eps, -eps) with conformal weight w_{-eps}(lambda + eps).
AdjointData adjoint(const GroupDescriptor& g, const DominantWeight& lambda,
                    const Weight& eps);

// Whether the composition of the gradients (lambda, eps1) then
// (lambda + eps1, eps2) is a second-order conformally invariant operator:
// true iff w_{eps2}(lambda + eps1) = w_{eps1}(lambda) - 1.
bool second_order_invariant(const GroupDescriptor& g,
                            const DominantWeight& lambda, const Weight& eps1,
                            const Weight& eps2);

}  // namespace ggrad

#pragma once

#include <utility>
#include <vector>

#include "ggrad/bigint.hpp"
#include "ggrad/dominance.hpp"
#include "ggrad/group.hpp"

namespace ggrad {

// One irreducible component of tau (x) lambda: the gradient with target
// lambda + eps.
struct GradientTarget {
  Weight epsilon;
  DominantWeight mu;  // lambda + eps, in SU normal form
  Int dim;
  Rat conformal_weight;
};

struct Decomposition {
  GroupId group;
  DominantWeight lambda;
  std::vector<GradientTarget> targets;  // ascending lexicographic in epsilon
};

// The selection rule: eps is relevant iff lambda + eps is dominant, except
// eps = 0, which needs lambda - lambda_Sigma (odd SO/Spin) respectively
// lambda - lambda_tau (G2) dominant. Returned in ascending lexicographic
// order.
std::vector<Weight> relevant_weights(const GroupId& id,
                                     const DominantWeight& lambda);

bool is_relevant(const GroupId& id, const DominantWeight& lambda,
                 const Weight& eps);

// tau (x) lambda = (+) (lambda + eps) over the relevant weights, with
// dimensions from the Weyl formula and conformal weights from the Casimir
// path. Verifies the dimension sum rule and reports any mismatch as an
// internal-consistency error. For SU(m), m <= 2, distinct eps can share a
// target mu (E and its dual coincide there); the targets are kept separate
// and carry equal conformal weights.
Decomposition decompose(const GroupId& id, const DominantWeight& lambda);

// U/SU only: splits the targets by the sign class of eps.
//   class A: eps = +eps_i, the (0,1)-form-valued gradients
//            ("anti-holomorphic" in the skewed classical naming);
//   class B: eps = -eps_i, the (1,0)-form-valued gradients ("holomorphic").
// The sign-to-name map is kClassInfo below, the one place it is defined.
std::pair<std::vector<GradientTarget>, std::vector<GradientTarget>>
split_holomorphic(const Decomposition& d);

struct HolomorphicClassInfo {
  int eps_sign;
  const char* value_type;  // bundle the gradient's values live in
  const char* name;        // classical name
};
inline constexpr HolomorphicClassInfo kClassInfo[2] = {
    {+1, "type-(0,1)-valued", "anti-holomorphic"},
    {-1, "type-(1,0)-valued", "holomorphic"},
};

}  // namespace ggrad

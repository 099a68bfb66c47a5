#pragma once

#include <string>

#include "ggrad/dominance.hpp"
#include "ggrad/group.hpp"

namespace ggrad {

// Casimir number c(lambda) = <lambda, lambda + 2 delta>.
Rat casimir_number(const GroupDescriptor& g, const DominantWeight& lambda);

// Normalized Casimir c2(lambda) = c2_scale * c(lambda) / c(tau); the scale is
// chosen per group so that the conformal weights below reproduce the
// closed-form table exactly.
Rat casimir_normalized(const GroupDescriptor& g, const DominantWeight& lambda);

// The conformal weight as a pure algebraic expression in (lambda, eps),
// without any relevance precondition:
//   (c2_scale / 2) * (|eps|^2 + 2<lambda + delta, eps> - c(tau)) / c(tau).
// Used by the closed-form sweeps; lambda may be any weight vector (for SU any
// representative gives the same value).
Rat conformal_weight_formula(const GroupDescriptor& g, const Weight& lambda,
                             const Weight& eps);

// Conformal weight of the gradient with target lambda + eps. Computes both
// the Casimir-difference form 1/2 (c2(lambda+eps) - c2(lambda) - c2(tau)) and
// the expanded form above, checks they agree, and returns the value. Throws
// NotRelevantError when eps is not a relevant weight of lambda.
Rat conformal_weight(const GroupDescriptor& g, const DominantWeight& lambda,
                     const Weight& eps);

// The same value from the closed-form table row of the group, evaluated
// directly. For SU(m) the row formulas are evaluated at the traceless
// representative lambda - (sum lambda_i / m)(1,...,1) of the stored normal
// form; this is the representative at which the row agrees with the Casimir
// path (the su(m) form kills the central direction).
Rat conformal_weight_closed(const GroupDescriptor& g,
                            const DominantWeight& lambda, const Weight& eps);

// Label of the closed-form cell for eps: "w_0", "w_{2,+}", "w_{+,1,-}", ...
std::string epsilon_label(const GroupDescriptor& g, const Weight& eps);

// SO/Spin only: verifies the ordering chain of the conformal weights
//   w_{1,+} > ... > w_{m,+} > w_0 >= w_{m,-} > ... > w_{1,-}   (n odd)
// with w_0 = w_{m,-} iff lambda_m = 0, and for n even the interleaved chain
// with w_{m,+} - w_{m,-} = 2 lambda_m. Throws WrongGroupError elsewhere.
bool ordering_check(const GroupDescriptor& g, const DominantWeight& lambda);

}  // namespace ggrad

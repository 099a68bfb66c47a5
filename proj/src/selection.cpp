#include "ggrad/selection.hpp"

#include "ggrad/casimir.hpp"
#include "ggrad/errors.hpp"
#include "ggrad/oracle.hpp"

namespace ggrad {

namespace {

// eps = 0 needs lambda - lambda_Sigma (odd SO/Spin), respectively
// lambda - lambda_tau (G2), inside the dominant chamber. The shifted weight
// may leave the group's own weight lattice (lambda - lambda_Sigma of an
// integral SO weight is half-integral), so this checks the chamber
// inequalities, not integrality. For odd SO/Spin it reduces to lambda_m > 0.
bool zero_weight_relevant(const GroupDescriptor& g,
                          const DominantWeight& lambda) {
  if (!g.zero_exception_highest) return false;
  Weight shifted = weight_sub(lambda.weight(), *g.zero_exception_highest);
  for (size_t i = 0; i + 1 < shifted.size(); ++i)
    if (shifted[i] < shifted[i + 1]) return false;
  return shifted.back() >= Rat(0);
}

}  // namespace

std::vector<Weight> relevant_weights(const GroupId& id,
                                     const DominantWeight& lambda) {
  const GroupDescriptor& g = descriptor(id);
  if (!(lambda.group() == g.id))
    throw WrongGroupError("relevant_weights: lambda belongs to " +
                          group_name(lambda.group()) + ", not " +
                          group_name(g.id));
  std::vector<Weight> out;
  for (const auto& [eps, mult] : g.tau_weights) {
    (void)mult;
    if (is_zero_weight(eps)) {
      if (zero_weight_relevant(g, lambda)) out.push_back(eps);
    } else if (is_dominant(id, weight_add(lambda.weight(), eps))) {
      out.push_back(eps);
    }
  }
  return out;  // tau_weights are stored in ascending lexicographic order
}

bool is_relevant(const GroupId& id, const DominantWeight& lambda,
                 const Weight& eps) {
  const GroupDescriptor& g = descriptor(id);
  if (static_cast<int>(eps.size()) != g.rank)
    throw LengthError("is_relevant: eps length mismatch for " +
                      group_name(id));
  bool is_tau_weight = false;
  for (const auto& [tw, mult] : g.tau_weights) {
    (void)mult;
    if (tw == eps) {
      is_tau_weight = true;
      break;
    }
  }
  if (!is_tau_weight) return false;
  if (is_zero_weight(eps)) return zero_weight_relevant(g, lambda);
  return is_dominant(id, weight_add(lambda.weight(), eps));
}

Decomposition decompose(const GroupId& id, const DominantWeight& lambda) {
  const GroupDescriptor& g = descriptor(id);
  Decomposition d{id, lambda, {}};
  Int dim_sum(0);
  for (const Weight& eps : relevant_weights(id, lambda)) {
    DominantWeight mu = certify(id, weight_add(lambda.weight(), eps));
    Int dim = weyl_dim(g, mu);
    Rat w = conformal_weight(g, lambda, eps);
    dim_sum += dim;
    d.targets.push_back({eps, std::move(mu), std::move(dim), std::move(w)});
  }
  Int expected = Int(g.sum_tau_mult) * weyl_dim(g, lambda);
  if (dim_sum != expected)
    throw InternalInconsistencyError(
        group_name(id) + ": target dimensions for lambda = " +
        format_weight(lambda.weight()) + " sum to " + dim_sum.to_string() +
        ", expected " + expected.to_string());
  return d;
}

std::pair<std::vector<GradientTarget>, std::vector<GradientTarget>>
split_holomorphic(const Decomposition& d) {
  if (d.group.family != Family::U && d.group.family != Family::SU)
    throw WrongGroupError(
        "split_holomorphic applies to U(m)/SU(m) only, not " +
        group_name(d.group));
  std::pair<std::vector<GradientTarget>, std::vector<GradientTarget>> out;
  for (const GradientTarget& t : d.targets) {
    Rat sum;
    for (const Rat& x : t.epsilon) sum += x;
    if (sum.sgn() > 0)
      out.first.push_back(t);
    else
      out.second.push_back(t);
  }
  return out;
}

}  // namespace ggrad

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ggrad/weight.hpp"

namespace ggrad {

// The seven structure-group families. Spin7 is the Spin(7)-structure group of
// 8-manifolds (the tangent representation is the 8-dimensional spin
// representation); the spin cover of SO(n) is Family::Spin with parameter n.
enum class Family { SO, Spin, U, SU, Sp, Sp1Sp, G2, Spin7 };

struct GroupId {
  Family family;
  int param = 0;  // n for SO/Spin, m for U/SU/Sp/Sp1Sp, unused for G2/Spin7

  friend bool operator==(const GroupId& a, const GroupId& b) {
    return a.family == b.family && a.param == b.param;
  }
  friend bool operator<(const GroupId& a, const GroupId& b) {
    if (a.family != b.family) return a.family < b.family;
    return a.param < b.param;
  }
};

std::string group_name(const GroupId& id);  // "SO(7)", "Sp(1)·Sp(2)", ...

// How the Weyl group acts in coordinates; drives the dominant-chamber
// reflection and the dominance conditions.
enum class WeylKind {
  TypeA,       // permutations (U, SU)
  TypeB,       // signed permutations (odd SO/Spin, Spin7 structure)
  TypeC,       // signed permutations (Sp)
  TypeD,       // signed permutations, even sign changes (even SO/Spin)
  SpinTimesSp, // {±1} on slot 0 times type C on the rest
  DihedralG2,  // order-12 dihedral group, handled by simple reflections
};

// Immutable per-group algebraic data. All downstream computations read only
// this; the constants are calibrated so that the Casimir path reproduces the
// closed conformal-weight formulas exactly (see the regression tests).
struct GroupDescriptor {
  GroupId id;
  int rank = 0;      // coordinate dimension of weights
  int n = 0;         // dimension of the manifold = real dimension of tau
  long long dim_g = 0;  // dimension of the Lie algebra
  std::vector<std::vector<Rat>> gram;  // weight-space inner product
  Weight weyl_vector;                  // delta
  std::vector<Weight> positive_roots;
  std::vector<std::pair<Weight, int>> tau_weights;  // lex order, with mult
  Weight tau_highest;
  // Highest weight entering the zero-weight exception: the spinor weight for
  // odd SO/Spin, tau itself for G2. Unset elsewhere.
  std::optional<Weight> zero_exception_highest;
  // c^{Lambda^2}(lambda) = c2_scale * c(lambda) / c_tau. This equals
  // 2*dim_g/n except for Sp(m), whose closed-form table is normalized on the
  // standard complex-2m-dimensional representation (scale dim_g/m).
  Rat c2_scale;
  Rat c_tau;  // Casimir number of tau_highest, cached
  WeylKind weyl = WeylKind::TypeA;
  bool half_integral_ok = false;  // Spin(n) and the Spin(7) structure group
  int sum_tau_mult = 0;
};

// Returns the cached immutable descriptor; thread-safe. Rejects out-of-range
// size parameters (SO/Spin need n >= 3, U/Sp/Sp1Sp need m >= 1, SU needs
// m >= 2 since SU(1) is the trivial group and has no tau normalization).
const GroupDescriptor& descriptor(const GroupId& id);

// The gram bilinear form: a^T * gram * b, exact.
Rat inner(const GroupDescriptor& g, const Weight& a, const Weight& b);

}  // namespace ggrad

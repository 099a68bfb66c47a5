#pragma once

#include <string>

#include "ggrad/group.hpp"

namespace ggrad {

// A group-tagged weight certified dominant. Only certify() constructs one, so
// holding a DominantWeight is the proof that the dominance and integrality
// conditions of its group hold (and that an SU weight is in lambda_m = 0
// normal form).
class DominantWeight {
 public:
  const Weight& weight() const { return weight_; }
  const GroupId& group() const { return group_; }

  friend bool operator==(const DominantWeight& a, const DominantWeight& b) {
    return a.group_ == b.group_ && a.weight_ == b.weight_;
  }

 private:
  friend DominantWeight certify(const GroupId& id, const Weight& w);
  DominantWeight(GroupId g, Weight w)
      : group_(g), weight_(std::move(w)) {}
  GroupId group_;
  Weight weight_;
};

// True iff w satisfies the group's dominance and integrality conditions.
// Throws LengthError on a coordinate-count mismatch. For SU(m) any integer
// representative with non-increasing coordinates counts as dominant (the
// weight lattice is taken modulo (1,...,1)).
bool is_dominant(const GroupId& id, const Weight& w);

// Certifies w, translating SU weights to the lambda_m = 0 normal form first.
// Throws NotDominantError naming the first violated condition.
DominantWeight certify(const GroupId& id, const Weight& w);

// lambda - lambda_m * (1,...,1); identity for every family except SU.
Weight su_normal_form(const GroupId& id, const Weight& w);

// Human-readable dominance condition of the family, for CLI help and tables.
std::string dominance_condition(const GroupId& id);

}  // namespace ggrad

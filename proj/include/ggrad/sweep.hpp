#pragma once

#include <vector>

#include "ggrad/dominance.hpp"

namespace ggrad {

// Every dominant weight of the group with all |coordinates| <= max_coord;
// for the spin-type families the half-integral weights within the same bound
// are included unless half_integral is false. SU weights are produced in
// normal form. Deterministic (lexicographic) order.
std::vector<DominantWeight> dominant_sweep(const GroupId& id, int max_coord,
                                           bool half_integral = true);

// The group list the verification sweeps run over: SO/Spin up to max_n,
// the m-parametrized families up to max_m (SU from 2), G2 and the Spin(7)
// structure group.
std::vector<GroupId> standard_groups(int max_n, int max_m);

}  // namespace ggrad

#pragma once

#include <string>
#include <vector>

#include "verl/group.hpp"

namespace verl {

/// The quaternion group Q8 with labels e, z, i, zi, j, zj, k, zk (z = -1).
FiniteGroup quaternion_group();

struct BatteryMember {
  std::string name;
  Subgroup subgroup;  // H inside its parent G
  Subgroup kernel;    // K normal in H with H/K abelian
};

/**
 * The fixed set of (G, H, K) triples the verifier is exercised on. Covers
 * indices 1 through 4, abelian and nonabelian H, trivial and nontrivial K.
 */
std::vector<BatteryMember> standard_battery();

}  // namespace verl

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qfrenet/types.hpp"

namespace qfrenet {

// Random draws used by the invariant suite and by property tests.
CMatrix random_hermitian(std::mt19937_64& rng, int n);
CVector random_state(std::mt19937_64& rng, int n);
Vec3 random_unit3(std::mt19937_64& rng);
Vec3 random_vec3(std::mt19937_64& rng, double scale = 1.0);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Every module property check at reduced draw counts. `scale` multiplies the
// draw counts for longer runs.
std::vector<CheckResult> run_invariant_suite(std::uint64_t seed, int scale = 1);

}  // namespace qfrenet

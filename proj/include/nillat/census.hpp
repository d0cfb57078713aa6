#pragma once

#include <string>
#include <vector>

#include "nillat/classify.hpp"

namespace nillat {

// One isomorphism class found by a census sweep. Members are flattened
// parameter tuples, lexicographically sorted:
//   g5_2:  r1, r2
//   g5_4:  d00, d01, d02, d11, d12, d22, m
//   g5_6:  d00, d01, d02, d11, d12, d22, d33, m
//   g4xR:  p1, p2, p3
struct CensusClass {
  std::vector<IntVec> members;
};

struct CensusResult {
  std::string group;
  Int bound = 0;
  Int entry_bound = 0;
  std::size_t lattices = 0;
  std::vector<CensusClass> classes;
};

// Tabulates the classification at desk scale: enumerates valid parameters,
// builds and closure-checks every lattice, and groups parameters into
// isomorphism classes where the theory decides them (g5_2 by canonical
// divisor pairs, g5_6 by the scale relation, g4xR by parameter equality);
// g5_4 members are reported as individual representatives. `bound` caps the
// scale parameter (r2 for g5_2, m for the tuple families, p1 and p2 for
// g4xR); `entry_bound` caps the D entries and defaults to `bound` when zero.
CensusResult census(const std::string& group, const Int& bound, const Int& entry_bound = 0);

}  // namespace nillat

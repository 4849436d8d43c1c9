// Isolated singular points of Y = C^4 / (Γ ⋊ D_n) and their a_k tallies.
//
// A point fixed by some rotation σ̂^k is either on a 2-dimensional singular
// locus (its stabilizer contains an ι-type element) or isolated, in which
// case its stabilizer is a cyclic group of rotations of order k.
//
// Excluded points whose stabilizer is all of D_6 are the one exception that
// still counts: C^4 / W(G_2) has no symplectic resolution, so the
// terminalization keeps a singular point there, of type g_2.

#ifndef SYMORB_CENSUS_HPP_
#define SYMORB_CENSUS_HPP_

#include <map>
#include <string>
#include <vector>

#include "fujiki.hpp"

namespace symorb {

struct CensusOrbit {
  TorsionPoint representative;  // smallest point of the orbit
  std::size_t size = 0;
  std::vector<std::string> stabilizer;  // labels of stabilizing classes
};

struct CensusReport {
  std::map<unsigned, std::size_t> a;  // k -> number of isolated g_k points
  std::vector<CensusOrbit> isolated;
  std::vector<CensusOrbit> excluded;
  std::vector<CensusOrbit> g2_points;  // excluded orbits kept as g_2 points
  std::size_t two_dimensional_loci = 0;  // ι-type classes
  std::size_t rotation_fixed_points = 0; // distinct points over all σ̂^k, k != 0
  // Per k: enumerated fixed points and |det(σ̂^k - I)|.
  std::map<unsigned, std::pair<std::size_t, Integer>> fixed_point_law;
};

// Throws ModelError on a stabilizer that is neither ι-containing nor
// cyclic of the expected order.
CensusReport census(const TorusModel& model);

// |det(σ̂^k - I)|; throws std::invalid_argument when the matrix is singular.
Integer fixed_point_count(const TorusModel& model, unsigned k);

// Human-readable orbit log, one line per orbit.
std::string orbit_log(const CensusReport& report);

} // namespace symorb

#endif

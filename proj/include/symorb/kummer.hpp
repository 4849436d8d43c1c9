// Partial blowups of a singular Kummer surface T / <-1>: blowing up the
// A_1 points in Σ leaves π1(X_reg) = (Z/2)^4 / <Σ - p>.
//
// Two-torsion classes are indexed 0..15; class i is the vector whose
// coordinate j is bit j of i.  Subsets are 16-bit masks over these indices.

#ifndef SYMORB_KUMMER_HPP_
#define SYMORB_KUMMER_HPP_

#include <cstdint>
#include <map>

#include "lattice.hpp"

namespace symorb {

IntVector two_torsion_class(unsigned index);

struct BlowupSubset {
  std::uint16_t mask = 0;
  unsigned basepoint = 0;

  // Basepoint defaults to the lowest class in the mask.  Throws
  // std::invalid_argument for an empty mask or a basepoint outside Σ.
  static BlowupSubset from_mask(std::uint16_t mask);
  static BlowupSubset from_mask(std::uint16_t mask, unsigned basepoint);
};

// Λ' = 2Λ + Z{c - p : c in Σ}, with c, p the 0/1 lifts of the classes.
Lattice lemma_lattice(const BlowupSubset& subset);
// Λ / Λ'.
FiniteAbelianGroup pi1_via_lemma(const BlowupSubset& subset);
// (Z/2)^(4 - rank) with rank the F_2-rank of {c + p : c in Σ}.
FiniteAbelianGroup pi1_via_formula(const BlowupSubset& subset);
// The formula answer is the same for every basepoint in Σ.
bool basepoint_independence_check(std::uint16_t mask);

// Translation part of the group generated by the stabilizers t_{2x} τ of
// the points x over Σ, computed with Schreier generators.
Lattice kummer_nu_oracle(std::uint16_t mask);

struct SweepResult {
  std::size_t subsets = 0;
  std::size_t path_disagreements = 0;
  std::size_t basepoint_failures = 0;
  std::map<unsigned long, std::size_t> order_distribution;  // |π1| -> count
  std::size_t monotonicity_pairs = 0;
  std::size_t monotonicity_failures = 0;
  std::uint16_t first_failure = 0;

  bool ok() const { return path_disagreements == 0 && basepoint_failures == 0 && monotonicity_failures == 0; }
};

// All 65,535 nonempty subsets, plus `nested_pairs` random pairs Σ ⊆ Σ'
// checked for |π1(Σ')| dividing |π1(Σ)|.  Deterministic for a given seed,
// whatever the number of jobs.
SweepResult sweep(unsigned jobs = 1, std::size_t nested_pairs = 10000, std::uint64_t seed = 20240601);

} // namespace symorb

#endif

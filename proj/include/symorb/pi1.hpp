// Fundamental groups of regular parts as quotients G / N_U, where N_U is the
// normal subgroup generated by stabilizers of points over U.
//
// Torus cases work entirely in Γ-coordinates, where Γ is Z^8:
//   Γ_k = {γ : ι̂σ̂^k γ = -γ},  Γ' = Σ_k Γ_k,  π1 = Γ / Γ'.

#ifndef SYMORB_PI1_HPP_
#define SYMORB_PI1_HPP_

#include <string>
#include <vector>

#include "fujiki.hpp"

namespace symorb {

// t_γ ι̂σ̂^k together with the point γ/2 it fixes.
struct Witness {
  unsigned k = 0;
  IntVector gamma;
  AffineIsometry element;
  RatVector point;
};

struct NUDecomposition {
  Lattice gamma_prime;
  std::vector<Lattice> gamma_k;  // indexed by k = 0..n-1
  std::vector<Witness> witnesses;
};

// Γ ∩ (-1)-eigenspace of ι̂σ̂^k.
Lattice eigen_sublattice(const TorusModel& model, unsigned k);

// φ(L) for φ(x, y) = (x, σ y).  Throws ModelError if φ does not preserve Γ
// or L is not inside Γ.
Lattice apply_phi(const TorusModel& model, const Lattice& lattice);

// Γ_k and Γ' without verification.
NUDecomposition decompose(const TorusModel& model);

// The four verification steps.  Each throws ClaimViolation carrying the
// offending lattice vector.
//   witnesses:  every t_γ ι̂σ̂^k fixes γ/2 (and γ lies in Γ_k)
//   direct sum: Γ' = Γ_0 + Γ_1, Γ_0 ∩ Γ_1 = 0, σ̂^l Γ_k ⊆ Γ_{k-2l},
//               γ + σ̂^l γ ∈ Γ_{k-l}
//   phi:        φ(Γ) = Γ, Γ_1 = φ(Γ_0)
//   normality:  σ̂ Γ' = Γ' = ι̂ Γ'
void check_witnesses(const TorusModel& model, const NUDecomposition& nu);
void check_direct_sum(const TorusModel& model, const NUDecomposition& nu);
void check_phi(const TorusModel& model, const NUDecomposition& nu);
void check_normality(const TorusModel& model, const NUDecomposition& nu);

// decompose() followed by all four checks.
NUDecomposition compute_gamma_prime(const TorusModel& model);

FiniteAbelianGroup pi1_torus(const TorusModel& model);

// G / <ιH>.  Throws std::logic_error if the generated subgroup is not normal
// or the quotient is not abelian.
FiniteAbelianGroup pi1_k3(const AbstractGroup& group);
// The subgroup <ιH> as sorted element indices.
std::vector<std::size_t> coset_generated_subgroup(const AbstractGroup& group);

// Translation part N ∩ Z^d of the subgroup N of Z^d ⋊ GL_d(Z) generated by
// the affine maps `generators` (integral translations), via Schreier
// generators.  `point_group_image` receives the linear parts of N.
Lattice translation_subgroup(std::size_t dim, const std::vector<AffineIsometry>& generators,
                             std::vector<IntMatrix>* point_group_image = nullptr);

struct OracleResult {
  Lattice lattice;
  std::size_t points_scanned = 0;
  std::size_t stabilizer_elements = 0;
  bool surjects_onto_point_group = false;
};

// Rebuilds Γ' from scratch: scans every torsion point of the model's
// denominator bound, collects the stabilizer elements with an ι-part and
// returns the translation subgroup of the group they generate.
OracleResult nu_oracle(const TorusModel& model);

} // namespace symorb

#endif

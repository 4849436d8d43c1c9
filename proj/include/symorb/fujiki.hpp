// Concrete models for Fujiki's construction Y = (S x S) / (H ⋊ <ι>).
//
// Torus cases: S = C^2 / Λ with Λ = Z^4, H = H' x <σ> with H' a group of
// σ-fixed torsion translations.  Lifting to C^4 gives Y = C^4 / (Γ ⋊ D_n)
// where Γ ⊃ Λ^2 is the overlattice generated by the (γ, -γ), γ in H'.
// Everything downstream works in Γ-coordinates, where σ̂, ι̂ are integral.
//
// K3 cases: only the abstract group H ⋊ <ι> is modeled.

#ifndef SYMORB_FUJIKI_HPP_
#define SYMORB_FUJIKI_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abelian_group.hpp"
#include "crystal_model.hpp"
#include "lattice.hpp"

namespace symorb {

enum class SurfaceKind { k3, torus };

struct FujikiCase {
  SurfaceKind kind = SurfaceKind::torus;
  unsigned linear_order = 1;      // torus: n, the order of σ
  unsigned translation_rank = 0;  // torus: m, H' = (Z/p)^m
  IntVector k3_factors;           // K3: cyclic factors of H
  std::string label;              // catalog key, e.g. "t-Z2xZ4", "k3-Z3xZ3"
  // False for the n = 2 torus family, whose terminalization is not
  // primitively symplectic; such cases are buildable but never tabulated.
  bool primitive = true;

  // Isomorphism type of H.
  FiniteAbelianGroup h_group() const;
  // p with H' = (Z/p)^m (torus only; 1 when m = 0).
  unsigned translation_prime() const;
};

// Every catalog entry, torus cases first, in a fixed order.
const std::vector<FujikiCase>& catalog();
// The seven primitive torus cases in table order.
std::vector<FujikiCase> torus_table_cases();
std::vector<FujikiCase> k3_cases();
// Accepts canonical labels and the "^" spellings ("k3-Z2^3", "t-Z3^2").
std::optional<FujikiCase> find_case(std::string_view label);
std::vector<std::string> catalog_labels();

// Action of σ on Λ = Z^4 (columns are images of e_1..e_4) for n in {2,3,4,6}.
IntMatrix linear_part(unsigned n);

// All v in ((1/order) Z / Z)^d with σ v = v mod Z^d, lexicographically sorted
// (includes 0).
std::vector<RatVector> sigma_fixed_torsion(const IntMatrix& sigma, unsigned order);

struct TorusModel {
  FujikiCase fcase;
  IntMatrix sigma;                          // on Λ
  std::vector<RatVector> hprime_generators; // in Λ-coordinates, in [0,1)^4
  Integer hprime_order = 1;
  Lattice gamma_chart;                      // Γ inside Q^8 (Λ^2 chart)
  IntMatrix sigma_hat;                      // on Γ-coordinates
  IntMatrix iota_hat;
  ScaledMatrix phi_hat;                     // (x, y) -> (x, σ y) rebased
  CrystalModel group;                       // D_n: "s^k" and "i*s^k"

  unsigned n() const { return fcase.linear_order; }
  std::size_t rotation_index(unsigned k) const { return 2 * (k % n()); }
  std::size_t reflection_index(unsigned k) const { return 2 * (k % n()) + 1; }
  // ι̂ σ̂^k
  const IntMatrix& reflection(unsigned k) const { return group.element(reflection_index(k)).map.linear; }
  const IntMatrix& rotation(unsigned k) const { return group.element(rotation_index(k)).map.linear; }

  // Γ-coordinates <-> Λ^2 chart.
  RatVector to_chart(const IntVector& gamma_coords) const;
  RatVector to_chart(const RatVector& gamma_coords) const;
  std::optional<IntVector> to_gamma(const RatVector& chart_vector) const;
  // Rewrites a chart-coordinate linear map in Γ-coordinates.
  ScaledMatrix rebase(const IntMatrix& chart_map) const;
};

// Builds the model with the default H' generators.
TorusModel build_torus_model(const FujikiCase& fcase);
// Builds the model with explicitly chosen H' generators (Λ-coordinates).
TorusModel build_torus_model(const FujikiCase& fcase, const std::vector<RatVector>& hprime_generators);

// Default generators: the fixed preference (e1+e2)/2, (e3+e4)/2 for n = 4,
// then the lexicographically first σ-fixed points of order p extending the
// span, until m independent generators are chosen.
std::vector<RatVector> default_hprime_generators(const FujikiCase& fcase);

// One generating tuple for every subgroup of σ-fixed p-torsion isomorphic to
// (Z/p)^m, lexicographically first per subgroup.
std::vector<std::vector<RatVector>> hprime_choices(const FujikiCase& fcase);

// The Kummer setting: Z^4 with point group {I, -I} ("id", "tau").
CrystalModel kummer_model();

// Finite group G = H ⋊ <ι> with ι h ι^-1 = h^-1, as a multiplication table.
struct AbstractGroup {
  std::vector<std::string> labels;
  std::vector<std::size_t> table;
  std::vector<std::size_t> h_elements;     // H
  std::vector<std::size_t> iota_coset;     // h ι for h in h_elements, same order
  std::size_t identity = 0;
  std::size_t iota = 0;

  std::size_t order() const { return labels.size(); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table[a * order() + b]; }
  std::size_t inverse(std::size_t a) const;
  bool is_abelian() const;
};

AbstractGroup build_k3_group(const FujikiCase& fcase);
AbstractGroup build_semidirect_with_inversion(const IntVector& h_factors);

} // namespace symorb

#endif

// Lattices in Q^d: free abelian subgroups given by linearly independent
// basis rows, kept in a canonical form so that equality is structural.

#ifndef SYMORB_LATTICE_HPP_
#define SYMORB_LATTICE_HPP_

#include <optional>
#include <vector>

#include "abelian_group.hpp"
#include "int_matrix.hpp"
#include "rat_vector.hpp"

namespace symorb {

class Lattice {
public:
  // The zero lattice in Q^0.
  Lattice() = default;

  // Lattice generated by the rows of `generators` / denominator.  The rows
  // may be dependent; the result has rank(generators) basis rows.
  static Lattice generated_by(const IntMatrix& generators, const Integer& denominator = 1);
  static Lattice generated_by(const std::vector<RatVector>& generators, std::size_t dim);
  static Lattice standard(std::size_t dim);
  static Lattice zero(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return numerators_.rows(); }
  bool is_full_rank() const { return rank() == dim_; }
  bool is_integral() const { return denominator_ == 1; }

  // Canonical basis: numerators in row HNF over a minimal common denominator.
  const IntMatrix& numerators() const { return numerators_; }
  const Integer& denominator() const { return denominator_; }
  std::vector<RatVector> basis() const;
  RatVector basis_vector(std::size_t i) const;

  // Integer coordinates of v in the canonical basis, if v is in the lattice.
  std::optional<IntVector> coordinates(const RatVector& v) const;
  bool contains(const RatVector& v) const { return coordinates(v).has_value(); }
  bool contains(const IntVector& v) const { return contains(RatVector(v)); }
  bool contains(const Lattice& sub) const;

  // Image under x -> m x.
  Lattice image(const IntMatrix& m) const;

  bool operator==(const Lattice&) const = default;

  std::string str() const;

private:
  std::size_t dim_ = 0;
  Integer denominator_ = 1;
  IntMatrix numerators_;
};

// Saturated basis of {x in Z^cols : m x = 0}.
Lattice kernel_basis(const IntMatrix& m);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_sum(const std::vector<Lattice>& parts);

// a ∩ b for lattices of the same dimension.
Lattice lattice_intersection(const Lattice& a, const Lattice& b);

// Coordinates of sub's basis in lattice's basis (rank(sub) x rank(lattice)).
// Throws ContainmentError naming the first basis vector of `sub` that is not
// an integral combination.
IntMatrix relative_coordinates(const Lattice& lattice, const Lattice& sub);

// lattice / sub as invariant factors plus free rank rank(lattice) - rank(sub).
FiniteAbelianGroup quotient(const Lattice& lattice, const Lattice& sub);

// Index [lattice : sub] for equal ranks.
Integer index(const Lattice& lattice, const Lattice& sub);

} // namespace symorb

#endif

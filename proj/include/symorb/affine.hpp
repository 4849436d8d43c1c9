// Affine maps x -> A x + t of Q^d with integral linear part, torsion points
// of the torus R^d / Z^d, and fixed loci of affine maps on that torus.
//
// All coordinates are lattice coordinates: the lattice is Z^d and every
// point-group matrix is integral.

#ifndef SYMORB_AFFINE_HPP_
#define SYMORB_AFFINE_HPP_

#include <compare>
#include <string>
#include <vector>

#include "int_matrix.hpp"
#include "rat_vector.hpp"

namespace symorb {

// A point of R^d / Z^d with rational coordinates, stored reduced into [0,1).
class TorsionPoint {
public:
  TorsionPoint() = default;
  explicit TorsionPoint(const RatVector& v) : coords_(v.reduced_mod_one()) {}

  const RatVector& coordinates() const { return coords_; }
  std::size_t dim() const { return coords_.size(); }
  // Order of the point in the torus.
  const Integer& order() const { return coords_.denominator(); }
  std::string str() const { return coords_.str(); }

  friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;
  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;

private:
  RatVector coords_;
};

struct AffineIsometry {
  IntMatrix linear;
  RatVector translation;

  static AffineIsometry identity(std::size_t dim);
  static AffineIsometry linear_map(IntMatrix m);
  static AffineIsometry translation_by(RatVector t);

  std::size_t dim() const { return linear.rows(); }
  RatVector operator()(const RatVector& x) const;
  TorsionPoint operator()(const TorsionPoint& p) const;

  // Same map modulo integral translations: translation reduced into [0,1).
  AffineIsometry reduced() const;
  bool is_identity() const;
  bool is_translation() const;

  std::string str() const;
  bool operator==(const AffineIsometry&) const = default;
};

// (A,t) o (B,s) = (AB, As + t), translation reduced modulo Z^d: the product
// of the two classes in the point group.
AffineIsometry compose(const AffineIsometry& g, const AffineIsometry& h);
// The exact composite map of Q^d, no reduction.
AffineIsometry compose_exact(const AffineIsometry& g, const AffineIsometry& h);
// Exact inverse; throws std::domain_error if the linear part has no
// integral inverse.
AffineIsometry inverse(const AffineIsometry& g);

// Fix(g) = {x mod Z^d : A x + t = x mod Z^d}.
//
// Computed through the Smith form U (A - I) V = D: in the coordinates
// y = V^-1 x the condition splits into d_i y_i = -(U t)_i (mod 1) for the
// nonzero d_i, a solvability condition (U t)_i in Z on the zero rows, and
// free coordinates on the zero columns.
struct FixedLocus {
  enum class Kind { empty, finite, positive_dimensional };

  struct Component {
    TorsionPoint particular;
    std::vector<RatVector> directions;  // basis of ker(A - I), integral
  };

  Kind kind = Kind::empty;
  std::size_t dim = 0;
  std::vector<TorsionPoint> points;     // finite kind, sorted
  std::vector<Component> components;    // positive-dimensional kind

  // Exact membership data: y = chart x; a point lies on component c iff the
  // constrained coordinates of chart (x - c.particular) are integers.
  IntMatrix chart;
  std::vector<std::size_t> constrained;

  bool empty() const { return kind == Kind::empty; }
  std::size_t dimension() const {
    return kind == Kind::positive_dimensional ? components.front().directions.size() : 0;
  }
};

FixedLocus fixed_locus(const AffineIsometry& g);
bool locus_contains(const FixedLocus& locus, const TorsionPoint& p);

} // namespace symorb

#endif

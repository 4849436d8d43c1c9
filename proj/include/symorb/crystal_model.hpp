// A crystallographic group Z^d ⋊ P acting on the torus R^d / Z^d, given by
// its finite point group P (elements stored modulo integral translations).

#ifndef SYMORB_CRYSTAL_MODEL_HPP_
#define SYMORB_CRYSTAL_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include "affine.hpp"

namespace symorb {

struct PointGroupElement {
  AffineIsometry map;   // translation reduced into [0,1)
  std::string label;    // e.g. "s^2", "i*s^1"
  bool swap_part = false;  // true for the ι-type coset
};

class CrystalModel {
public:
  CrystalModel() = default;
  // Validates closure, identity, integral invertibility and builds the
  // multiplication table.  Throws ModelError on violation.
  CrystalModel(std::size_t dim, std::vector<PointGroupElement> elements, Integer denominator_bound);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const PointGroupElement& element(std::size_t i) const { return elements_[i]; }
  const std::vector<PointGroupElement>& elements() const { return elements_; }
  std::size_t identity_index() const { return identity_; }
  // Index of element(a) o element(b).
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse_index(std::size_t a) const { return inverse_[a]; }
  std::optional<std::size_t> index_of(const AffineIsometry& g) const;

  // Every torsion point handed to orbit/stabilizer must have an order
  // dividing this bound.
  const Integer& denominator_bound() const { return bound_; }
  void check_point(const TorsionPoint& p) const;

private:
  std::size_t dim_ = 0;
  std::vector<PointGroupElement> elements_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
  Integer bound_ = 1;
};

// Orbit of p under the point group acting on R^d / Z^d, sorted.
std::vector<TorsionPoint> orbit(const CrystalModel& model, const TorsionPoint& p);

// Indices of point-group classes g with g(p) = p modulo Z^d.
std::vector<std::size_t> stabilizer_indices(const CrystalModel& model, const TorsionPoint& p);

// The honest affine maps t_γ o g (γ integral) fixing the representative
// of p in [0,1)^d, one per stabilizing class.
std::vector<AffineIsometry> stabilizer(const CrystalModel& model, const TorsionPoint& p);

} // namespace symorb

#endif

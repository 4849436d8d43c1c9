#ifndef SYMORB_ABELIAN_GROUP_HPP_
#define SYMORB_ABELIAN_GROUP_HPP_

#include <string>

#include "integer.hpp"

namespace symorb {

// Z^free_rank (+) Z/d_1 (+) ... (+) Z/d_r with 1 < d_1 | d_2 | ... | d_r.
class FiniteAbelianGroup {
public:
  FiniteAbelianGroup() = default;
  // Accepts any list of non-negative cyclic orders; 0 entries count as
  // free factors and 1 entries are dropped.  The result is put into
  // invariant-factor form.
  static FiniteAbelianGroup from_cyclic_orders(const IntVector& orders);
  static FiniteAbelianGroup trivial() { return {}; }

  const IntVector& invariant_factors() const { return factors_; }
  std::size_t free_rank() const { return free_rank_; }
  bool is_trivial() const { return factors_.empty() && free_rank_ == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  // Order of the torsion part.
  Integer torsion_order() const;
  // Number of elements x with k x = 0 in the torsion part.
  Integer count_killed_by(const Integer& k) const;

  // "{1}", "Z/2", "(Z/2)^2", "Z/2 x Z/4", "Z^3 x Z/2", ...
  std::string str() const;
  // Same, with Unicode superscript exponents: "(Z/3)²".
  std::string pretty() const;

  bool operator==(const FiniteAbelianGroup&) const = default;

private:
  IntVector factors_;
  std::size_t free_rank_ = 0;
};

} // namespace symorb

#endif

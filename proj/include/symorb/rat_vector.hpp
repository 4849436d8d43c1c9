// Rational vectors stored as integer numerators over one common denominator.

#ifndef SYMORB_RAT_VECTOR_HPP_
#define SYMORB_RAT_VECTOR_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>

#include "int_matrix.hpp"
#include "integer.hpp"

namespace symorb {

// Invariant: denominator >= 1 and gcd(numerators..., denominator) == 1, so
// every rational vector has exactly one representation.
class RatVector {
public:
  RatVector() = default;
  explicit RatVector(std::size_t dim) : num_(dim), den_(1) {}
  explicit RatVector(IntVector numerators, Integer denominator = 1);

  static RatVector from_fractions(std::initializer_list<std::pair<long, long>> entries);

  std::size_t size() const { return num_.size(); }
  const IntVector& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  // Canonicalized, so get_den() is the true denominator of the entry.
  mpq_class operator[](std::size_t i) const {
    mpq_class q(num_[i], den_);
    q.canonicalize();
    return q;
  }

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }
  // Requires is_integral().
  const IntVector& as_integers() const;

  // Representative with every coordinate in [0, 1).
  RatVector reduced_mod_one() const;

  std::string str() const;

  friend bool operator==(const RatVector&, const RatVector&) = default;
  // Lexicographic on the rational coordinate values.
  friend std::strong_ordering operator<=>(const RatVector& a, const RatVector& b);

private:
  void normalize();

  IntVector num_;
  Integer den_ = 1;
};

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a);
RatVector operator*(const Integer& k, const RatVector& a);
// Division by a positive integer.
RatVector operator/(const RatVector& a, const Integer& k);
RatVector mat_vec(const IntMatrix& m, const RatVector& x);

std::ostream& operator<<(std::ostream& os, const RatVector& v);

} // namespace symorb

#endif

#include "symorb/rat_vector.hpp"

#include <ostream>
#include <stdexcept>

#include "symorb/error.hpp"

namespace symorb {

RatVector::RatVector(IntVector numerators, Integer denominator)
    : num_(std::move(numerators)), den_(std::move(denominator)) {
  if (den_ == 0)
    throw std::domain_error("RatVector: zero denominator");
  normalize();
}

RatVector RatVector::from_fractions(std::initializer_list<std::pair<long, long>> entries) {
  Integer den = 1;
  for (const auto& [p, q] : entries)
    den = lcm_of(den, Integer(q));
  IntVector num;
  for (const auto& [p, q] : entries)
    num.push_back(Integer(p) * (den / q));
  return RatVector(std::move(num), den);
}

void RatVector::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (Integer& x : num_)
      x = -x;
  }
  Integer g = den_;
  for (const Integer& x : num_) {
    if (g == 1)
      break;
    g = gcd_of(g, x);
  }
  if (g != 1) {
    den_ /= g;
    for (Integer& x : num_)
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

bool RatVector::is_zero() const {
  for (const Integer& x : num_)
    if (x != 0)
      return false;
  return true;
}

const IntVector& RatVector::as_integers() const {
  if (den_ != 1)
    throw std::domain_error("RatVector " + str() + " is not integral");
  return num_;
}

RatVector RatVector::reduced_mod_one() const {
  IntVector r(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i)
    r[i] = floor_mod(num_[i], den_);
  return RatVector(std::move(r), den_);
}

std::string RatVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (i)
      s += ", ";
    s += mpq_class((*this)[i]).get_str();
  }
  return s + ")";
}

std::strong_ordering operator<=>(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size())
    return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a.num_[i] * b.den_, b.num_[i] * a.den_);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("RatVector sum: dimensions differ");
  Integer den = lcm_of(a.denominator(), b.denominator());
  Integer fa = den / a.denominator(), fb = den / b.denominator();
  IntVector num(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    num[i] = a.numerators()[i] * fa + b.numerators()[i] * fb;
  return RatVector(std::move(num), den);
}

RatVector operator-(const RatVector& a) {
  IntVector num(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    num[i] = -a.numerators()[i];
  return RatVector(std::move(num), a.denominator());
}

RatVector operator-(const RatVector& a, const RatVector& b) { return a + (-b); }

RatVector operator*(const Integer& k, const RatVector& a) {
  IntVector num(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    num[i] = k * a.numerators()[i];
  return RatVector(std::move(num), a.denominator());
}

RatVector operator/(const RatVector& a, const Integer& k) {
  if (k <= 0)
    throw std::domain_error("RatVector division by a non-positive integer");
  return RatVector(a.numerators(), a.denominator() * k);
}

RatVector mat_vec(const IntMatrix& m, const RatVector& x) {
  return RatVector(mat_vec(m, x.numerators()), x.denominator());
}

std::ostream& operator<<(std::ostream& os, const RatVector& v) { return os << v.str(); }

} // namespace symorb

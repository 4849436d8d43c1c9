#include "symorb/abelian_group.hpp"

#include <map>
#include <stdexcept>

#include "symorb/int_matrix.hpp"
#include "symorb/normal_form.hpp"

namespace symorb {

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(const IntVector& orders) {
  FiniteAbelianGroup g;
  IntVector finite;
  for (const Integer& d : orders) {
    if (d < 0)
      throw std::invalid_argument("negative cyclic order");
    if (d == 0)
      ++g.free_rank_;
    else if (d != 1)
      finite.push_back(d);
  }
  // Invariant factors of a diagonal relation matrix.
  IntMatrix diag(finite.size(), finite.size());
  for (std::size_t i = 0; i < finite.size(); ++i)
    diag(i, i) = finite[i];
  for (const Integer& d : snf(diag).invariant_factors())
    if (d != 1)
      g.factors_.push_back(d);
  return g;
}

Integer FiniteAbelianGroup::torsion_order() const {
  Integer n = 1;
  for (const Integer& d : factors_)
    n *= d;
  return n;
}

Integer FiniteAbelianGroup::count_killed_by(const Integer& k) const {
  Integer n = 1;
  for (const Integer& d : factors_)
    n *= gcd_of(d, k);
  return n;
}

namespace {

std::string superscript(std::size_t n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n))
    s += digits[c - '0'];
  return s;
}

std::string render(const IntVector& factors, std::size_t free_rank, bool unicode) {
  if (factors.empty() && free_rank == 0)
    return "{1}";
  auto power = [&](std::string base, std::size_t e) {
    if (e == 1)
      return base;
    return (base.size() > 1 ? "(" + base + ")" : base) + (unicode ? superscript(e) : "^" + std::to_string(e));
  };
  std::string s;
  if (free_rank)
    s = power("Z", free_rank);
  // Group repeated factors: (Z/2)^2 x Z/4.
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i])
      ++j;
    if (!s.empty())
      s += " x ";
    s += power("Z/" + factors[i].get_str(), j - i);
    i = j;
  }
  return s;
}

} // namespace

std::string FiniteAbelianGroup::str() const { return render(factors_, free_rank_, false); }
std::string FiniteAbelianGroup::pretty() const { return render(factors_, free_rank_, true); }

} // namespace symorb

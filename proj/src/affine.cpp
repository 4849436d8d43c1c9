#include "symorb/affine.hpp"

#include <algorithm>
#include <stdexcept>

#include "symorb/error.hpp"
#include "symorb/normal_form.hpp"

namespace symorb {

AffineIsometry AffineIsometry::identity(std::size_t dim) {
  return {IntMatrix::identity(dim), RatVector(dim)};
}

AffineIsometry AffineIsometry::linear_map(IntMatrix m) {
  if (!m.is_square())
    throw DimensionMismatch("linear part must be square");
  std::size_t d = m.rows();
  return {std::move(m), RatVector(d)};
}

AffineIsometry AffineIsometry::translation_by(RatVector t) {
  std::size_t d = t.size();
  return {IntMatrix::identity(d), std::move(t)};
}

RatVector AffineIsometry::operator()(const RatVector& x) const {
  return mat_vec(linear, x) + translation;
}

TorsionPoint AffineIsometry::operator()(const TorsionPoint& p) const {
  return TorsionPoint((*this)(p.coordinates()));
}

AffineIsometry AffineIsometry::reduced() const { return {linear, translation.reduced_mod_one()}; }

bool AffineIsometry::is_identity() const {
  return linear == IntMatrix::identity(dim()) && translation.is_zero();
}

bool AffineIsometry::is_translation() const { return linear == IntMatrix::identity(dim()); }

std::string AffineIsometry::str() const { return "{" + linear.str() + " | " + translation.str() + "}"; }

AffineIsometry compose_exact(const AffineIsometry& g, const AffineIsometry& h) {
  if (g.dim() != h.dim())
    throw DimensionMismatch("compose: dimensions differ");
  return {g.linear * h.linear, mat_vec(g.linear, h.translation) + g.translation};
}

AffineIsometry compose(const AffineIsometry& g, const AffineIsometry& h) {
  return compose_exact(g, h).reduced();
}

AffineIsometry inverse(const AffineIsometry& g) {
  ScaledMatrix inv = rational_inverse(g.linear);
  if (inv.denominator != 1)
    throw std::domain_error("linear part " + g.linear.str() + " has no integral inverse");
  return {inv.numerator, -mat_vec(inv.numerator, g.translation)};
}

namespace {

// Visits every tuple (j_0, ..., j_{k-1}) with 0 <= j_i < bounds[i].
template <class F>
void for_each_index(const std::vector<Integer>& bounds, F&& visit) {
  std::vector<Integer> j(bounds.size());
  for (;;) {
    visit(j);
    std::size_t i = 0;
    while (i < j.size()) {
      if (++j[i] < bounds[i])
        break;
      j[i] = 0;
      ++i;
    }
    if (i == j.size())
      return;
  }
}

} // namespace

FixedLocus fixed_locus(const AffineIsometry& g) {
  const std::size_t d = g.dim();
  FixedLocus locus;
  locus.dim = d;
  SmithForm s = snf(g.linear - IntMatrix::identity(d));
  // c = -U t, the right-hand side in y coordinates.
  RatVector c = -mat_vec(s.left, g.translation);
  for (std::size_t i = s.rank; i < d; ++i)
    if (c[i].get_den() != 1)
      return locus;  // unsolvable: empty

  ScaledMatrix vinv = rational_inverse(s.right);
  locus.chart = vinv.numerator;  // V is unimodular, so the denominator is 1
  std::vector<Integer> counts;
  Integer total = 1;
  for (std::size_t i = 0; i < s.rank; ++i) {
    locus.constrained.push_back(i);
    counts.push_back(s.diagonal(i, i));
    total *= s.diagonal(i, i);
  }
  if (total > 1000000)
    throw std::length_error("fixed_locus: " + total.get_str() + " components, refusing to enumerate");

  std::vector<TorsionPoint> particulars;
  for_each_index(counts, [&](const std::vector<Integer>& j) {
    std::vector<mpq_class> y(d);
    for (std::size_t i = 0; i < s.rank; ++i)
      y[i] = (c[i] + j[i]) / mpq_class(s.diagonal(i, i));
    Integer den = 1;
    for (const mpq_class& q : y)
      den = lcm_of(den, q.get_den());
    IntVector yn(d);
    for (std::size_t i = 0; i < d; ++i)
      yn[i] = y[i].get_num() * (den / y[i].get_den());
    particulars.emplace_back(mat_vec(s.right, RatVector(yn, den)));
  });

  if (s.rank == d) {
    locus.kind = FixedLocus::Kind::finite;
    std::sort(particulars.begin(), particulars.end());
    locus.points = std::move(particulars);
    return locus;
  }
  locus.kind = FixedLocus::Kind::positive_dimensional;
  std::vector<RatVector> directions;
  for (std::size_t j = s.rank; j < d; ++j)
    directions.emplace_back(s.right.col(j));
  for (TorsionPoint& p : particulars)
    locus.components.push_back({std::move(p), directions});
  return locus;
}

bool locus_contains(const FixedLocus& locus, const TorsionPoint& p) {
  if (p.dim() != locus.dim)
    throw DimensionMismatch("locus_contains: dimension mismatch");
  switch (locus.kind) {
  case FixedLocus::Kind::empty:
    return false;
  case FixedLocus::Kind::finite:
    return std::binary_search(locus.points.begin(), locus.points.end(), p);
  case FixedLocus::Kind::positive_dimensional:
    for (const auto& comp : locus.components) {
      RatVector y = mat_vec(locus.chart, p.coordinates() - comp.particular.coordinates());
      bool on = true;
      for (std::size_t i : locus.constrained)
        if (y[i].get_den() != 1) {
          on = false;
          break;
        }
      if (on)
        return true;
    }
    return false;
  }
  return false;
}

} // namespace symorb

#include "symorb/crystal_model.hpp"

#include <algorithm>
#include <stdexcept>

#include "symorb/error.hpp"

namespace symorb {

CrystalModel::CrystalModel(std::size_t dim, std::vector<PointGroupElement> elements,
                           Integer denominator_bound)
    : dim_(dim), elements_(std::move(elements)), bound_(std::move(denominator_bound)) {
  if (elements_.empty())
    throw ModelError("point group is empty");
  for (auto& e : elements_) {
    if (e.map.dim() != dim_ || e.map.translation.size() != dim_)
      throw ModelError("point-group element " + e.label + " has wrong dimension");
    e.map = e.map.reduced();
  }
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (elements_[i].map == elements_[j].map)
        throw ModelError("point-group elements " + elements_[j].label + " and " + elements_[i].label +
                         " coincide");
  auto id = index_of(AffineIsometry::identity(dim_));
  if (!id)
    throw ModelError("point group does not contain the identity");
  identity_ = *id;

  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto c = index_of(compose(elements_[a].map, elements_[b].map));
      if (!c)
        throw ModelError("point group is not closed: " + elements_[a].label + " * " + elements_[b].label);
      table_[a * n + b] = *c;
    }
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    try {
      (void)inverse(elements_[a].map);
    } catch (const std::domain_error& e) {
      throw ModelError("point-group element " + elements_[a].label + ": " + e.what());
    }
    for (std::size_t b = 0; b < n; ++b)
      if (multiply(a, b) == identity_)
        inverse_[a] = b;
  }
}

std::optional<std::size_t> CrystalModel::index_of(const AffineIsometry& g) const {
  AffineIsometry r = g.reduced();
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].map == r)
      return i;
  return std::nullopt;
}

void CrystalModel::check_point(const TorsionPoint& p) const {
  if (p.dim() != dim_)
    throw DimensionMismatch("torsion point has dimension " + std::to_string(p.dim()) + ", model has " +
                            std::to_string(dim_));
  if (!mpz_divisible_p(bound_.get_mpz_t(), p.order().get_mpz_t()))
    throw std::invalid_argument("torsion point " + p.str() + " is finer than the model bound 1/" +
                                bound_.get_str());
}

std::vector<TorsionPoint> orbit(const CrystalModel& model, const TorsionPoint& p) {
  model.check_point(p);
  std::vector<TorsionPoint> pts;
  pts.reserve(model.order());
  for (const auto& e : model.elements())
    pts.push_back(e.map(p));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<std::size_t> stabilizer_indices(const CrystalModel& model, const TorsionPoint& p) {
  model.check_point(p);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < model.order(); ++i)
    if (model.element(i).map(p) == p)
      idx.push_back(i);
  return idx;
}

std::vector<AffineIsometry> stabilizer(const CrystalModel& model, const TorsionPoint& p) {
  std::vector<AffineIsometry> out;
  const RatVector& x = p.coordinates();
  for (std::size_t i : stabilizer_indices(model, p)) {
    const AffineIsometry& g = model.element(i).map;
    RatVector gamma = x - g(x);  // integral since g(p) = p mod Z^d
    out.push_back({g.linear, g.translation + gamma});
  }
  return out;
}

} // namespace symorb

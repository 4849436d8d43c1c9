#include "symorb/census.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "symorb/error.hpp"

namespace symorb {

Integer fixed_point_count(const TorusModel& model, unsigned k) {
  Integer det = abs_value(determinant(model.rotation(k) - IntMatrix::identity(8)));
  if (det == 0)
    throw std::invalid_argument(model.fcase.label + ": σ̂^" + std::to_string(k) +
                                " - I is singular, its fixed locus is not finite");
  return det;
}

namespace {

// Multiplicative order of an element of the point group.
std::size_t element_order(const CrystalModel& g, std::size_t e) {
  std::size_t x = e, order = 1;
  while (x != g.identity_index()) {
    x = g.multiply(x, e);
    ++order;
  }
  return order;
}

} // namespace

CensusReport census(const TorusModel& model) {
  const CrystalModel& g = model.group;
  CensusReport report;
  for (const auto& e : g.elements())
    report.two_dimensional_loci += e.swap_part ? 1 : 0;

  std::set<TorsionPoint> points;
  for (unsigned k = 1; k < model.n(); ++k) {
    const AffineIsometry& rot = g.element(model.rotation_index(k)).map;
    if (rot.is_translation())
      continue;
    Integer expected = fixed_point_count(model, k);
    FixedLocus locus = fixed_locus(rot);
    if (locus.kind != FixedLocus::Kind::finite)
      throw ModelError(model.fcase.label + ": σ̂^" + std::to_string(k) + " has a non-finite fixed locus");
    report.fixed_point_law[k] = {locus.points.size(), expected};
    points.insert(locus.points.begin(), locus.points.end());
  }
  report.rotation_fixed_points = points.size();

  std::set<TorsionPoint> seen;
  for (const TorsionPoint& p : points) {
    if (seen.count(p))
      continue;
    std::vector<TorsionPoint> orb = orbit(g, p);
    seen.insert(orb.begin(), orb.end());
    for (const TorsionPoint& q : orb)
      if (!points.count(q))
        throw ModelError("rotation-fixed points are not closed under the point group at " + q.str());

    CensusOrbit entry;
    entry.representative = orb.front();
    entry.size = orb.size();
    std::vector<std::size_t> stab = stabilizer_indices(g, entry.representative);
    bool swap = false;
    std::size_t max_rotation_order = 1;
    for (std::size_t s : stab) {
      entry.stabilizer.push_back(g.element(s).label);
      if (g.element(s).swap_part)
        swap = true;
      else
        max_rotation_order = std::max(max_rotation_order, element_order(g, s));
    }
    if (orb.size() * stab.size() != g.order())
      throw ModelError("orbit-stabilizer violated at " + entry.representative.str());

    if (swap) {
      if (stab.size() == g.order() && max_rotation_order == 6)
        report.g2_points.push_back(entry);
      report.excluded.push_back(std::move(entry));
      continue;
    }
    // Rotations form a cyclic group, so some element must generate.
    if (max_rotation_order != stab.size())
      throw ModelError("non-cyclic rotation stabilizer at " + entry.representative.str());
    ++report.a[static_cast<unsigned>(stab.size())];
    report.isolated.push_back(std::move(entry));
  }
  if (!report.g2_points.empty())
    report.a[2] += report.g2_points.size();
  return report;
}

std::string orbit_log(const CensusReport& report) {
  std::ostringstream os;
  auto line = [&](const char* kind, const CensusOrbit& o) {
    os << kind << " " << o.representative.str() << " orbit " << o.size << " stab {";
    for (std::size_t i = 0; i < o.stabilizer.size(); ++i)
      os << (i ? ", " : "") << o.stabilizer[i];
    os << "}\n";
  };
  for (const auto& o : report.isolated)
    line("isolated", o);
  for (const auto& o : report.excluded)
    line("excluded", o);
  for (const auto& o : report.g2_points)
    line("g2-point", o);
  return os.str();
}

} // namespace symorb

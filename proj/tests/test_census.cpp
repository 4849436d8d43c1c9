#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "symorb/census.hpp"

using namespace symorb;

namespace {

using Tally = std::map<unsigned, std::size_t>;

const std::map<std::string, Tally>& table2() {
  static const std::map<std::string, Tally> t{
      {"t-Z3", {{3, 36}}},          {"t-Z3xZ3", {{3, 27}}},   {"t-Z3^3", {}},
      {"t-Z4", {{2, 54}, {4, 6}}},  {"t-Z2xZ4", {{2, 48}, {4, 4}}},
      {"t-Z2^2xZ4", {{2, 36}}},     {"t-Z6", {{2, 36}, {3, 16}}},
  };
  return t;
}

// Reference census built only from fixed_locus and the element maps: every
// rotation-fixed point, grouped into orbits by applying all elements, and
// classified by the labels of the elements fixing it.
struct Reference {
  Tally a;
  std::size_t points = 0;
  std::size_t excluded_orbits = 0;
};

Reference reference_census(const TorusModel& m) {
  std::set<TorsionPoint> pts;
  for (unsigned k = 1; k < m.n(); ++k)
    for (const auto& p : fixed_locus(m.group.element(m.rotation_index(k)).map).points)
      pts.insert(p);
  Reference r;
  r.points = pts.size();
  std::set<TorsionPoint> done;
  for (const auto& p : pts) {
    if (done.count(p))
      continue;
    std::size_t fixing = 0;
    bool swap = false;
    for (const auto& e : m.group.elements()) {
      TorsionPoint q = e.map(p);
      done.insert(q);
      if (q == p) {
        ++fixing;
        swap = swap || e.swap_part;
      }
    }
    if (!swap) {
      ++r.a[static_cast<unsigned>(fixing)];
    } else {
      ++r.excluded_orbits;
      // full D_6 stabilizer: a g_2 point that survives terminalization
      if (fixing == 12)
        ++r.a[2];
    }
  }
  return r;
}

} // namespace

TEST_CASE("singularity table") {
  for (const auto& c : torus_table_cases()) {
    CAPTURE(c.label);
    TorusModel m = build_torus_model(c);
    CensusReport r = census(m);
    CHECK(r.a == table2().at(c.label));
    if (r.a != table2().at(c.label))
      MESSAGE(orbit_log(r));
  }
}

TEST_CASE("t-Z3: 81 fixed points, 9 on the diagonal loci, 36 isolated orbits") {
  TorusModel m = build_torus_model(*find_case("t-Z3"));
  CensusReport r = census(m);
  CHECK(fixed_point_count(m, 1) == 81);
  CHECK(r.rotation_fixed_points == 81);
  std::size_t excluded_points = 0;
  for (const auto& o : r.excluded)
    excluded_points += o.size;
  CHECK(excluded_points == 9);
  CHECK(r.isolated.size() == 36);
  for (const auto& o : r.isolated) {
    CHECK(o.size == 2);
    CHECK(o.stabilizer.size() == 3);
  }
  CHECK(r.two_dimensional_loci == 3);
}

TEST_CASE("fixed point counts") {
  TorusModel z3 = build_torus_model(*find_case("t-Z3"));
  CHECK(fixed_point_count(z3, 1) == 81);
  CHECK(fixed_point_count(z3, 2) == 81);
  TorusModel z4 = build_torus_model(*find_case("t-Z4"));
  CHECK(fixed_point_count(z4, 2) == 256);
  CHECK(fixed_point_count(z4, 1) == 16);
  CHECK_THROWS_AS(fixed_point_count(z4, 0), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_count(z4, 4), std::invalid_argument);
}

TEST_CASE("census invariants") {
  for (const auto& c : catalog()) {
    if (c.kind != SurfaceKind::torus)
      continue;
    CAPTURE(c.label);
    TorusModel m = build_torus_model(c);
    CensusReport r = census(m);

    // determinant law for every rotation
    for (const auto& [k, law] : r.fixed_point_law) {
      CHECK(Integer(law.first) == law.second);
      CHECK(law.second == abs(oracle::det(m.rotation(k) - IntMatrix::identity(8))));
    }

    // orbit point counts add up to the distinct rotation-fixed points
    std::size_t total = 0;
    for (const auto& o : r.isolated)
      total += o.size;
    for (const auto& o : r.excluded)
      total += o.size;
    CHECK(total == r.rotation_fixed_points);
    CHECK(r.two_dimensional_loci == m.n());

    // a_k only for k dividing n; isolated stabilizers are pure rotations
    for (const auto& [k, count] : r.a) {
      CHECK(count > 0);
      CHECK(m.n() % k == 0);
    }
    for (const auto& o : r.isolated) {
      CHECK(o.size * o.stabilizer.size() == m.group.order());
      for (const auto& label : o.stabilizer)
        CHECK(label.rfind("s^", 0) == 0);
    }
    for (const auto& o : r.g2_points)
      CHECK(o.stabilizer.size() == 12);

    // agrees with the reference census
    Reference ref = reference_census(m);
    CHECK(ref.a == r.a);
    CHECK(ref.points == r.rotation_fixed_points);
    CHECK(ref.excluded_orbits == r.excluded.size());

    // deterministic
    CensusReport again = census(m);
    CHECK(again.a == r.a);
    CHECK(orbit_log(again) == orbit_log(r));
  }
}

TEST_CASE("census does not depend on the choice of H'") {
  for (const auto& c : torus_table_cases()) {
    if (c.translation_rank == 0)
      continue;
    CAPTURE(c.label);
    for (const auto& gens : hprime_choices(c))
      CHECK(census(build_torus_model(c, gens)).a == table2().at(c.label));
  }
}

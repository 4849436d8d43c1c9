#include <doctest.h>

#include <deque>
#include <set>

#include "oracles.hpp"
#include "symorb/error.hpp"
#include "symorb/pi1.hpp"

using namespace symorb;

namespace {

RatVector frac(std::initializer_list<std::pair<long, long>> e) { return RatVector::from_fractions(e); }

// A Γ-coordinate lattice rewritten in the Λ^2 chart.
Lattice in_chart(const TorusModel& m, const Lattice& l) {
  std::vector<RatVector> rows;
  for (const auto& b : l.basis())
    rows.push_back(m.to_chart(b));
  return Lattice::generated_by(rows, 8);
}

RatVector unit_pair(std::size_t i, long a, std::size_t j, long b) {
  IntVector v(8);
  v[i] += a;
  v[j] += b;
  return RatVector(v);
}

FiniteAbelianGroup group(std::initializer_list<long> orders) {
  return FiniteAbelianGroup::from_cyclic_orders(make_int_vector(orders));
}

const std::map<std::string, FiniteAbelianGroup>& table3() {
  static const std::map<std::string, FiniteAbelianGroup> t{
      {"t-Z3", group({3, 3})},   {"t-Z3xZ3", group({3})},    {"t-Z3^3", group({})}, {"t-Z4", group({2, 2})},
      {"t-Z2xZ4", group({2})},   {"t-Z2^2xZ4", group({})},   {"t-Z6", group({})},
  };
  return t;
}

} // namespace

TEST_CASE("Γ_0 and φ(Γ_0) for t-Z2xZ4") {
  TorusModel m = build_torus_model(*find_case("t-Z2xZ4"));
  NUDecomposition nu = compute_gamma_prime(m);
  // f = (e1 + e2) / 2, indices 0..3 are the first factor, 4..7 the second
  RatVector f_minus_f = frac({{1, 2}, {1, 2}, {0, 1}, {0, 1}, {-1, 2}, {-1, 2}, {0, 1}, {0, 1}});
  Lattice gamma0 = Lattice::generated_by(
      {f_minus_f, unit_pair(1, 1, 5, -1), unit_pair(2, 1, 6, -1), unit_pair(3, 1, 7, -1)}, 8);
  CHECK(in_chart(m, nu.gamma_k[0]) == gamma0);

  // φ(Γ_0) = <(f, -f + e1), (e2, e1), (e3, -e4), (e4, e3)>, since
  // σ f = (e2 - e1) / 2 = f - e1.
  RatVector f_shift = frac({{1, 2}, {1, 2}, {0, 1}, {0, 1}, {1, 2}, {-1, 2}, {0, 1}, {0, 1}});
  Lattice gamma1 = Lattice::generated_by(
      {f_shift, unit_pair(1, 1, 4, 1), unit_pair(2, 1, 7, -1), unit_pair(3, 1, 6, 1)}, 8);
  CHECK(in_chart(m, nu.gamma_k[1]) == gamma1);
  CHECK(in_chart(m, apply_phi(m, nu.gamma_k[0])) == gamma1);

  // Writing σ f = f - e2 instead gives (f, -f + e2) as the first generator:
  // a different lattice, but the same sum with Γ_0.
  RatVector f_shift_e2 = frac({{1, 2}, {1, 2}, {0, 1}, {0, 1}, {-1, 2}, {1, 2}, {0, 1}, {0, 1}});
  Lattice gamma1_e2 = Lattice::generated_by(
      {f_shift_e2, unit_pair(1, 1, 4, 1), unit_pair(2, 1, 7, -1), unit_pair(3, 1, 6, 1)}, 8);
  CHECK_FALSE(gamma1_e2 == gamma1);
  CHECK(lattice_sum(gamma0, gamma1_e2) == lattice_sum(gamma0, gamma1));
  CHECK(in_chart(m, nu.gamma_prime) == lattice_sum(gamma0, gamma1));

  // Γ / (Γ_0 + φ(Γ_0)) = {1} ⊕ Z/2
  CHECK(quotient(m.gamma_chart, lattice_sum(gamma0, gamma1)) == group({2}));
  CHECK(pi1_torus(m) == group({2}));
}

TEST_CASE("eigen-sublattices are saturated rank-4 (-1)-eigenlattices") {
  for (const auto& c : torus_table_cases()) {
    TorusModel m = build_torus_model(c);
    CAPTURE(c.label);
    for (unsigned k = 0; k < m.n(); ++k) {
      Lattice l = eigen_sublattice(m, k);
      REQUIRE(l.rank() == 4);
      REQUIRE(l.is_integral());
      for (const auto& b : l.basis())
        CHECK(mat_vec(m.reflection(k), b) == -b);
      // saturated: every 4x4 minor gcd is 1
      for (const auto& d : oracle::invariant_factors_by_minors(l.numerators()))
        CHECK(d == 1);
    }
  }
}

TEST_CASE("table of fundamental groups") {
  for (const auto& c : torus_table_cases()) {
    CAPTURE(c.label);
    TorusModel m = build_torus_model(c);
    NUDecomposition nu = compute_gamma_prime(m);
    FiniteAbelianGroup g = pi1_torus(m);
    CHECK(g == table3().at(c.label));
    CHECK(g.is_finite());

    // Independent count of Z^8 / Γ' by coset enumeration.
    REQUIRE(nu.gamma_prime.rank() == 8);
    auto count = oracle::enumerate_quotient(nu.gamma_prime.numerators());
    CHECK(Integer(count.order) == g.torsion_order());
    for (const auto& [k, n] : count.killed_by)
      CHECK(Integer(n) == g.count_killed_by(k));
  }
}

TEST_CASE("N_U decomposition claims hold and catch tampering") {
  for (const auto& c : torus_table_cases()) {
    CAPTURE(c.label);
    TorusModel m = build_torus_model(c);
    NUDecomposition nu = decompose(m);
    CHECK_NOTHROW(check_witnesses(m, nu));
    CHECK_NOTHROW(check_direct_sum(m, nu));
    CHECK_NOTHROW(check_phi(m, nu));
    CHECK_NOTHROW(check_normality(m, nu));
    CHECK(lattice_intersection(nu.gamma_k[0], nu.gamma_k[1]).rank() == 0);
    CHECK(lattice_sum(nu.gamma_k[0], nu.gamma_k[1]) == nu.gamma_prime);
    CHECK(apply_phi(m, Lattice::standard(8)) == Lattice::standard(8));
    for (const auto& w : nu.witnesses) {
      CHECK(w.element(w.point) == w.point);
      CHECK(mat_vec(m.reflection(w.k), RatVector(w.gamma)) == -RatVector(w.gamma));
    }

    NUDecomposition bad = nu;
    bad.gamma_k[1] = nu.gamma_k[0];
    CHECK_THROWS_AS(check_phi(m, bad), ClaimViolation);
    CHECK_THROWS_AS(check_direct_sum(m, bad), ClaimViolation);

    NUDecomposition small = nu;
    small.gamma_prime = nu.gamma_k[0];
    CHECK_THROWS_AS(check_normality(m, small), ClaimViolation);

    if (!nu.witnesses.empty()) {
      // shifting along γ leaves the fixed set of the reflection
      NUDecomposition moved = nu;
      Witness& w = moved.witnesses.front();
      w.point = w.point + RatVector(w.gamma) / 3;
      CHECK_THROWS_AS(check_witnesses(m, moved), ClaimViolation);
    }
  }
}

TEST_CASE("stabilizer oracle rebuilds Γ'") {
  for (const auto& c : torus_table_cases()) {
    CAPTURE(c.label);
    TorusModel m = build_torus_model(c);
    OracleResult o = nu_oracle(m);
    CHECK(o.lattice == compute_gamma_prime(m).gamma_prime);
    CHECK(o.surjects_onto_point_group);
    CHECK(o.stabilizer_elements > 0);
  }
}

TEST_CASE("translation subgroup from Schreier generators") {
  // <t_{e1} τ, τ> in Z^2 ⋊ {±1} contains t_{e1}
  AffineIsometry tau = AffineIsometry::linear_map(-IntMatrix::identity(2));
  AffineIsometry t1tau{-IntMatrix::identity(2), frac({{1, 1}, {0, 1}})};
  std::vector<IntMatrix> image;
  Lattice l = translation_subgroup(2, {tau, t1tau}, &image);
  CHECK(l == Lattice::generated_by(IntMatrix{{1, 0}}));
  CHECK(image.size() == 2);
  // Pure translations generate their own span.
  Lattice t = translation_subgroup(
      2, {AffineIsometry::translation_by(frac({{2, 1}, {0, 1}})), AffineIsometry::translation_by(frac({{0, 1}, {3, 1}}))});
  CHECK(t == Lattice::generated_by(IntMatrix{{2, 0}, {0, 3}}));
  // A rotation of order 4 together with t_{e1}: the normal closure is Z^2.
  AffineIsometry r = AffineIsometry::linear_map(IntMatrix{{0, -1}, {1, 0}});
  Lattice full = translation_subgroup(2, {r, AffineIsometry::translation_by(frac({{1, 1}, {0, 1}}))});
  CHECK(full == Lattice::standard(2));
}

TEST_CASE("fundamental group does not depend on the choice of H'") {
  for (const auto& c : catalog()) {
    if (c.kind != SurfaceKind::torus || c.translation_rank == 0)
      continue;
    CAPTURE(c.label);
    TorusModel base = build_torus_model(c);
    const FiniteAbelianGroup expected = pi1_torus(base);
    for (const auto& gens : hprime_choices(c))
      CHECK(pi1_torus(build_torus_model(c, gens)) == expected);
  }
}

TEST_CASE("K3 cases: ιH generates G") {
  for (const auto& c : k3_cases()) {
    CAPTURE(c.label);
    AbstractGroup g = build_k3_group(c);
    // closure of ιH by breadth-first multiplication
    std::set<std::size_t> seen(g.iota_coset.begin(), g.iota_coset.end());
    std::deque<std::size_t> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : g.iota_coset) {
        std::size_t z = g.multiply(x, y);
        if (seen.insert(z).second)
          queue.push_back(z);
      }
    }
    CHECK(seen.size() == g.order());
    auto sub = coset_generated_subgroup(g);
    CHECK(sub.size() == g.order());
    CHECK(pi1_k3(g).is_trivial());
  }
}

#include "symorb/kummer.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <random>
#include <stdexcept>

#include "symorb/affine.hpp"
#include "symorb/pi1.hpp"

namespace symorb {

IntVector two_torsion_class(unsigned index) {
  if (index > 15)
    throw std::out_of_range("two-torsion class index " + std::to_string(index) + " is not in 0..15");
  IntVector v(4);
  for (unsigned j = 0; j < 4; ++j)
    v[j] = (index >> j) & 1u;
  return v;
}

BlowupSubset BlowupSubset::from_mask(std::uint16_t mask) {
  if (mask == 0)
    throw std::invalid_argument("Σ is empty: π1(X_reg) = Λ ⋊ <τ> is infinite");
  return {mask, static_cast<unsigned>(std::countr_zero(mask))};
}

BlowupSubset BlowupSubset::from_mask(std::uint16_t mask, unsigned basepoint) {
  BlowupSubset s = from_mask(mask);
  if (basepoint > 15 || !((mask >> basepoint) & 1u))
    throw std::invalid_argument("basepoint " + std::to_string(basepoint) + " is not in Σ");
  s.basepoint = basepoint;
  return s;
}

Lattice lemma_lattice(const BlowupSubset& subset) {
  (void)BlowupSubset::from_mask(subset.mask, subset.basepoint);
  std::vector<IntVector> rows;
  for (unsigned j = 0; j < 4; ++j) {
    IntVector v(4);
    v[j] = 2;
    rows.push_back(v);
  }
  const IntVector p = two_torsion_class(subset.basepoint);
  for (unsigned i = 0; i < 16; ++i) {
    if (!((subset.mask >> i) & 1u) || i == subset.basepoint)
      continue;
    IntVector c = two_torsion_class(i);
    for (unsigned j = 0; j < 4; ++j)
      c[j] -= p[j];
    rows.push_back(c);
  }
  return Lattice::generated_by(IntMatrix::from_rows(rows, 4));
}

FiniteAbelianGroup pi1_via_lemma(const BlowupSubset& subset) {
  return quotient(Lattice::standard(4), lemma_lattice(subset));
}

FiniteAbelianGroup pi1_via_formula(const BlowupSubset& subset) {
  (void)BlowupSubset::from_mask(subset.mask, subset.basepoint);
  // Gaussian elimination over F_2 on 4-bit rows.
  std::vector<unsigned> basis;
  for (unsigned i = 0; i < 16; ++i) {
    if (!((subset.mask >> i) & 1u))
      continue;
    unsigned v = i ^ subset.basepoint;
    for (unsigned b : basis)
      v = std::min(v, v ^ b);
    if (v)
      basis.push_back(v);
  }
  IntVector orders(4 - basis.size(), Integer(2));
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

bool basepoint_independence_check(std::uint16_t mask) {
  BlowupSubset first = BlowupSubset::from_mask(mask);
  const FiniteAbelianGroup reference = pi1_via_formula(first);
  for (unsigned p = 0; p < 16; ++p)
    if (((mask >> p) & 1u) && pi1_via_formula(BlowupSubset::from_mask(mask, p)) != reference)
      return false;
  return true;
}

Lattice kummer_nu_oracle(std::uint16_t mask) {
  (void)BlowupSubset::from_mask(mask);
  const IntMatrix tau = -IntMatrix::identity(4);
  std::vector<AffineIsometry> gens;
  // A lift x + λ of the class x in [0,1)^4 has stabilizer {1, t_{2x + 2λ} τ}.
  for (unsigned i = 0; i < 16; ++i) {
    if (!((mask >> i) & 1u))
      continue;
    RatVector x(two_torsion_class(i), 2);
    RatVector two_x = Integer(2) * x;
    gens.push_back({tau, two_x});
    for (unsigned j = 0; j < 4; ++j) {
      IntVector lift(4);
      lift[j] = 2;
      gens.push_back({tau, two_x + RatVector(lift)});
    }
  }
  return translation_subgroup(4, gens);
}

namespace {

unsigned long order_of(const FiniteAbelianGroup& g) { return g.torsion_order().get_ui(); }

void sweep_range(std::uint32_t begin, std::uint32_t end, SweepResult& out, std::vector<unsigned long>& orders) {
  for (std::uint32_t m = begin; m < end; ++m) {
    auto mask = static_cast<std::uint16_t>(m);
    BlowupSubset s = BlowupSubset::from_mask(mask);
    FiniteAbelianGroup lemma = pi1_via_lemma(s);
    FiniteAbelianGroup formula = pi1_via_formula(s);
    if (lemma != formula || !lemma.is_finite()) {
      if (out.path_disagreements++ == 0 && out.first_failure == 0)
        out.first_failure = mask;
    }
    if (!basepoint_independence_check(mask)) {
      if (out.basepoint_failures++ == 0 && out.first_failure == 0)
        out.first_failure = mask;
    }
    orders[m] = order_of(formula);
    ++out.subsets;
    ++out.order_distribution[orders[m]];
  }
}

} // namespace

SweepResult sweep(unsigned jobs, std::size_t nested_pairs, std::uint64_t seed) {
  jobs = std::max(1u, jobs);
  constexpr std::uint32_t total = 1u << 16;
  std::vector<unsigned long> orders(total, 0);
  std::vector<SweepResult> parts(jobs);
  std::vector<std::future<void>> tasks;
  const std::uint32_t chunk = (total - 1 + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    std::uint32_t begin = 1 + j * chunk;
    std::uint32_t end = std::min<std::uint32_t>(total, begin + chunk);
    if (begin >= end)
      continue;
    tasks.push_back(std::async(std::launch::async, sweep_range, begin, end, std::ref(parts[j]), std::ref(orders)));
  }
  for (auto& t : tasks)
    t.get();

  // Merge in job order so the first failure is the smallest failing mask.
  SweepResult result;
  for (const SweepResult& p : parts) {
    result.subsets += p.subsets;
    result.path_disagreements += p.path_disagreements;
    result.basepoint_failures += p.basepoint_failures;
    if (result.first_failure == 0)
      result.first_failure = p.first_failure;
    for (const auto& [order, count] : p.order_distribution)
      result.order_distribution[order] += count;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> any_mask(1, total - 1);
  for (std::size_t i = 0; i < nested_pairs; ++i) {
    auto small = static_cast<std::uint16_t>(any_mask(rng));
    auto extra = static_cast<std::uint16_t>(any_mask(rng));
    auto large = static_cast<std::uint16_t>(small | extra);
    ++result.monotonicity_pairs;
    if (orders[small] % orders[large] != 0) {
      ++result.monotonicity_failures;
      if (result.first_failure == 0)
        result.first_failure = small;
    }
  }
  return result;
}

} // namespace symorb

#include "symorb/pi1.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>

#include "symorb/error.hpp"

namespace symorb {

namespace {

const IntMatrix& gamma_basis_rows(const Lattice& l) {
  if (!l.is_integral())
    throw ModelError("sublattice of Γ with non-integral coordinates: " + l.str());
  return l.numerators();
}

[[noreturn]] void violation(const std::string& claim, const std::string& what, IntVector witness) {
  throw ClaimViolation(claim, claim + ": " + what + " (vector " + to_string(witness) + ")", std::move(witness));
}

// Throws if some basis vector of `sub` is outside `lattice`.
void require_inside(const std::string& claim, const std::string& what, const Lattice& lattice,
                    const Lattice& sub) {
  const IntMatrix& rows = gamma_basis_rows(sub);
  for (std::size_t i = 0; i < rows.rows(); ++i)
    if (!lattice.contains(rows.row(i)))
      violation(claim, what, rows.row(i));
}

void require_equal(const std::string& claim, const std::string& what, const Lattice& a, const Lattice& b) {
  require_inside(claim, what, a, b);
  require_inside(claim, what, b, a);
}

Lattice span_rows(std::size_t dim, const std::vector<IntVector>& rows) {
  // Batched so the HNF never sees more than a few dozen rows at once.
  constexpr std::size_t batch = 48;
  Lattice acc = Lattice::zero(dim);
  for (std::size_t start = 0; start < rows.size(); start += batch) {
    std::size_t end = std::min(rows.size(), start + batch);
    IntMatrix m(acc.rank() + (end - start), dim);
    for (std::size_t i = 0; i < acc.rank(); ++i)
      for (std::size_t j = 0; j < dim; ++j)
        m(i, j) = acc.numerators()(i, j);
    for (std::size_t r = start; r < end; ++r)
      for (std::size_t j = 0; j < dim; ++j)
        m(acc.rank() + r - start, j) = rows[r][j];
    acc = Lattice::generated_by(m);
  }
  return acc;
}

} // namespace

Lattice eigen_sublattice(const TorusModel& model, unsigned k) {
  return kernel_basis(model.reflection(k) + IntMatrix::identity(8));
}

Lattice apply_phi(const TorusModel& model, const Lattice& lattice) {
  if (model.phi_hat.denominator != 1)
    throw ModelError(model.fcase.label + ": φ does not preserve Γ");
  if (!lattice.is_integral())
    throw ModelError("apply_phi: lattice is not contained in Γ");
  return lattice.image(model.phi_hat.numerator);
}

NUDecomposition decompose(const TorusModel& model) {
  NUDecomposition nu;
  for (unsigned k = 0; k < model.n(); ++k) {
    nu.gamma_k.push_back(eigen_sublattice(model, k));
    const Lattice& gk = nu.gamma_k.back();
    const IntMatrix& rows = gamma_basis_rows(gk);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      Witness w;
      w.k = k;
      w.gamma = rows.row(i);
      w.element = {model.reflection(k), RatVector(w.gamma)};
      w.point = RatVector(w.gamma, 2);
      nu.witnesses.push_back(std::move(w));
    }
  }
  nu.gamma_prime = lattice_sum(nu.gamma_k);
  return nu;
}

void check_witnesses(const TorusModel& model, const NUDecomposition& nu) {
  for (const Witness& w : nu.witnesses) {
    if (w.element.linear != model.reflection(w.k) || w.element.translation != RatVector(w.gamma))
      violation("claim-i", "witness element is not t_γ ι̂σ̂^k", w.gamma);
    // Exact, not modulo Γ: t_γ ι̂σ̂^k (γ/2) = -γ/2 + γ.
    if (w.element(w.point) != w.point)
      violation("claim-i", "witness does not fix γ/2 for k = " + std::to_string(w.k), w.gamma);
    if (!nu.gamma_k[w.k].contains(w.gamma) || !nu.gamma_prime.contains(w.gamma))
      violation("claim-i", "witness translation outside Γ_k", w.gamma);
  }
  for (unsigned k = 0; k < nu.gamma_k.size(); ++k)
    if (nu.gamma_k[k].rank() != 4)
      violation("claim-i", "Γ_" + std::to_string(k) + " has rank " + std::to_string(nu.gamma_k[k].rank()),
                IntVector{});
}

void check_direct_sum(const TorusModel& model, const NUDecomposition& nu) {
  const unsigned n = model.n();
  const Lattice& g0 = nu.gamma_k[0];
  const Lattice& g1 = nu.gamma_k[1 % n];
  Lattice meet = lattice_intersection(g0, g1);
  if (meet.rank() != 0)
    violation("claim-ii", "Γ_0 ∩ Γ_1 is nonzero", meet.numerators().row(0));
  require_equal("claim-ii", "Γ' differs from Γ_0 + Γ_1", nu.gamma_prime, lattice_sum(g0, g1));

  for (unsigned l = 0; l < n; ++l) {
    const IntMatrix sl = model.rotation(l);
    for (unsigned k = 0; k < n; ++k) {
      const Lattice& target_shift = nu.gamma_k[(k + 2 * n - (2 * l) % (2 * n)) % n];
      const Lattice& target_sum = nu.gamma_k[(k + n - l) % n];
      const IntMatrix& rows = nu.gamma_k[k].numerators();
      for (std::size_t i = 0; i < rows.rows(); ++i) {
        IntVector gamma = rows.row(i);
        IntVector moved = mat_vec(sl, gamma);
        if (!target_shift.contains(moved))
          violation("claim-ii", "σ̂^" + std::to_string(l) + " Γ_" + std::to_string(k) + " not inside its shift",
                    gamma);
        IntVector sum(gamma.size());
        for (std::size_t j = 0; j < sum.size(); ++j)
          sum[j] = gamma[j] + moved[j];
        if (!target_sum.contains(sum))
          violation("claim-ii", "γ + σ̂^" + std::to_string(l) + " γ not in Γ_" + std::to_string((k + n - l) % n),
                    gamma);
      }
    }
  }
}

void check_phi(const TorusModel& model, const NUDecomposition& nu) {
  if (model.phi_hat.denominator != 1)
    violation("claim-iii", "φ has non-integral Γ-matrix", IntVector{});
  require_equal("claim-iii", "φ(Γ) ≠ Γ", Lattice::standard(8), apply_phi(model, Lattice::standard(8)));
  require_equal("claim-iii", "Γ_1 ≠ φ(Γ_0)", nu.gamma_k[1 % model.n()], apply_phi(model, nu.gamma_k[0]));
}

void check_normality(const TorusModel& model, const NUDecomposition& nu) {
  require_equal("normality", "σ̂ Γ' ≠ Γ'", nu.gamma_prime, nu.gamma_prime.image(model.sigma_hat));
  require_equal("normality", "ι̂ Γ' ≠ Γ'", nu.gamma_prime, nu.gamma_prime.image(model.iota_hat));
}

NUDecomposition compute_gamma_prime(const TorusModel& model) {
  NUDecomposition nu = decompose(model);
  check_witnesses(model, nu);
  check_direct_sum(model, nu);
  check_phi(model, nu);
  check_normality(model, nu);
  return nu;
}

FiniteAbelianGroup pi1_torus(const TorusModel& model) {
  return quotient(Lattice::standard(8), compute_gamma_prime(model).gamma_prime);
}

std::vector<std::size_t> coset_generated_subgroup(const AbstractGroup& group) {
  std::vector<bool> in(group.order(), false);
  std::deque<std::size_t> queue{group.identity};
  in[group.identity] = true;
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t g : group.iota_coset) {
      std::size_t b = group.multiply(a, g);
      if (!in[b]) {
        in[b] = true;
        queue.push_back(b);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i])
      out.push_back(i);
  return out;
}

FiniteAbelianGroup pi1_k3(const AbstractGroup& group) {
  const std::vector<std::size_t> sub = coset_generated_subgroup(group);
  const std::size_t n = group.order();
  std::vector<bool> in(n, false);
  for (std::size_t s : sub)
    in[s] = true;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t s : sub)
      if (!in[group.multiply(group.multiply(g, s), group.inverse(g))])
        throw std::logic_error("<ιH> is not normal in G");

  // Cosets g<ιH>, labelled by their smallest element.
  std::vector<std::size_t> coset(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t g = 0; g < n; ++g) {
    if (coset[g] != n)
      continue;
    reps.push_back(g);
    for (std::size_t s : sub)
      coset[group.multiply(g, s)] = reps.size() - 1;
  }
  const std::size_t q = reps.size();
  auto mul = [&](std::size_t a, std::size_t b) { return coset[group.multiply(reps[a], reps[b])]; };
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a))
        throw std::logic_error("G / <ιH> is not abelian");
  if (q == 1)
    return FiniteAbelianGroup::trivial();

  // Abelian structure from the counts #{x : p^j x = 0}.
  auto killed_by = [&](std::size_t e) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < q; ++a) {
      std::size_t x = 0;  // coset of the identity
      for (std::size_t i = 0; i < e; ++i)
        x = mul(x, a);
      count += (x == coset[group.identity]) ? 1 : 0;
    }
    return count;
  };
  IntVector orders;
  std::size_t rest = q;
  for (std::size_t p = 2; rest > 1; ++p) {
    if (rest % p)
      continue;
    while (rest % p == 0)
      rest /= p;
    // r_j = log_p #{p^j x = 0}; there are r_j - r_{j-1} factors of order >= p^j.
    std::vector<std::size_t> r{0};
    for (std::size_t pj = p;; pj *= p) {
      std::size_t c = killed_by(pj), logc = 0;
      while (c > 1) {
        c /= p;
        ++logc;
      }
      if (logc == r.back())
        break;
      r.push_back(logc);
    }
    for (std::size_t j = 1; j < r.size(); ++j) {
      std::size_t at_least_j = r[j] - r[j - 1];
      std::size_t at_least_next = j + 1 < r.size() ? r[j + 1] - r[j] : 0;
      Integer order = 1;
      for (std::size_t i = 0; i < j; ++i)
        order *= static_cast<unsigned long>(p);
      for (std::size_t c = 0; c < at_least_j - at_least_next; ++c)
        orders.push_back(order);
    }
  }
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

Lattice translation_subgroup(std::size_t dim, const std::vector<AffineIsometry>& generators,
                             std::vector<IntMatrix>* point_group_image) {
  const IntMatrix id = IntMatrix::identity(dim);
  std::set<IntVector> translations;
  std::vector<AffineIsometry> moving;
  for (const AffineIsometry& g : generators) {
    if (g.dim() != dim)
      throw DimensionMismatch("translation_subgroup: generator of wrong dimension");
    if (!g.translation.is_integral())
      throw std::invalid_argument("translation_subgroup: generator " + g.str() + " has a fractional translation");
    if (g.linear == id) {
      if (!g.translation.is_zero())
        translations.insert(g.translation.numerators());
    } else {
      moving.push_back(g);
    }
  }

  // Coset representatives r_B, one per linear part B, by breadth-first search.
  constexpr std::size_t max_point_group = 100000;
  std::vector<IntMatrix> linear{id};
  std::vector<IntVector> shift{IntVector(dim)};
  std::vector<IntMatrix> inverse_linear{id};
  auto find = [&](const IntMatrix& m) -> std::size_t {
    for (std::size_t i = 0; i < linear.size(); ++i)
      if (linear[i] == m)
        return i;
    return linear.size();
  };
  std::vector<IntVector> schreier;
  for (std::size_t b = 0; b < linear.size(); ++b) {
    for (const AffineIsometry& s : moving) {
      IntMatrix c = s.linear * linear[b];
      IntVector v = mat_vec(s.linear, shift[b]);
      for (std::size_t j = 0; j < dim; ++j)
        v[j] += s.translation.numerators()[j];
      std::size_t ci = find(c);
      if (ci == linear.size()) {
        if (linear.size() >= max_point_group)
          throw std::length_error("translation_subgroup: point group image is too large");
        ScaledMatrix inv = rational_inverse(c);
        if (inv.denominator != 1)
          throw std::domain_error("translation_subgroup: linear part without integral inverse");
        linear.push_back(c);
        shift.push_back(v);
        inverse_linear.push_back(inv.numerator);
        continue;
      }
      // r_C^-1 s r_B = t with t = C^-1 (v - shift_C).
      IntVector diff(dim);
      for (std::size_t j = 0; j < dim; ++j)
        diff[j] = v[j] - shift[ci][j];
      IntVector t = mat_vec(inverse_linear[ci], diff);
      if (std::any_of(t.begin(), t.end(), [](const Integer& x) { return x != 0; }))
        schreier.push_back(std::move(t));
    }
  }

  // A translation generator τ contributes B^-1 τ for every B.
  Lattice trans = span_rows(dim, {translations.begin(), translations.end()});
  for (const IntMatrix& binv : inverse_linear) {
    Lattice moved = trans.image(binv);
    for (std::size_t i = 0; i < moved.rank(); ++i)
      schreier.push_back(moved.numerators().row(i));
  }
  std::sort(schreier.begin(), schreier.end());
  schreier.erase(std::unique(schreier.begin(), schreier.end()), schreier.end());
  if (point_group_image)
    *point_group_image = linear;
  return span_rows(dim, schreier);
}

OracleResult nu_oracle(const TorusModel& model) {
  const std::size_t d = 8;
  const long den = to_long(model.group.denominator_bound());
  struct Reflection {
    std::size_t index;
    std::array<std::array<long, 8>, 8> m;
    std::set<std::array<long, 8>> gammas;
  };
  std::vector<Reflection> refl;
  for (std::size_t e = 0; e < model.group.order(); ++e) {
    const PointGroupElement& g = model.group.element(e);
    if (!g.swap_part)
      continue;
    if (!g.map.translation.is_zero())
      throw ModelError("nu_oracle: expected a linear point group");
    Reflection r{e, {}, {}};
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        r.m[i][j] = to_long(g.map.linear(i, j));
    refl.push_back(std::move(r));
  }

  // Every x = a / den in [0,1)^8.  For a fixed x the stabilizing element is
  // t_γ g with γ = x - g x, an integral vector.
  OracleResult result;
  std::array<long, 8> a{};
  for (;;) {
    ++result.points_scanned;
    for (Reflection& r : refl) {
      std::array<long, 8> gamma{};
      bool fixed = true;
      for (std::size_t i = 0; i < d && fixed; ++i) {
        long y = 0;
        for (std::size_t j = 0; j < d; ++j)
          y += r.m[i][j] * a[j];
        long diff = a[i] - y;
        if (diff % den != 0)
          fixed = false;
        else
          gamma[i] = diff / den;
      }
      if (fixed)
        r.gammas.insert(gamma);
    }
    std::size_t i = 0;
    while (i < d && ++a[i] == den)
      a[i++] = 0;
    if (i == d)
      break;
  }

  // One generator (g, γ_0) per reflection; the rest enter as translations
  // g^-1 (γ - γ_0).  Other lifts of the same point add g^-1 (I - g) Γ.
  std::vector<AffineIsometry> gens;
  const IntMatrix id = IntMatrix::identity(d);
  for (const Reflection& r : refl) {
    if (r.gammas.empty())
      continue;
    result.stabilizer_elements += r.gammas.size();
    const IntMatrix& g = model.group.element(r.index).map.linear;
    const IntMatrix ginv = rational_inverse(g).numerator;
    auto to_vec = [](const std::array<long, 8>& v) {
      IntVector out;
      for (long x : v)
        out.emplace_back(x);
      return out;
    };
    const IntVector g0 = to_vec(*r.gammas.begin());
    gens.push_back({g, RatVector(g0)});
    for (const auto& gamma : r.gammas) {
      IntVector diff = to_vec(gamma);
      for (std::size_t j = 0; j < d; ++j)
        diff[j] -= g0[j];
      gens.push_back(AffineIsometry::translation_by(RatVector(mat_vec(ginv, diff))));
    }
    const IntMatrix lift = ginv * (id - g);
    for (std::size_t j = 0; j < d; ++j)
      gens.push_back(AffineIsometry::translation_by(RatVector(lift.col(j))));
  }
  std::vector<IntMatrix> image;
  result.lattice = translation_subgroup(d, gens, &image);
  result.surjects_onto_point_group = image.size() == model.group.order();
  return result;
}

} // namespace symorb

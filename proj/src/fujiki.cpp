#include "symorb/fujiki.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "symorb/error.hpp"
#include "symorb/normal_form.hpp"

namespace symorb {

FiniteAbelianGroup FujikiCase::h_group() const {
  if (kind == SurfaceKind::k3)
    return FiniteAbelianGroup::from_cyclic_orders(k3_factors);
  IntVector orders(translation_rank, Integer(translation_prime()));
  orders.push_back(linear_order);
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

unsigned FujikiCase::translation_prime() const {
  switch (linear_order) {
  case 2:
  case 4:
    return 2;
  case 3:
    return 3;
  default:
    return 1;
  }
}

namespace {

FujikiCase torus(unsigned n, unsigned m, std::string label, bool primitive = true) {
  FujikiCase c;
  c.kind = SurfaceKind::torus;
  c.linear_order = n;
  c.translation_rank = m;
  c.label = std::move(label);
  c.primitive = primitive;
  return c;
}

FujikiCase k3(IntVector factors, std::string label) {
  FujikiCase c;
  c.kind = SurfaceKind::k3;
  c.k3_factors = std::move(factors);
  c.label = std::move(label);
  return c;
}

std::vector<FujikiCase> make_catalog() {
  std::vector<FujikiCase> c = {
      torus(3, 0, "t-Z3"),
      torus(3, 1, "t-Z3xZ3"),
      torus(3, 2, "t-Z3^3"),
      torus(4, 0, "t-Z4"),
      torus(4, 1, "t-Z2xZ4"),
      torus(4, 2, "t-Z2^2xZ4"),
      torus(6, 0, "t-Z6"),
      torus(2, 0, "t-Z2", false),
      torus(2, 1, "t-Z2xZ2", false),
      torus(2, 2, "t-Z2^2xZ2", false),
      torus(2, 3, "t-Z2^3xZ2", false),
      torus(2, 4, "t-Z2^4xZ2", false),
  };
  const std::vector<std::pair<IntVector, std::string>> k3s = {
      {{}, "k3-1"},
      {make_int_vector({2}), "k3-Z2"},
      {make_int_vector({2, 2}), "k3-Z2xZ2"},
      {make_int_vector({2, 2, 2}), "k3-Z2xZ2xZ2"},
      {make_int_vector({2, 2, 2, 2}), "k3-Z2xZ2xZ2xZ2"},
      {make_int_vector({3}), "k3-Z3"},
      {make_int_vector({3, 3}), "k3-Z3xZ3"},
      {make_int_vector({4}), "k3-Z4"},
      {make_int_vector({4, 4}), "k3-Z4xZ4"},
      {make_int_vector({5}), "k3-Z5"},
      {make_int_vector({7}), "k3-Z7"},
      {make_int_vector({8}), "k3-Z8"},
      {make_int_vector({6}), "k3-Z6"},
      {make_int_vector({2, 4}), "k3-Z2xZ4"},
      {make_int_vector({2, 6}), "k3-Z2xZ6"},
  };
  for (const auto& [f, label] : k3s)
    c.push_back(k3(f, label));
  return c;
}

// "Z2^3" -> "Z2xZ2xZ2" inside a label.
std::string expand_powers(std::string_view label) {
  std::string out;
  std::size_t i = 0;
  while (i < label.size()) {
    if (label[i] == 'Z') {
      std::size_t j = i + 1;
      while (j < label.size() && std::isdigit(static_cast<unsigned char>(label[j])))
        ++j;
      std::string factor(label.substr(i, j - i));
      unsigned reps = 1;
      if (j < label.size() && label[j] == '^') {
        std::size_t k = j + 1;
        while (k < label.size() && std::isdigit(static_cast<unsigned char>(label[k])))
          ++k;
        reps = static_cast<unsigned>(std::stoul(std::string(label.substr(j + 1, k - j - 1))));
        j = k;
      }
      for (unsigned r = 0; r < reps; ++r)
        out += (r ? "x" : "") + factor;
      i = j;
    } else {
      out += label[i++];
    }
  }
  return out;
}

} // namespace

const std::vector<FujikiCase>& catalog() {
  static const std::vector<FujikiCase> c = make_catalog();
  return c;
}

std::vector<FujikiCase> torus_table_cases() {
  std::vector<FujikiCase> out;
  for (const auto& c : catalog())
    if (c.kind == SurfaceKind::torus && c.primitive)
      out.push_back(c);
  return out;
}

std::vector<FujikiCase> k3_cases() {
  std::vector<FujikiCase> out;
  for (const auto& c : catalog())
    if (c.kind == SurfaceKind::k3)
      out.push_back(c);
  return out;
}

std::optional<FujikiCase> find_case(std::string_view label) {
  std::string wanted = expand_powers(label);
  for (const auto& c : catalog())
    if (c.label == label || expand_powers(c.label) == wanted)
      return c;
  return std::nullopt;
}

std::vector<std::string> catalog_labels() {
  std::vector<std::string> out;
  for (const auto& c : catalog())
    out.push_back(c.label);
  return out;
}

IntMatrix linear_part(unsigned n) {
  // Order-3 rotation on each complex factor: e1 -> e2, e2 -> -e1 - e2.
  const IntMatrix c3{{0, -1}, {1, -1}};
  // Order 4: e1 -> e2, e2 -> -e1.
  const IntMatrix c4{{0, -1}, {1, 0}};
  switch (n) {
  case 2:
    return -IntMatrix::identity(4);
  case 3:
    return IntMatrix::block_diagonal(c3, c3);
  case 4:
    return IntMatrix::block_diagonal(c4, c4);
  case 6:
    return -IntMatrix::block_diagonal(c3, c3);
  default:
    throw std::invalid_argument("no linear part of order " + std::to_string(n));
  }
}

std::vector<RatVector> sigma_fixed_torsion(const IntMatrix& sigma, unsigned order) {
  const std::size_t d = sigma.rows();
  std::vector<RatVector> out;
  IntVector q(d);
  for (;;) {
    RatVector v(q, order);
    if ((mat_vec(sigma, v) - v).is_integral())
      out.push_back(v);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++q[i] < order)
        break;
      q[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
    if (d == 0)
      return out;
  }
}

namespace {

Lattice span_mod_lambda(const std::vector<RatVector>& gens, std::size_t dim) {
  std::vector<RatVector> all = gens;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    all.emplace_back(e);
  }
  return Lattice::generated_by(all, dim);
}

void check_hprime_generator(const IntMatrix& sigma, const RatVector& v, unsigned p) {
  if (!(mat_vec(sigma, v) - v).is_integral())
    throw ModelError("H' generator " + v.str() + " is not fixed by the linear part");
  if (v.denominator() != p)
    throw ModelError("H' generator " + v.str() + " does not have order " + std::to_string(p));
}

} // namespace

std::vector<RatVector> default_hprime_generators(const FujikiCase& fcase) {
  if (fcase.kind != SurfaceKind::torus)
    throw std::invalid_argument(fcase.label + " is not a torus case");
  const unsigned m = fcase.translation_rank;
  if (m == 0)
    return {};
  const unsigned p = fcase.translation_prime();
  if (p == 1)
    throw ModelError(fcase.label + ": no translation part is possible for this linear order");
  const IntMatrix sigma = linear_part(fcase.linear_order);
  std::vector<RatVector> candidates;
  if (fcase.linear_order == 4) {
    candidates.push_back(RatVector::from_fractions({{1, 2}, {1, 2}, {0, 1}, {0, 1}}));
    candidates.push_back(RatVector::from_fractions({{0, 1}, {0, 1}, {1, 2}, {1, 2}}));
  }
  for (const RatVector& v : sigma_fixed_torsion(sigma, p))
    if (!v.is_zero())
      candidates.push_back(v);
  std::vector<RatVector> chosen;
  for (const RatVector& v : candidates) {
    if (chosen.size() == m)
      break;
    if (!span_mod_lambda(chosen, 4).contains(v))
      chosen.push_back(v);
  }
  if (chosen.size() != m)
    throw ModelError(fcase.label + ": only " + std::to_string(chosen.size()) +
                     " independent sigma-fixed translations available");
  return chosen;
}

std::vector<std::vector<RatVector>> hprime_choices(const FujikiCase& fcase) {
  const unsigned m = fcase.translation_rank;
  if (m == 0)
    return {{}};
  const unsigned p = fcase.translation_prime();
  std::vector<RatVector> pts;
  for (const RatVector& v : sigma_fixed_torsion(linear_part(fcase.linear_order), p))
    if (!v.is_zero())
      pts.push_back(v);
  std::vector<std::vector<RatVector>> out;
  std::vector<Lattice> seen;
  std::vector<RatVector> current;
  // Depth-first over increasing index tuples of independent generators.
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == m) {
      Lattice span = span_mod_lambda(current, 4);
      if (std::find(seen.begin(), seen.end(), span) == seen.end()) {
        seen.push_back(span);
        out.push_back(current);
      }
      return;
    }
    Lattice span = span_mod_lambda(current, 4);
    for (std::size_t i = start; i < pts.size(); ++i) {
      if (span.contains(pts[i]))
        continue;
      current.push_back(pts[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

RatVector TorusModel::to_chart(const IntVector& gamma_coords) const {
  return to_chart(RatVector(gamma_coords));
}

RatVector TorusModel::to_chart(const RatVector& gamma_coords) const {
  // x = B^T c with the basis rows B = numerators / denominator.
  const IntMatrix bt = gamma_chart.numerators().transpose();
  return mat_vec(bt, gamma_coords) / gamma_chart.denominator();
}

std::optional<IntVector> TorusModel::to_gamma(const RatVector& chart_vector) const {
  return gamma_chart.coordinates(chart_vector);
}

ScaledMatrix TorusModel::rebase(const IntMatrix& chart_map) const {
  const IntMatrix bt = gamma_chart.numerators().transpose();
  ScaledMatrix inv = rational_inverse(bt);
  IntMatrix num = inv.numerator * chart_map * bt;
  // Reduce num / inv.denominator to lowest terms.
  Integer g = inv.denominator;
  for (std::size_t i = 0; i < num.rows(); ++i)
    for (std::size_t j = 0; j < num.cols(); ++j)
      g = gcd_of(g, num(i, j));
  ScaledMatrix out{IntMatrix(num.rows(), num.cols()), inv.denominator / g};
  for (std::size_t i = 0; i < num.rows(); ++i)
    for (std::size_t j = 0; j < num.cols(); ++j)
      out.numerator(i, j) = num(i, j) / g;
  return out;
}

TorusModel build_torus_model(const FujikiCase& fcase) {
  return build_torus_model(fcase, default_hprime_generators(fcase));
}

TorusModel build_torus_model(const FujikiCase& fcase, const std::vector<RatVector>& hprime_generators) {
  if (fcase.kind != SurfaceKind::torus)
    throw std::invalid_argument(fcase.label + " is not a torus case");
  const unsigned n = fcase.linear_order;
  TorusModel model;
  model.fcase = fcase;
  model.sigma = linear_part(n);
  if (matrix_order(model.sigma, 12) != n)
    throw ModelError(fcase.label + ": linear part does not have order " + std::to_string(n));
  if (determinant(model.sigma) != 1)
    throw ModelError(fcase.label + ": linear part is not orientation preserving");

  const unsigned p = fcase.translation_prime();
  for (const RatVector& v : hprime_generators) {
    if (v.size() != 4)
      throw ModelError("H' generator " + v.str() + " is not a 4-vector");
    check_hprime_generator(model.sigma, v, p);
    model.hprime_generators.push_back(v.reduced_mod_one());
  }
  model.hprime_order = index(span_mod_lambda(model.hprime_generators, 4), Lattice::standard(4));
  Integer expected_order = 1;
  for (unsigned i = 0; i < fcase.translation_rank; ++i)
    expected_order *= p;
  if (model.hprime_order != expected_order)
    throw ModelError(fcase.label + ": H' generators span a group of order " + model.hprime_order.get_str() +
                     ", expected " + expected_order.get_str());

  // Γ = Λ^2 + Z{(γ, -γ) : γ in H'}.
  std::vector<RatVector> gens;
  for (std::size_t i = 0; i < 8; ++i) {
    IntVector e(8);
    e[i] = 1;
    gens.emplace_back(e);
  }
  for (const RatVector& v : model.hprime_generators) {
    RatVector w = RatVector(IntVector(8));
    IntVector num(8);
    for (std::size_t i = 0; i < 4; ++i) {
      num[i] = v.numerators()[i];
      num[4 + i] = -v.numerators()[i];
    }
    gens.emplace_back(num, v.denominator());
  }
  model.gamma_chart = Lattice::generated_by(gens, 8);
  if (index(model.gamma_chart, Lattice::standard(8)) != model.hprime_order)
    throw ModelError(fcase.label + ": [Γ : Λ^2] differs from |H'|");

  const IntMatrix sigma_inv = rational_inverse(model.sigma).numerator;
  const IntMatrix id4 = IntMatrix::identity(4);
  IntMatrix sigma_chart = IntMatrix::block_diagonal(model.sigma, sigma_inv);
  IntMatrix iota_chart(8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    iota_chart(i, 4 + i) = 1;
    iota_chart(4 + i, i) = 1;
  }
  auto integral = [&](const IntMatrix& chart_map, const char* name) {
    ScaledMatrix r = model.rebase(chart_map);
    if (r.denominator != 1)
      throw ModelError(fcase.label + ": " + name + " does not preserve Γ");
    Integer det = determinant(r.numerator);
    if (det != 1 && det != -1)
      throw ModelError(fcase.label + ": " + name + " is not unimodular on Γ");
    return r.numerator;
  };
  model.sigma_hat = integral(sigma_chart, "σ̂");
  model.iota_hat = integral(iota_chart, "ι̂");
  model.phi_hat = model.rebase(IntMatrix::block_diagonal(id4, model.sigma));

  const IntMatrix id8 = IntMatrix::identity(8);
  if (power(model.sigma_hat, n) != id8 || model.iota_hat * model.iota_hat != id8 ||
      model.iota_hat * model.sigma_hat * model.iota_hat != power(model.sigma_hat, n - 1))
    throw ModelError(fcase.label + ": σ̂, ι̂ violate the dihedral relations");

  std::vector<PointGroupElement> elems;
  IntMatrix rot = id8;
  for (unsigned k = 0; k < n; ++k) {
    elems.push_back({AffineIsometry::linear_map(rot), "s^" + std::to_string(k), false});
    elems.push_back({AffineIsometry::linear_map(model.iota_hat * rot), "i*s^" + std::to_string(k), true});
    rot = model.sigma_hat * rot;
  }
  Integer bound = std::lcm(2u, n);
  if (fcase.translation_rank > 0)
    bound = lcm_of(bound, Integer(p));
  model.group = CrystalModel(8, std::move(elems), bound);
  return model;
}

CrystalModel kummer_model() {
  std::vector<PointGroupElement> elems = {
      {AffineIsometry::identity(4), "id", false},
      {AffineIsometry::linear_map(-IntMatrix::identity(4)), "tau", false},
  };
  return CrystalModel(4, std::move(elems), 2);
}

std::size_t AbstractGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b)
    if (multiply(a, b) == identity)
      return b;
  throw std::logic_error("AbstractGroup: element without inverse");
}

bool AbstractGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (multiply(a, b) != multiply(b, a))
        return false;
  return true;
}

AbstractGroup build_semidirect_with_inversion(const IntVector& h_factors) {
  std::vector<long> mods;
  for (const Integer& q : h_factors)
    mods.push_back(to_long(q));
  // Mixed-radix encoding of H; element index = 2 * h + e for h ι^e.
  std::size_t h_order = 1;
  for (long q : mods)
    h_order *= static_cast<std::size_t>(q);
  auto digits = [&](std::size_t h) {
    std::vector<long> d(mods.size());
    for (std::size_t i = 0; i < mods.size(); ++i) {
      d[i] = static_cast<long>(h % mods[i]);
      h /= mods[i];
    }
    return d;
  };
  auto encode = [&](const std::vector<long>& d) {
    std::size_t h = 0;
    for (std::size_t i = mods.size(); i-- > 0;)
      h = h * mods[i] + static_cast<std::size_t>(((d[i] % mods[i]) + mods[i]) % mods[i]);
    return h;
  };

  AbstractGroup g;
  const std::size_t n = 2 * h_order;
  for (std::size_t h = 0; h < h_order; ++h) {
    std::string tuple = "(";
    auto d = digits(h);
    for (std::size_t i = 0; i < d.size(); ++i)
      tuple += (i ? "," : "") + std::to_string(d[i]);
    tuple += ")";
    g.labels.push_back(tuple);
    g.labels.push_back(tuple + "*i");
    g.h_elements.push_back(2 * h);
    g.iota_coset.push_back(2 * h + 1);
  }
  g.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // h1 ι^e1 h2 ι^e2 = (h1 + (-1)^e1 h2) ι^(e1+e2)
      auto d1 = digits(a / 2), d2 = digits(b / 2);
      const long sign = (a % 2) ? -1 : 1;
      for (std::size_t i = 0; i < d1.size(); ++i)
        d1[i] += sign * d2[i];
      g.table[a * n + b] = 2 * encode(d1) + ((a + b) % 2);
    }
  g.identity = 0;
  g.iota = 1;
  return g;
}

AbstractGroup build_k3_group(const FujikiCase& fcase) {
  if (fcase.kind != SurfaceKind::k3)
    throw std::invalid_argument(fcase.label + " is not a K3 case");
  return build_semidirect_with_inversion(fcase.k3_factors);
}

} // namespace symorb

#include "symorb/lattice.hpp"

#include <sstream>

#include "symorb/error.hpp"
#include "symorb/normal_form.hpp"

namespace symorb {

Lattice Lattice::generated_by(const IntMatrix& generators, const Integer& denominator) {
  if (denominator <= 0)
    throw std::domain_error("Lattice: denominator must be positive");
  HermiteForm h = hnf(generators);
  Lattice l;
  l.dim_ = generators.cols();
  l.numerators_ = h.form.submatrix(0, h.rank, 0, generators.cols());
  Integer g = denominator;
  for (std::size_t i = 0; i < l.numerators_.rows() && g != 1; ++i)
    for (std::size_t j = 0; j < l.numerators_.cols() && g != 1; ++j)
      g = gcd_of(g, l.numerators_(i, j));
  l.denominator_ = denominator / g;
  if (g != 1)
    for (std::size_t i = 0; i < l.numerators_.rows(); ++i)
      for (std::size_t j = 0; j < l.numerators_.cols(); ++j)
        mpz_divexact(l.numerators_(i, j).get_mpz_t(), l.numerators_(i, j).get_mpz_t(), g.get_mpz_t());
  if (l.rank() == 0)
    l.denominator_ = 1;
  return l;
}

Lattice Lattice::generated_by(const std::vector<RatVector>& generators, std::size_t dim) {
  Integer den = 1;
  for (const RatVector& v : generators) {
    if (v.size() != dim)
      throw DimensionMismatch("Lattice generator has wrong dimension");
    den = lcm_of(den, v.denominator());
  }
  IntMatrix m(generators.size(), dim);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    Integer f = den / generators[i].denominator();
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = generators[i].numerators()[j] * f;
  }
  return generated_by(m, den);
}

Lattice Lattice::standard(std::size_t dim) { return generated_by(IntMatrix::identity(dim)); }

Lattice Lattice::zero(std::size_t dim) { return generated_by(IntMatrix(0, dim)); }

std::vector<RatVector> Lattice::basis() const {
  std::vector<RatVector> b;
  for (std::size_t i = 0; i < rank(); ++i)
    b.push_back(basis_vector(i));
  return b;
}

RatVector Lattice::basis_vector(std::size_t i) const {
  return RatVector(numerators_.row(i), denominator_);
}

std::optional<IntVector> Lattice::coordinates(const RatVector& v) const {
  if (v.size() != dim_)
    throw DimensionMismatch("Lattice::coordinates: dimension mismatch");
  // v * denominator must be an integer combination of the numerator rows.
  Integer scaled_den = v.denominator();
  if (!mpz_divisible_p(denominator_.get_mpz_t(), scaled_den.get_mpz_t()))
    return std::nullopt;
  Integer f = denominator_ / scaled_den;
  IntVector w(dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    w[j] = v.numerators()[j] * f;
  // Forward substitution along the echelon pivots.
  IntVector c(rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    while (numerators_(i, col) == 0)
      ++col;
    const Integer& pivot = numerators_(i, col);
    if (!mpz_divisible_p(w[col].get_mpz_t(), pivot.get_mpz_t()))
      return std::nullopt;
    c[i] = w[col] / pivot;
    for (std::size_t j = col; j < dim_; ++j)
      w[j] -= c[i] * numerators_(i, j);
  }
  for (const Integer& x : w)
    if (x != 0)
      return std::nullopt;
  return c;
}

bool Lattice::contains(const Lattice& sub) const {
  if (sub.dim() != dim_)
    throw DimensionMismatch("Lattice::contains: dimension mismatch");
  for (std::size_t i = 0; i < sub.rank(); ++i)
    if (!contains(sub.basis_vector(i)))
      return false;
  return true;
}

Lattice Lattice::image(const IntMatrix& m) const {
  if (m.cols() != dim_)
    throw DimensionMismatch("Lattice::image: matrix has wrong number of columns");
  return generated_by(numerators_ * m.transpose(), denominator_);
}

std::string Lattice::str() const {
  std::ostringstream os;
  os << "Lattice(dim=" << dim_ << ", rank=" << rank() << ", basis=" << numerators_;
  if (denominator_ != 1)
    os << " / " << denominator_.get_str();
  os << ")";
  return os.str();
}

Lattice kernel_basis(const IntMatrix& m) {
  HermiteForm h = hnf(m.transpose());
  IntMatrix k(m.cols() - h.rank, m.cols());
  for (std::size_t i = h.rank; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      k(i - h.rank, j) = h.transform(i, j);
  return Lattice::generated_by(k);
}

namespace {

IntMatrix scaled_numerators(const Lattice& l, const Integer& den) {
  return (den / l.denominator()) * l.numerators();
}

IntMatrix stack(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      s(a.rows() + i, j) = b(i, j);
  return s;
}

} // namespace

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("lattice_sum: ambient dimensions differ");
  Integer den = lcm_of(a.denominator(), b.denominator());
  return Lattice::generated_by(stack(scaled_numerators(a, den), scaled_numerators(b, den)), den);
}

Lattice lattice_sum(const std::vector<Lattice>& parts) {
  if (parts.empty())
    throw std::invalid_argument("lattice_sum: empty list");
  Lattice s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    s = lattice_sum(s, parts[i]);
  return s;
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("lattice_intersection: ambient dimensions differ");
  Integer den = lcm_of(a.denominator(), b.denominator());
  IntMatrix an = scaled_numerators(a, den);
  IntMatrix bn = scaled_numerators(b, den);
  // x = c_a A = c_b B  <=>  (c_a, c_b) [A; -B] = 0.
  Lattice rel = kernel_basis(stack(an, -bn).transpose());
  IntMatrix gens(rel.rank(), a.dim());
  for (std::size_t i = 0; i < rel.rank(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.rank(); ++k)
        gens(i, j) += rel.numerators()(i, k) * an(k, j);
  return Lattice::generated_by(gens, den);
}

IntMatrix relative_coordinates(const Lattice& lattice, const Lattice& sub) {
  if (lattice.dim() != sub.dim())
    throw DimensionMismatch("relative_coordinates: ambient dimensions differ");
  IntMatrix c(sub.rank(), lattice.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    RatVector v = sub.basis_vector(i);
    auto coords = lattice.coordinates(v);
    if (!coords) {
      std::vector<std::string> entries;
      for (std::size_t j = 0; j < v.size(); ++j)
        entries.push_back(v[j].get_str());
      throw ContainmentError("sublattice generator " + v.str() + " is not in the lattice", entries);
    }
    for (std::size_t j = 0; j < lattice.rank(); ++j)
      c(i, j) = (*coords)[j];
  }
  return c;
}

FiniteAbelianGroup quotient(const Lattice& lattice, const Lattice& sub) {
  IntMatrix c = relative_coordinates(lattice, sub);
  SmithForm s = snf(c);
  IntVector orders = s.invariant_factors();
  for (std::size_t i = s.rank; i < lattice.rank(); ++i)
    orders.push_back(0);
  return FiniteAbelianGroup::from_cyclic_orders(orders);
}

Integer index(const Lattice& lattice, const Lattice& sub) {
  if (lattice.rank() != sub.rank())
    throw std::invalid_argument("index: ranks differ");
  return abs(determinant(relative_coordinates(lattice, sub)));
}

} // namespace symorb

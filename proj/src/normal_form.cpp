#include "symorb/normal_form.hpp"

#include "symorb/error.hpp"

namespace symorb {

namespace {

// Index of the row in [from, rows) whose entry in column j is nonzero with
// minimal absolute value, or rows if the column is zero there.
std::size_t min_abs_row(const IntMatrix& a, std::size_t from, std::size_t j) {
  std::size_t best = a.rows();
  for (std::size_t i = from; i < a.rows(); ++i)
    if (a(i, j) != 0 && (best == a.rows() || mpz_cmpabs(a(i, j).get_mpz_t(), a(best, j).get_mpz_t()) < 0))
      best = i;
  return best;
}

// The rows of the transform past the rank span the left kernel and are
// determined only up to a unimodular change; replace them by their own
// Hermite form and size-reduce the other rows against it.
void tidy_kernel_rows(HermiteForm& out) {
  IntMatrix& u = out.transform;
  const std::size_t r = out.rank, n = u.rows();
  HermiteForm k = hnf(u.submatrix(r, n - r, 0, u.cols()));
  for (std::size_t i = 0; i < n - r; ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      u(r + i, j) = k.form(i, j);
  for (std::size_t i = 0; i < k.rank; ++i) {
    std::size_t c = 0;
    while (u(r + i, c) == 0)
      ++c;
    for (std::size_t row = 0; row < r; ++row) {
      Integer q = floor_div(u(row, c), u(r + i, c));
      if (q != 0)
        u.add_row_multiple(row, r + i, -q);
    }
  }
}

} // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.form;
  IntMatrix& u = out.transform;
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    for (;;) {
      std::size_t p = min_abs_row(h, r, j);
      if (p == h.rows())
        break;
      h.swap_rows(r, p);
      u.swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, j) == 0)
          continue;
        Integer q = floor_div(h(i, j), h(r, j));
        h.add_row_multiple(i, r, -q);
        u.add_row_multiple(i, r, -q);
        if (h(i, j) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (h(r, j) == 0)
      continue;
    if (h(r, j) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, j), h(r, j));
      h.add_row_multiple(i, r, -q);
      u.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  if (r < h.rows() && r > 0)
    tidy_kernel_rows(out);
  return out;
}

IntVector SmithForm::invariant_factors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i)
    d.push_back(diagonal(i, i));
  return d;
}

namespace {

bool at_most_one_per_line(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    int count = 0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      count += a(i, j) != 0;
    if (count > 1)
      return false;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    int count = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      count += a(i, j) != 0;
    if (count > 1)
      return false;
  }
  return true;
}

// rows (i, j) of m <- [[s, t], [-y, x]] applied to them.
void mix_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& s, const Integer& t, const Integer& x,
              const Integer& y) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer a = m(i, c), b = m(j, c);
    m(i, c) = s * a + t * b;
    m(j, c) = x * b - y * a;
  }
}

} // namespace

// Alternating row and column Hermite forms until the matrix has at most one
// nonzero entry per row and column, then a permutation and gcd/lcm steps.
// Each Hermite form keeps its entries reduced, which keeps the transforms
// small where plain pivoting blows up exponentially.
SmithForm snf(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = out.diagonal;
  IntMatrix& u = out.left;
  IntMatrix& v = out.right;
  for (bool rows_next = true; !at_most_one_per_line(d); rows_next = !rows_next) {
    if (rows_next) {
      HermiteForm h = hnf(d);
      d = std::move(h.form);
      u = h.transform * u;
    } else {
      HermiteForm h = hnf(d.transpose());
      d = h.form.transpose();
      v = v * h.transform.transpose();
    }
  }

  // Move the nonzero entry of row i to (i, i), nonzero rows first.
  std::size_t r = 0;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    std::size_t j = 0;
    while (j < d.cols() && d(i, j) == 0)
      ++j;
    if (j == d.cols())
      continue;
    d.swap_rows(r, i);
    u.swap_rows(r, i);
    d.swap_cols(r, j);
    v.swap_cols(r, j);
    if (d(r, r) < 0) {
      d.negate_row(r);
      u.negate_row(r);
    }
    ++r;
  }
  out.rank = r;

  // (a, b) -> (gcd, lcm) with L = [[s, t], [-b/g, a/g]], R = [[1, -t b/g], [1, s a/g]].
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const Integer a = d(i, i), b = d(j, j);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()))
        continue;
      Integer s, t;
      Integer g = extended_gcd(a, b, s, t);
      Integer x = a / g, y = b / g;
      mix_rows(u, i, j, s, t, x, y);
      for (std::size_t row = 0; row < v.rows(); ++row) {
        Integer p = v(row, i), q = v(row, j);
        v(row, i) = p + q;
        v(row, j) = s * x * q - t * y * p;
      }
      d(i, i) = g;
      d(j, j) = a * y;
    }
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows())
    throw DimensionMismatch("solve_integer: right-hand side has wrong length");
  SmithForm s = snf(m);
  IntVector c = mat_vec(s.left, b);
  IntVector y(m.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), s.diagonal(i, i).get_mpz_t()))
        return std::nullopt;
      y[i] = c[i] / s.diagonal(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return mat_vec(s.right, y);
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rank; }

} // namespace symorb

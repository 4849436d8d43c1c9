// Dense matrices of arbitrary-precision integers.
//
// Matrices act on column vectors: mat_vec(M, x) = M x.  Lattice bases, on the
// other hand, are stored one basis vector per row (see lattice.hpp).

#ifndef SYMORB_INT_MATRIX_HPP_
#define SYMORB_INT_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "integer.hpp"

namespace symorb {

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  IntMatrix transpose() const;
  IntMatrix submatrix(std::size_t row0, std::size_t nrows, std::size_t col0, std::size_t ncols) const;

  // Elementary operations, used by the normal-form algorithms.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);  // row_dst += k row_src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);  // col_dst += k col_src
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool operator==(const IntMatrix& o) const = default;

  std::string str() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Integer& k, const IntMatrix& a);
IntVector mat_vec(const IntMatrix& m, const IntVector& x);
IntMatrix power(const IntMatrix& m, unsigned exponent);

// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

// Inverse over the rationals as numerator / denominator with denominator > 0
// and gcd(content(numerator), denominator) = 1.  Throws std::domain_error
// for singular input.
struct ScaledMatrix {
  IntMatrix numerator;
  Integer denominator = 1;
};
ScaledMatrix rational_inverse(const IntMatrix& m);

// Multiplicative order of a square integer matrix, or 0 if it exceeds `bound`.
unsigned matrix_order(const IntMatrix& m, unsigned bound);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

} // namespace symorb

#endif

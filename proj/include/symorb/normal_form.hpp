// Hermite and Smith normal forms with unimodular transforms, and integer
// linear solving built on top of them.

#ifndef SYMORB_NORMAL_FORM_HPP_
#define SYMORB_NORMAL_FORM_HPP_

#include <optional>

#include "int_matrix.hpp"

namespace symorb {

// Row Hermite normal form: transform * input == form.
//
// `form` is in row echelon form, each pivot is positive, entries above a
// pivot lie in [0, pivot), and zero rows come last.  `rank` counts the
// nonzero rows.
struct HermiteForm {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
};
HermiteForm hnf(const IntMatrix& m);

// Smith normal form: left * input * right == diagonal.
//
// `diagonal` carries d_1 | d_2 | ... on its main diagonal, all >= 0, with the
// zeros last.  Pivots are chosen by minimal absolute value.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::size_t rank = 0;

  // d_1 ... d_rank (the nonzero diagonal entries).
  IntVector invariant_factors() const;
};
SmithForm snf(const IntMatrix& m);

// An integer x with m x == b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

std::size_t rank(const IntMatrix& m);

} // namespace symorb

#endif

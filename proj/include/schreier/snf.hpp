#pragma once

#include <gmpxx.h>

#include <vector>

#include "schreier/integer_matrix.hpp"
#include "schreier/parallel.hpp"

namespace schreier {

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntegerMatrix diagonal;
  IntegerMatrix left;   // U
  IntegerMatrix right;  // V
  std::vector<mpz_class> invariant_factors;  // the nonzero diagonal entries
  std::size_t rank = 0;
};

// Pivot: smallest nonzero absolute value in the remaining block, ties to the
// lowest (row, col).  The serial and parallel paths perform the same
// operations and return identical results.
SmithForm smith_normal_form(const IntegerMatrix& a, Execution exec = Execution::parallel);

}  // namespace schreier

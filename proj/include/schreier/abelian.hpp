#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schreier/catalog.hpp"
#include "schreier/integer_matrix.hpp"
#include "schreier/parallel.hpp"
#include "schreier/snf.hpp"
#include "schreier/tietze.hpp"

namespace schreier {

// Sorted by column, no zero entries.
using SparseRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

// Exponent-sum matrix: one row per relator, one column per generator.
struct RelationMatrix {
  std::vector<Generator> columns;  // sorted
  std::vector<SparseRow> rows;

  std::uint32_t column_of(const Generator& g) const;  // throws if absent
  IntegerMatrix dense() const;
  // One line per row, entries separated by spaces.
  std::string to_text() const;
};

SparseRow exponent_sums(const Word& w, const std::vector<Generator>& columns);

RelationMatrix relation_matrix(const TruncatedPresentation& p);
RelationMatrix relation_matrix(const PresentationSchema& finite);  // bounded alphabets only

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, in order

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};
std::string to_string(const AbelianInvariants& a);

AbelianInvariants invariants_of(const SmithForm& f, std::size_t columns);

// Row lattice of a relation matrix.  Rows with a +-1 entry are used as
// pivots and their column is eliminated from the remaining rows (greedy,
// row order, fewest occupied rows first); the residue goes to dense SNF.
class LatticeReducer {
 public:
  LatticeReducer(std::size_t columns, std::vector<SparseRow> rows,
                 Execution exec = Execution::parallel);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size() + residual_.rank; }
  std::size_t unit_pivots() const { return pivots_.size(); }
  AbelianInvariants invariants() const;

  // Whether the vector lies in the row lattice.
  bool contains(SparseRow v) const;
  bool column_in_lattice(std::uint32_t column) const;

 private:
  struct Pivot {
    std::uint32_t column;
    SparseRow row;  // entry at column is +-1
  };
  std::size_t columns_;
  std::vector<Pivot> pivots_;
  std::vector<std::uint32_t> residual_columns_;        // non-pivot columns
  std::vector<std::int64_t> residual_index_;           // column -> residual position or -1
  SmithForm residual_;
};

AbelianInvariants abelian_invariants(const TruncatedPresentation& p,
                                     Execution exec = Execution::parallel);
AbelianInvariants abelian_invariants(const PresentationSchema& finite,
                                     Execution exec = Execution::parallel);

// Torsion-free rank of the subgroup generated by the given columns in the
// abelianization: |S| - (rank A - rank A with the S columns deleted).
std::size_t image_rank(const RelationMatrix& m, const std::vector<Generator>& subset,
                       Execution exec = Execution::parallel);

struct PerfectnessVerdict {
  GroupFamily group;
  std::int64_t n = 0;
  std::int64_t window = 0;
  std::size_t generators = 0;
  std::size_t relators = 0;
  std::vector<Generator> interior;
  std::vector<Generator> not_forced;  // interior generators with nonzero image
  std::size_t interior_image_rank = 0;
  bool perfect_on_interior() const { return not_forced.empty(); }
};

// Abelianizes the truncated simplified derived presentation and checks
// which interior generators become trivial.  A negative outcome means only
// "not forced trivial at this window".
PerfectnessVerdict perfectness_window_check(GroupFamily g, std::int64_t n, std::int64_t window,
                                            Execution exec = Execution::parallel);

}  // namespace schreier

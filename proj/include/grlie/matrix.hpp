#ifndef GRLIE_MATRIX_HPP
#define GRLIE_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "grlie/tensor.hpp"

namespace grlie {

// Sparse integer matrix; rows hold (col, value) pairs sorted by column.
struct SparseIntMatrix {
  std::int64_t cols = 0;
  std::vector<std::vector<std::pair<std::int32_t, Int>>> rows;

  std::int64_t row_count() const { return static_cast<std::int64_t>(rows.size()); }
  std::int64_t nnz() const;
  void add_row(std::vector<std::pair<std::int32_t, Int>> row);  // sorts, drops zeros

  // coordinate triples "row col value", sorted
  void dump(std::ostream& os) const;
  static SparseIntMatrix load(std::istream& is);
};

struct SnfOptions {
  // below this column count the residual (non-unit-pivot) block goes dense
  std::int64_t dense_threshold = 2000;
};

// Nonzero elementary divisors d1 | d2 | ... over Z.
std::vector<Int> snf(SparseIntMatrix m, const SnfOptions& opts = {});

// Rank over Q (exact integer elimination).
std::int64_t exact_rank(SparseIntMatrix m, const SnfOptions& opts = {});

// Rank over F_p. Uses the dense SIMD elimination when the matrix fits
// (rows*cols <= dense_limit entries), sparse elimination otherwise.
struct ModularRankOptions {
  std::int64_t dense_limit = 1 << 24;
};
std::int64_t modular_rank(const SparseIntMatrix& m, std::uint32_t p,
                          const ModularRankOptions& opts = {});

// True iff row is in the row space of basis over Q. basis is consumed into
// echelon form on first use; helper for closure tests.
class RationalRowSpace {
 public:
  explicit RationalRowSpace(const SparseIntMatrix& m);
  bool contains(const std::vector<std::pair<std::int32_t, Int>>& row) const;
  std::int64_t rank() const { return static_cast<std::int64_t>(echelon_.size()); }

 private:
  // echelon rows over Q represented with integer entries (common denominator
  // cleared), keyed by leading column
  std::vector<std::vector<std::pair<std::int32_t, Int>>> echelon_;
};

}  // namespace grlie

#endif

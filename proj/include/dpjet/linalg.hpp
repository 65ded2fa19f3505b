#pragma once

// Exact row-space bookkeeping for the slice-wise oracles. Rows are sparse
// integer vectors; elimination is fraction-free with content removal.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "dpjet/arith.hpp"

namespace dpjet {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;  // sorted by column

/// Clears denominators of a rational row; drops zeros and sorts by column.
SparseRow integer_row(std::vector<std::pair<std::size_t, Rational>> entries);

class RowSpace {
 public:
  /// Reduce `row` against the current pivots and keep it if independent.
  /// Returns true when the rank grew.
  bool insert(SparseRow row);
  /// True when `row` lies in the current span (the space is not modified).
  bool contains(SparseRow row) const;
  std::size_t rank() const { return pivots_.size(); }

 private:
  SparseRow reduced(SparseRow row) const;
  std::map<std::size_t, SparseRow> pivots_;  // leading column -> row
};

std::size_t matrix_rank(std::vector<SparseRow> rows);

}  // namespace dpjet

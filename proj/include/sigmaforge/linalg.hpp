#pragma once

// Exact linear algebra over the rationals: a sparse incremental reduced
// row-echelon form and a few dense helpers.

#include "sigmaforge/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sigmaforge::linalg {

/// Sparse vector: (column, value) pairs, columns strictly increasing,
/// no zero values.
using SparseVec = std::vector<std::pair<int, Rational>>;

/// Reduced row-echelon form maintained under row insertion. The pivot of a
/// row is its smallest column; pivot entries are 1 and every pivot column
/// is zero in all other rows, so the form depends only on the row space.
///
/// With tracking enabled each stored row also records its expression as a
/// combination of the inserted rows, numbered by insertion order.
class Echelon {
public:
  explicit Echelon(int columns, bool track = false);

  int columns() const { return columns_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool tracking() const { return track_; }

  /// Returns true when the row was independent of the current span.
  bool insert(const SparseVec& row);

  /// Residual of v modulo the span (zero iff v lies in the span). The
  /// residual has no entries in pivot columns, so it is a canonical
  /// representative of v's class.
  SparseVec reduce(const SparseVec& v) const;

  /// Like reduce, also returning coefficients c with
  /// v - residual = sum_j c[j] * inserted_row_j. Requires tracking.
  std::pair<SparseVec, SparseVec> reduce_tracked(const SparseVec& v) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Rows keyed by pivot column.
  const std::map<int, SparseVec>& rows() const { return rows_; }
  std::vector<int> pivots() const;

  friend bool operator==(const Echelon& a, const Echelon& b)
  {
    return a.columns_ == b.columns_ && a.rows_ == b.rows_;
  }

private:
  int columns_;
  bool track_;
  int inserted_ = 0;
  std::map<int, SparseVec> rows_;
  std::map<int, SparseVec> combos_;
};

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec scale(const SparseVec& v, const Rational& a);
Rational entry(const SparseVec& v, int column);

using DenseMatrix = std::vector<std::vector<Rational>>;

/// In-place reduced row-echelon form; returns the pivot columns.
std::vector<int> rref(DenseMatrix& m);
int rank(DenseMatrix m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(DenseMatrix m, int columns);
/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(DenseMatrix m, const std::vector<Rational>& b,
                                           int columns);

} // namespace sigmaforge::linalg

#ifndef GLIE_MATRIX_HPP
#define GLIE_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "glie/rational.hpp"

namespace glie {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RationalMatrix from_columns(std::size_t rows, const std::vector<RationalVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  RationalVector column(std::size_t c) const;

  RationalVector apply(const RationalVector& v) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix scaled(const Rational& factor) const;
  bool is_zero() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with deterministic pivoting: the pivot of each
/// row is the first column that is nonzero in the remaining rows.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Canonical basis of the right null space, one vector per free column of the
/// RREF (ascending): 1 at the free column, minus the RREF column at the pivots.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Kernel of the vertical stack of `blocks`; every block must have `cols`
/// columns. Throws std::invalid_argument on a column-count mismatch.
std::vector<RationalVector> solve_homogeneous(std::span<const RationalMatrix> blocks, std::size_t cols);

// ---------------------------------------------------------------------------
// Sparse elimination engine used for large constraint systems.

struct SparseEntry {
  std::size_t col;
  Rational value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by column, no explicit zeros.
using SparseVector = std::vector<SparseEntry>;

/// Sorts, merges duplicate columns and drops zeros.
SparseVector normalize(std::vector<SparseEntry> entries);
SparseVector to_sparse(std::span<const Rational> dense);
RationalVector to_dense(const SparseVector& v, std::size_t n);

/// Homogeneous linear system in `cols` unknowns, accumulated row by row.
class SparseSystem {
 public:
  explicit SparseSystem(std::size_t cols) : cols_(cols) {}

  /// `row` must already be normalized; empty rows are dropped.
  void add_row(SparseVector row);
  void append(const RationalMatrix& block);

  std::size_t cols() const { return cols_; }
  const std::vector<SparseVector>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<SparseVector> rows_;
};

struct SparseKernel {
  std::size_t rank = 0;
  std::vector<SparseVector> basis;
};

/// RREF rows of the system, sorted by pivot column. Independent blocks of
/// unknowns (columns never sharing a row) are eliminated separately, on up to
/// `workers` threads; the output does not depend on the worker count.
std::vector<SparseVector> sparse_rref(const SparseSystem& system, unsigned workers = 1);

/// Same canonical basis as kernel_basis(), computed on the sparse engine.
SparseKernel sparse_kernel(const SparseSystem& system, unsigned workers = 1);

}  // namespace glie

#endif

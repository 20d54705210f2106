#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "drvkit/scalar.hpp"

namespace drvkit {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single coefficient ring.
class Matrix {
 public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  static Matrix from_rows(Ring ring, const std::vector<std::vector<long>>& rows);
  static Matrix from_rows(Ring ring, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Throws MismatchError if the value does not belong to the matrix ring.
  void set(std::size_t r, std::size_t c, Scalar value);
  std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  Vector apply(std::span<const Scalar> v) const;

 private:
  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Linear system stored as sparse rows; the natural input form for the
/// derivation and centralizer systems, whose rows have a handful of entries.
class SparseSystem {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseSystem(Ring ring, std::size_t cols) : ring_(ring), cols_(cols) {}
  static SparseSystem from_matrix(const Matrix& a);

  /// Adds the equation sum(entries) = rhs. Repeated columns are summed and
  /// zero coefficients dropped.
  void add_row(std::vector<Entry> entries, Scalar rhs);
  void add_row(std::vector<Entry> entries) { add_row(std::move(entries), Scalar::zero(ring_)); }

  const Ring& ring() const { return ring_; }
  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
  const Scalar& rhs(std::size_t r) const { return rhs_[r]; }

 private:
  Ring ring_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<Scalar> rhs_;
};

/// Reduced row echelon form of a system, optionally augmented by its
/// right-hand side (stored as column `cols`).
struct Echelon {
  std::size_t cols = 0;
  /// Pivot column of each row, strictly increasing.
  std::vector<std::size_t> pivots;
  /// Sparse rows, leading coefficient 1, zero in every other pivot column.
  std::vector<std::vector<SparseSystem::Entry>> rows;
  /// Set when a pivot landed in the augmented column.
  bool inconsistent = false;

  std::size_t rank() const { return inconsistent ? pivots.size() - 1 : pivots.size(); }
};

/// Exact elimination to reduced row echelon form. Rows are consumed in
/// input order; each takes its first surviving nonzero column as pivot.
/// Over Q the work is fraction-free on primitive integer rows and
/// rationals only appear in the final normalization.
Echelon reduce(const SparseSystem& system, bool augmented);

/// Basis of {v : A v = 0}: one vector per free column in increasing order,
/// with that free coordinate 1 and the other free coordinates 0.
std::vector<Vector> nullspace_basis(const Matrix& a);
std::vector<Vector> nullspace_basis(const SparseSystem& system);

/// One solution of A v = b with every free variable set to zero, or nullopt
/// if the system is inconsistent.
std::optional<Vector> solve_particular(const Matrix& a, std::span<const Scalar> b);
std::optional<Vector> solve_particular(const SparseSystem& system);

std::size_t rank(const Matrix& a);
std::size_t rank(const SparseSystem& system);

/// Rank of a family of vectors (as rows).
std::size_t rank_of(const Ring& ring, const std::vector<Vector>& vectors);

/// True iff the two families span the same subspace.
bool same_span(const Ring& ring, const std::vector<Vector>& a, const std::vector<Vector>& b);

}  // namespace drvkit

#pragma once

// Integer matrices and Smith normal form.
//
// Two routes compute the same invariants:
//   * smith_normal_form: dense elimination carrying unimodular certificates
//     U, V with U*A*V = D. This is the reference.
//   * smith_invariants: sparse route for boundary matrices. Columns are
//     streamed into an echelon lattice basis, unit pivots are eliminated
//     Markowitz-style, and the small residual goes through the dense route.

#include "glj/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace glj {

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  DenseMatrix transposed() const;
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// Exact determinant (fraction-free Bareiss).
Integer determinant(const DenseMatrix& a);

struct SparseEntry {
  std::uint32_t row;
  Integer value;
};
// Sorted by row, no explicit zeros.
using SparseColumn = std::vector<SparseEntry>;

// v += k * w, both sorted; zeros dropped.
void axpy(SparseColumn& v, const Integer& k, const SparseColumn& w);
SparseColumn make_column(std::vector<std::pair<std::uint32_t, Integer>> entries);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseColumn& column(std::size_t c) const { return columns_[c]; }
  SparseColumn& column(std::size_t c) { return columns_[c]; }
  void add_column(SparseColumn col) { columns_.push_back(std::move(col)); }
  DenseMatrix to_dense() const;
  static SparseMatrix from_dense(const DenseMatrix& d);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseColumn> columns_;
};

struct SmithResult {
  std::size_t rows = 0, cols = 0;
  // Positive nonzero diagonal entries d1 | d2 | ... .
  std::vector<Integer> invariants;
  std::optional<DenseMatrix> left;   // U
  std::optional<DenseMatrix> right;  // V
  std::size_t rank() const { return invariants.size(); }
  DenseMatrix diagonal() const;
};

SmithResult smith_normal_form(const DenseMatrix& a, bool with_certificates = true);

// U*A*V == D exactly and |det U| = |det V| = 1.
bool verify_certificate(const DenseMatrix& a, const SmithResult& r);

// Echelon basis of the lattice spanned by inserted integer columns. The
// lattice, and therefore the Smith invariants, are unchanged by insertion
// order; only the basis representation differs.
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t rows) : pivot_of_row_(rows, -1) {}
  void insert(SparseColumn v);
  std::size_t size() const { return basis_.size(); }
  SparseMatrix to_matrix() const;
  // Is v in the lattice?
  bool contains(SparseColumn v) const;

 private:
  std::vector<std::int64_t> pivot_of_row_;
  std::vector<SparseColumn> basis_;
};

struct SparseSmithStats {
  std::size_t unit_pivots = 0;
  std::size_t residual_rows = 0, residual_cols = 0;
};

// Smith invariants (nonzero, positive, divisibility chain) of a sparse matrix.
std::vector<Integer> smith_invariants(const SparseMatrix& a, SparseSmithStats* stats = nullptr);

}  // namespace glj

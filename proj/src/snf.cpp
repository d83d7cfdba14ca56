#include "glj/snf.hpp"

#include "glj/errors.hpp"

#include <algorithm>
#include <queue>
#include <utility>

namespace glj {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_input(rows[i].size() == c, "matrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Integer(rows[i][j]);
  }
  return m;
}

void DenseMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void DenseMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void DenseMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!at(src, j).is_zero()) at(dst, j) += k * at(src, j);
}

void DenseMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
  if (k.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!at(i, src).is_zero()) at(i, dst) += k * at(i, src);
}

void DenseMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  require_internal(a.cols() == b.rows(), "matrix product: shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Integer determinant(const DenseMatrix& a) {
  require_internal(a.rows() == a.cols(), "determinant: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  DenseMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k).is_zero()) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

void axpy(SparseColumn& v, const Integer& k, const SparseColumn& w) {
  if (k.is_zero() || w.empty()) return;
  SparseColumn out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].row < w[j].row)) {
      out.push_back(std::move(v[i++]));
    } else if (i == v.size() || w[j].row < v[i].row) {
      out.push_back({w[j].row, k * w[j].value});
      ++j;
    } else {
      Integer s = v[i].value + k * w[j].value;
      if (!s.is_zero()) out.push_back({v[i].row, std::move(s)});
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

SparseColumn make_column(std::vector<std::pair<std::uint32_t, Integer>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseColumn col;
  for (auto& [r, v] : entries) {
    if (!col.empty() && col.back().row == r) {
      col.back().value += v;
      if (col.back().value.is_zero()) col.pop_back();
    } else if (!v.is_zero()) {
      col.push_back({r, std::move(v)});
    }
  }
  return col;
}

DenseMatrix SparseMatrix::to_dense() const {
  DenseMatrix d(rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& e : columns_[c]) d.at(e.row, c) = e.value;
  return d;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix& d) {
  SparseMatrix s(d.rows(), 0);
  for (std::size_t c = 0; c < d.cols(); ++c) {
    SparseColumn col;
    for (std::size_t r = 0; r < d.rows(); ++r)
      if (!d.at(r, c).is_zero()) col.push_back({static_cast<std::uint32_t>(r), d.at(r, c)});
    s.add_column(std::move(col));
  }
  return s;
}

DenseMatrix SmithResult::diagonal() const {
  DenseMatrix d(rows, cols);
  for (std::size_t i = 0; i < invariants.size(); ++i) d.at(i, i) = invariants[i];
  return d;
}

SmithResult smith_normal_form(const DenseMatrix& a, bool with_certificates) {
  const std::size_t R = a.rows(), C = a.cols();
  DenseMatrix m = a;
  DenseMatrix U, V;
  if (with_certificates) {
    U = DenseMatrix::identity(R);
    V = DenseMatrix::identity(C);
  }
  auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    m.add_row_multiple(dst, src, k);
    if (with_certificates) U.add_row_multiple(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
    m.add_col_multiple(dst, src, k);
    if (with_certificates) V.add_col_multiple(dst, src, k);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    m.swap_rows(x, y);
    if (with_certificates) U.swap_rows(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    m.swap_cols(x, y);
    if (with_certificates) V.swap_cols(x, y);
  };

  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = R, pj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (!m.at(i, j).is_zero() && (pi == R || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == R) break;
    row_swap(t, pi);
    col_swap(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m.at(i, t).is_zero()) continue;
        row_op(i, t, -floor_div(m.at(i, t), m.at(t, t)));
        if (!m.at(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m.at(t, j).is_zero()) continue;
        col_op(j, t, -floor_div(m.at(t, j), m.at(t, t)));
        if (!m.at(t, j).is_zero()) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < R; ++i)
          if (!m.at(i, t).is_zero() && abs(m.at(i, t)) < abs(m.at(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < C; ++j)
          if (!m.at(t, j).is_zero() && abs(m.at(t, j)) < abs(m.at(bi, bj))) {
            bi = t;
            bj = j;
          }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // Row t and column t are clear; enforce divisibility of the rest.
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (!divides(m.at(t, t), m.at(i, j))) {
            bad = i;
            break;
          }
      if (bad == R) break;
      row_op(t, bad, 1);
    }
    if (m.at(t, t).sign() < 0) {
      m.negate_row(t);
      if (with_certificates) U.negate_row(t);
    }
  }

  SmithResult res;
  res.rows = R;
  res.cols = C;
  for (std::size_t i = 0; i < t; ++i) res.invariants.push_back(m.at(i, i));
  if (with_certificates) {
    res.left = std::move(U);
    res.right = std::move(V);
  }
  return res;
}

bool verify_certificate(const DenseMatrix& a, const SmithResult& r) {
  if (!r.left || !r.right) return false;
  for (std::size_t i = 0; i < r.invariants.size(); ++i) {
    if (r.invariants[i].sign() <= 0) return false;
    if (i > 0 && !divides(r.invariants[i - 1], r.invariants[i])) return false;
  }
  if (!(abs(determinant(*r.left)) == Integer(1))) return false;
  if (!(abs(determinant(*r.right)) == Integer(1))) return false;
  return (*r.left) * a * (*r.right) == r.diagonal();
}

void LatticeBasis::insert(SparseColumn v) {
  while (!v.empty()) {
    const std::uint32_t r = v.front().row;
    const std::int64_t p = pivot_of_row_[r];
    if (p < 0) {
      if (v.front().value.sign() < 0)
        for (auto& e : v) e.value = -e.value;
      pivot_of_row_[r] = static_cast<std::int64_t>(basis_.size());
      basis_.push_back(std::move(v));
      return;
    }
    SparseColumn& piv = basis_[static_cast<std::size_t>(p)];
    const Integer a = v.front().value;
    const Integer b = piv.front().value;
    if (divides(b, a)) {
      axpy(v, -exact_div(a, b), piv);
      continue;
    }
    // Unimodular 2x2 step: the pivot becomes gcd(a, b), v's lead vanishes.
    auto eg = extended_gcd(a, b);
    SparseColumn next_pivot;
    axpy(next_pivot, eg.s, v);
    axpy(next_pivot, eg.t, piv);
    SparseColumn rest;
    axpy(rest, exact_div(b, eg.g), v);
    axpy(rest, -exact_div(a, eg.g), piv);
    piv = std::move(next_pivot);
    v = std::move(rest);
  }
}

bool LatticeBasis::contains(SparseColumn v) const {
  while (!v.empty()) {
    const std::int64_t p = pivot_of_row_[v.front().row];
    if (p < 0) return false;
    const SparseColumn& piv = basis_[static_cast<std::size_t>(p)];
    if (!divides(piv.front().value, v.front().value)) return false;
    axpy(v, -exact_div(v.front().value, piv.front().value), piv);
  }
  return true;
}

SparseMatrix LatticeBasis::to_matrix() const {
  SparseMatrix m(pivot_of_row_.size(), 0);
  for (const auto& col : basis_) m.add_column(col);
  return m;
}

namespace {

// Markowitz-ordered elimination of unit pivots. Each pivot contributes an
// invariant 1 and removes one row and one column.
class UnitEliminator {
 public:
  explicit UnitEliminator(SparseMatrix m)
      : rows_(m.rows()), row_cols_(m.rows()), row_count_(m.rows(), 0), row_alive_(m.rows(), 1) {
    cols_.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cols_.push_back(std::move(m.column(c)));
      for (const auto& e : cols_.back()) {
        row_cols_[e.row].push_back(static_cast<std::uint32_t>(c));
        ++row_count_[e.row];
      }
    }
    col_alive_.assign(cols_.size(), 1);
  }

  std::size_t run() {
    using Item = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) heap.push({cols_[c].size(), static_cast<std::uint32_t>(c)});
    std::size_t pivots = 0;
    while (!heap.empty()) {
      auto [size, c] = heap.top();
      heap.pop();
      if (!col_alive_[c] || cols_[c].size() != size || size == 0) continue;
      std::int64_t best_row = -1;
      for (const auto& e : cols_[c])
        if (e.value.is_unit() && (best_row < 0 || row_count_[e.row] < row_count_[best_row]))
          best_row = e.row;
      if (best_row < 0) continue;
      eliminate(static_cast<std::uint32_t>(best_row), c, heap);
      ++pivots;
    }
    return pivots;
  }

  SparseMatrix residual() const {
    std::vector<std::int64_t> row_map(rows_, -1);
    std::size_t nr = 0;
    for (std::size_t r = 0; r < rows_; ++r)
      if (row_alive_[r] && row_count_[r] > 0) row_map[r] = static_cast<std::int64_t>(nr++);
    SparseMatrix out(nr, 0);
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (!col_alive_[c] || cols_[c].empty()) continue;
      SparseColumn col;
      for (const auto& e : cols_[c]) {
        require_internal(row_map[e.row] >= 0, "sparse SNF: entry in eliminated row");
        col.push_back({static_cast<std::uint32_t>(row_map[e.row]), e.value});
      }
      out.add_column(std::move(col));
    }
    return out;
  }

 private:
  template <class Heap>
  void eliminate(std::uint32_t r, std::uint32_t c, Heap& heap) {
    const SparseColumn& pc = cols_[c];
    const Integer u = std::find_if(pc.begin(), pc.end(), [&](const SparseEntry& e) {
                        return e.row == r;
                      })->value;
    const std::vector<std::uint32_t> touched = row_cols_[r];
    for (std::uint32_t c2 : touched) {
      if (c2 == c || !col_alive_[c2]) continue;
      auto& col = cols_[c2];
      auto it = std::lower_bound(col.begin(), col.end(), r,
                                 [](const SparseEntry& e, std::uint32_t row) { return e.row < row; });
      if (it == col.end() || it->row != r) continue;
      const Integer k = -(it->value * u);  // u is +-1, so u^{-1} = u
      SparseColumn before = col;
      axpy(col, k, pc);
      update_counts(c2, before, col);
      heap.push({col.size(), c2});
    }
    for (const auto& e : pc) --row_count_[e.row];
    col_alive_[c] = 0;
    row_alive_[r] = 0;
    row_cols_[r].clear();
  }

  void update_counts(std::uint32_t c, const SparseColumn& before, const SparseColumn& after) {
    std::size_t i = 0, j = 0;
    while (i < before.size() || j < after.size()) {
      if (j == after.size() || (i < before.size() && before[i].row < after[j].row)) {
        --row_count_[before[i].row];
        ++i;
      } else if (i == before.size() || after[j].row < before[i].row) {
        ++row_count_[after[j].row];
        row_cols_[after[j].row].push_back(c);
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
  }

  std::size_t rows_;
  std::vector<SparseColumn> cols_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<std::size_t> row_count_;
  std::vector<char> row_alive_, col_alive_;
};

}  // namespace

std::vector<Integer> smith_invariants(const SparseMatrix& a, SparseSmithStats* stats) {
  SparseMatrix work;
  if (a.cols() > a.rows()) {
    LatticeBasis basis(a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c) basis.insert(a.column(c));
    work = basis.to_matrix();
  } else {
    work = a;
  }
  UnitEliminator elim(std::move(work));
  const std::size_t units = elim.run();
  SparseMatrix rest = elim.residual();
  if (stats) {
    stats->unit_pivots = units;
    stats->residual_rows = rest.rows();
    stats->residual_cols = rest.cols();
  }
  std::vector<Integer> inv(units, Integer(1));
  if (rest.rows() > 0 && rest.cols() > 0) {
    auto tail = smith_normal_form(rest.to_dense(), false);
    for (auto& d : tail.invariants) inv.push_back(std::move(d));
  }
  return inv;
}

}  // namespace glj

// Exact integer linear algebra: determinants, rational solves, Hermite and
// Smith normal forms, and incremental lattice bases for membership tests.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "loghilb/exact/integer.hpp"

namespace loghilb {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: row width mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
inline Integer determinant(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

enum class SolveStatus { Unique, NotUnique, Inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  /// A solution (free variables set to zero) unless the system is inconsistent.
  std::vector<Rational> x;
  bool has_solution() const { return status != SolveStatus::Inconsistent; }
};

/// Solves A x = b over the rationals by Gauss-Jordan elimination.
inline SolveResult rational_solve(const IntMatrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("rational_solve: rhs length mismatch");
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = a(r, c);
    m[r][cols] = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][c];
    for (std::size_t j = c; j <= cols; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j <= cols; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  SolveResult result;
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) return result;
  result.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) result.x[pivot_cols[i]] = m[i][cols];
  result.status = pivot_cols.size() == cols ? SolveStatus::Unique : SolveStatus::NotUnique;
  return result;
}

/// Row-style Hermite normal form H = U*M: the nonzero rows come first, pivots
/// are positive and strictly move right, and entries above each pivot lie in
/// [0, pivot). Zero rows are dropped.
inline IntMatrix hermite_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    // Euclid down the column until only the pivot row is nonzero.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = row; r < rows; ++r)
        if (m(r, c) != 0 && (!best || abs(m(r, c)) < abs(m(*best, c)))) best = r;
      if (!best) break;
      m.swap_rows(row, *best);
      bool done = true;
      for (std::size_t r = row + 1; r < rows; ++r) {
        if (m(r, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, c).get_mpz_t(), m(row, c).get_mpz_t());
        m.add_row(r, row, -q);
        if (m(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(row, c) == 0) continue;
    if (m(row, c) < 0) m.negate_row(row);
    for (std::size_t r = 0; r < row; ++r) {
      Integer q, rem;
      floor_divmod(m(r, c), m(row, c), q, rem);
      m.add_row(r, row, -q);
    }
    pivots.push_back(c);
    ++row;
  }
  IntMatrix h(row, cols);
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < cols; ++c) h(r, c) = m(r, c);
  return h;
}

struct SmithResult {
  IntMatrix u, v, d;
  /// Diagonal of d: min(rows, cols) entries, nonnegative, each dividing the next.
  std::vector<Integer> diagonal;
};

namespace detail {

// In-place Smith reduction; u and v accumulate the row/column operations when given.
inline void smith_reduce(IntMatrix& d, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  const std::size_t n = std::min(rows, cols);
  auto row_op_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  };
  auto col_op_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
  };
  auto row_op_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_row(dst, src, k);
    if (u) u->add_row(dst, src, k);
  };
  auto col_op_add = [&](std::size_t dst, std::size_t src, const Integer& k) {
    d.add_col(dst, src, k);
    if (v) v->add_col(dst, src, k);
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Pivot on the smallest nonzero absolute value in the trailing block.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (d(r, c) != 0 && (!best || abs(d(r, c)) < abs(d(best->first, best->second))))
            best = {r, c};
      if (!best) return;
      row_op_swap(t, best->first);
      col_op_swap(t, best->second);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (d(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(r, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_op_add(r, t, -q);
        if (d(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (d(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d(t, c).get_mpz_t(), d(t, t).get_mpz_t());
        col_op_add(c, t, -q);
        if (d(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold any offending row into row t and retry.
      std::optional<std::size_t> offender;
      for (std::size_t r = t + 1; r < rows && !offender; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(d(r, c).get_mpz_t(), d(t, t).get_mpz_t())) {
            offender = r;
            break;
          }
      if (!offender) break;
      row_op_add(t, *offender, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      if (u) u->negate_row(t);
    }
  }
}

}  // namespace detail

/// Smith normal form with unimodular transforms: u * m * v == d.
inline SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult res{IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), m, {}};
  detail::smith_reduce(res.d, &res.u, &res.v);
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) res.diagonal.push_back(res.d(i, i));
  return res;
}

/// Nonzero invariant factors of m (no transforms).
inline std::vector<Integer> invariant_factors(IntMatrix m) {
  detail::smith_reduce(m, nullptr, nullptr);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (m(i, i) != 0) out.push_back(m(i, i));
  return out;
}

/// An integer lattice in Z^width kept in echelon form with positive pivots.
/// Vectors are added one at a time; membership is exact over Z.
class LatticeEchelon {
 public:
  explicit LatticeEchelon(std::size_t width) : width_(width) {}

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }

  void insert(std::vector<Integer> v) {
    if (v.size() != width_) throw std::invalid_argument("LatticeEchelon: width mismatch");
    std::size_t col = first_nonzero(v, 0);
    while (col < width_) {
      auto it = rows_.find(col);
      if (it == rows_.end()) {
        if (v[col] < 0)
          for (auto& x : v) x = -x;
        reduce_tail(v, col);
        rows_.emplace(col, std::move(v));
        return;
      }
      auto& b = it->second;
      if (mpz_divisible_p(v[col].get_mpz_t(), b[col].get_mpz_t())) {
        Integer q = v[col] / b[col];
        axpy(v, b, -q, col);
      } else {
        // Replace the pivot row by the gcd combination, keep the remainder.
        Integer s, t;
        Integer g = extended_gcd(b[col], v[col], s, t);
        Integer bq = b[col] / g;
        Integer vq = v[col] / g;
        std::vector<Integer> nb(width_), nv(width_);
        for (std::size_t j = col; j < width_; ++j) {
          nb[j] = s * b[j] + t * v[j];
          nv[j] = bq * v[j] - vq * b[j];
        }
        reduce_tail(nb, col);
        b = std::move(nb);
        v = std::move(nv);
      }
      col = first_nonzero(v, col);
    }
  }

  /// Reduces v against the basis; returns true when v lies in the lattice.
  bool contains(std::vector<Integer> v) const {
    if (v.size() != width_) throw std::invalid_argument("LatticeEchelon: width mismatch");
    for (std::size_t col = first_nonzero(v, 0); col < width_; col = first_nonzero(v, col)) {
      auto it = rows_.find(col);
      if (it == rows_.end()) return false;
      if (!mpz_divisible_p(v[col].get_mpz_t(), it->second[col].get_mpz_t())) return false;
      Integer q = v[col] / it->second[col];
      axpy(v, it->second, -q, col);
    }
    return true;
  }

  /// Basis rows in pivot order.
  std::vector<std::vector<Integer>> basis() const {
    std::vector<std::vector<Integer>> out;
    out.reserve(rows_.size());
    for (const auto& [c, r] : rows_) out.push_back(r);
    return out;
  }

  /// Invariant factors (> 1) of the quotient Z^width / lattice, plus its free rank.
  std::pair<std::size_t, std::vector<Integer>> quotient_structure() const {
    // Fully reduce so unit pivots clear their columns; those rows and columns
    // contribute trivial factors and can be dropped before the Smith step.
    std::vector<std::pair<std::size_t, std::vector<Integer>>> rows(rows_.begin(), rows_.end());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& [pc, pr] = rows[i];
      for (std::size_t k = 0; k < i; ++k) {
        auto& other = rows[k].second;
        if (other[pc] == 0) continue;
        Integer q, rem;
        floor_divmod(other[pc], pr[pc], q, rem);
        axpy(other, pr, -q, pc);
      }
    }
    std::vector<std::size_t> keep_rows;
    std::vector<bool> unit_col(width_, false);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].second[rows[i].first] == 1) unit_col[rows[i].first] = true;
      else keep_rows.push_back(i);
    }
    std::vector<Integer> torsion;
    if (!keep_rows.empty()) {
      std::vector<std::size_t> keep_cols;
      for (std::size_t c = 0; c < width_; ++c)
        if (!unit_col[c]) keep_cols.push_back(c);
      IntMatrix small(keep_rows.size(), keep_cols.size());
      for (std::size_t r = 0; r < keep_rows.size(); ++r)
        for (std::size_t c = 0; c < keep_cols.size(); ++c)
          small(r, c) = rows[keep_rows[r]].second[keep_cols[c]];
      for (auto& f : invariant_factors(std::move(small)))
        if (f != 1) torsion.push_back(f);
    }
    return {width_ - rows_.size(), torsion};
  }

 private:
  std::size_t width_;
  std::map<std::size_t, std::vector<Integer>> rows_;

  static std::size_t first_nonzero(const std::vector<Integer>& v, std::size_t from) {
    while (from < v.size() && v[from] == 0) ++from;
    return from;
  }

  // v += k * b over columns >= from
  static void axpy(std::vector<Integer>& v, const std::vector<Integer>& b, const Integer& k,
                   std::size_t from) {
    for (std::size_t j = from; j < v.size(); ++j)
      if (b[j] != 0) v[j] += k * b[j];
  }

  // Keeps entries bounded: reduce v's later columns by existing pivots.
  void reduce_tail(std::vector<Integer>& v, std::size_t col) const {
    for (auto it = rows_.upper_bound(col); it != rows_.end(); ++it) {
      const std::size_t pc = it->first;
      if (v[pc] == 0) continue;
      Integer q, rem;
      floor_divmod(v[pc], it->second[pc], q, rem);
      axpy(v, it->second, -q, pc);
    }
  }
};

}  // namespace loghilb

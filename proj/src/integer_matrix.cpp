#include "modp/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace modp {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(int i) const {
  return IntVec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVec IntMatrix::col(int j) const {
  IntVec out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  IntVec out(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    Int s = 0;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

IntVec scale(const IntVec& a, Int k) {
  IntVec out(a);
  for (auto& x : out) x *= k;
  return out;
}

std::optional<std::vector<Rational>> solve_left(const IntMatrix& m, const std::vector<Rational>& target) {
  // x * m = target  <=>  m^T x^T = target^T; Gauss-Jordan on the transpose.
  const int n = m.rows();
  const int c = m.cols();
  if (n != c) throw std::invalid_argument("solve_left: square matrix required");
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m(j, i));
    a[i][n] = target[static_cast<std::size_t>(i)];
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col].numerator() != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[pivot], a[col]);
    const Rational p = a[col][col];
    for (int j = col; j <= n; ++j) a[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (int j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = a[i][n];
  return x;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
  const int n = m.rows();
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    auto row = solve_left(m, e);
    if (!row) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      const Rational& r = (*row)[static_cast<std::size_t>(j)];
      if (r.denominator() != 1) return std::nullopt;
      inv(i, j) = r.numerator();
    }
  }
  return inv;
}

namespace {

struct SnfState {
  IntMatrix a;
  IntMatrix v;
  IntMatrix vinv;

  void swap_rows(int i, int j) {
    for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
  }
  void swap_cols(int i, int j) {
    for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
    for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv(i, c), vinv(j, c));
  }
  // row_i -= q * row_t
  void row_sub(int i, int t, Int q) {
    for (int c = 0; c < a.cols(); ++c) a(i, c) -= q * a(t, c);
  }
  // col_j -= q * col_t
  void col_sub(int j, int t, Int q) {
    for (int r = 0; r < a.rows(); ++r) a(r, j) -= q * a(r, t);
    for (int r = 0; r < v.rows(); ++r) v(r, j) -= q * v(r, t);
    for (int c = 0; c < vinv.cols(); ++c) vinv(t, c) += q * vinv(j, c);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  SnfState s{input, IntMatrix::identity(input.cols()), IntMatrix::identity(input.cols())};
  const int rows = input.rows();
  const int cols = input.cols();
  std::vector<Int> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (s.a(i, j) != 0 && (pr < 0 || std::llabs(s.a(i, j)) < std::llabs(s.a(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    s.swap_rows(t, pr);
    s.swap_cols(t, pc);
    for (;;) {
      bool changed = false;
      for (int i = t + 1; i < rows; ++i) {
        if (s.a(i, t) == 0) continue;
        s.row_sub(i, t, s.a(i, t) / s.a(t, t));
        if (s.a(i, t) != 0) {
          s.swap_rows(i, t);
          changed = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (s.a(t, j) == 0) continue;
        s.col_sub(j, t, s.a(t, j) / s.a(t, t));
        if (s.a(t, j) != 0) {
          s.swap_cols(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      // Divisibility: fold an offending row into the pivot row.
      bool fixed = true;
      for (int i = t + 1; i < rows && fixed; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (s.a(i, j) % s.a(t, t) != 0) {
            for (int c = 0; c < cols; ++c) s.a(t, c) += s.a(i, c);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (s.a(t, t) < 0)
      for (int c = 0; c < cols; ++c) s.a(t, c) = -s.a(t, c);
    diag.push_back(s.a(t, t));
  }
  return SmithForm{diag, s.v, s.vinv};
}

IntVec quotient_class(const SmithForm& snf, const IntVec& v) {
  const int n = snf.v.rows();
  IntVec y(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(i)] * snf.v(i, j);
  IntVec out;
  for (int j = 0; j < n; ++j) {
    if (static_cast<std::size_t>(j) < snf.diagonal.size()) {
      const Int d = snf.diagonal[static_cast<std::size_t>(j)];
      if (d == 1) continue;
      Int r = y[static_cast<std::size_t>(j)] % d;
      if (r < 0) r += d;
      out.push_back(r);
    } else {
      out.push_back(y[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

}  // namespace modp

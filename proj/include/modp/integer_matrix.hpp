#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace modp {

using Int = std::int64_t;
using IntVec = std::vector<Int>;
using Rational = boost::rational<Int>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int x : v) {
      h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Dense row-major integer matrix. Sizes here are tiny (rank <= 8 plus a
/// few central coordinates), so no attempt is made at clever storage.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  Int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const std::vector<Int>& data() const { return data_; }

  IntVec row(int i) const;
  IntVec col(int j) const;

  IntMatrix operator*(const IntMatrix& other) const;
  /// Matrix times column vector.
  IntVec apply(const IntVec& v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    return a.data_ <=> b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

Int dot(const IntVec& a, const IntVec& b);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, Int k);

/// Solves x * m = target for a row vector x over the rationals. Returns
/// nullopt when m is singular.
std::optional<std::vector<Rational>> solve_left(const IntMatrix& m, const std::vector<Rational>& target);

/// Exact inverse, only if it is integral.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

/// Smith normal form of the row lattice of `a`: U * a * V = diag(d), with V
/// unimodular. The quotient Z^cols / rowspace(a) is then described by the
/// coordinates y = v * V, where y_i is taken mod d_i for i < diag.size()
/// and is free beyond.
struct SmithForm {
  std::vector<Int> diagonal;  // nonzero invariant factors, d_0 | d_1 | ...
  IntMatrix v;
  IntMatrix v_inverse;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Canonical invariant of the class of `v` in Z^n / rowspace, dropping
/// coordinates with trivial invariant factor.
IntVec quotient_class(const SmithForm& snf, const IntVec& v);

}  // namespace modp

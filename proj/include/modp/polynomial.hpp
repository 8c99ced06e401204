#pragma once

#include "modp/integer_matrix.hpp"

#include <string>
#include <vector>

namespace modp {

/// Dense integer polynomial in one variable q; coeffs[k] is the q^k term.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);
  static Polynomial constant(Int c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, Int c = 1);

  const std::vector<Int>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coefficient(int k) const;
  Int evaluate(Int q) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }

  /// "1 + q + q^2", "0", "-1 + q".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

}  // namespace modp

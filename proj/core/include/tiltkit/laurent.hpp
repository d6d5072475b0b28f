#pragma once

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tiltkit/linalg.hpp"

namespace tiltkit {

/// Element of Z[v, v^{-1}]. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) c_[0] = constant;
  }

  static LaurentPoly monomial(Int coeff, int exponent);
  static LaurentPoly v() { return monomial(1, 1); }
  static LaurentPoly v_inv() { return monomial(1, -1); }
  /// c[0] + c[1] v + c[2] v^2 + ...
  static LaurentPoly from_coefficients(std::span<const Int> c);

  bool is_zero() const { return c_.empty(); }
  Int coefficient(int exponent) const;
  Int constant_term() const { return coefficient(0); }
  int min_degree() const;
  int max_degree() const;
  bool has_nonnegative_coefficients() const;
  const std::map<int, Int>& terms() const { return c_; }
  /// Coefficients c_0..c_deg; requires no negative exponents.
  std::vector<Int> coefficients() const;

  /// v -> v^{-1}.
  LaurentPoly bar() const;
  Int eval_at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  LaurentPoly shifted(int k) const;  // times v^k

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(int e, Int c);
  std::map<int, Int> c_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace tiltkit

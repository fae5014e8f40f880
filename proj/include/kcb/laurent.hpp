#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kcb {

using Integer = mpz_class;

/// Raised by exact_div when the divisor does not divide the dividend in Z[v, v^-1].
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in v with arbitrary-precision integer coefficients.
///
/// Stored densely: coeffs_[i] is the coefficient of v^(low_ + i). The
/// representation is normalized so that the first and last stored
/// coefficients are nonzero; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
  /// Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(const std::vector<std::pair<int, long>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponent with a nonzero coefficient; undefined on zero.
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int exponent) const;
  /// Number of nonzero terms.
  std::size_t term_count() const;
  /// Nonzero terms in increasing exponent order.
  std::vector<std::pair<int, Integer>> terms() const;

  /// True iff every exponent is strictly positive (the polynomial lies in vZ[v]).
  bool in_positive_part() const { return is_zero() || low_ > 0; }
  bool is_monomial() const { return term_count() == 1; }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  /// Adds c * v^shift * rhs in place.
  void add_scaled(const LaurentPoly& rhs, int shift, const Integer& c = 1);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Human-readable form, e.g. "v^2 + 1 + v^-2".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Balanced quantum integer [n] = v^(n-1) + v^(n-3) + ... + v^-(n-1); [0] = 0.
LaurentPoly qint(int n);
/// Quantum factorial [n]! = [n][n-1]...[1]; [0]! = 1.
LaurentPoly qfact(int n);
/// Ring involution v -> v^-1.
LaurentPoly bar(const LaurentPoly& p);
/// Returns r with r * q == p, or throws NotDivisible.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
/// The bar-invariant polynomial agreeing with c in all degrees <= 0.
LaurentPoly bar_symmetrize_nonpos(const LaurentPoly& c);

}  // namespace kcb

#include "kcb/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace kcb {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) {
    coeffs_.emplace_back(constant);
  }
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, long>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) {
    p += monomial(e, Integer(c));
  }
  return p;
}

Integer LaurentPoly::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) {
    return 0;
  }
  return coeffs_[exponent - low_];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) {
      out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    }
  }
  return out;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

void LaurentPoly::add_scaled(const LaurentPoly& rhs, int shift, const Integer& c) {
  if (rhs.is_zero() || c == 0) return;
  const int rlow = rhs.low_ + shift;
  const int rhigh = rhs.max_exponent() + shift;
  if (is_zero()) {
    low_ = rlow;
    coeffs_.assign(rhs.coeffs_.size(), Integer(0));
  } else {
    const int high = std::max(max_exponent(), rhigh);
    const int newlow = std::min(low_, rlow);
    if (newlow < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - newlow), Integer(0));
      low_ = newlow;
    }
    coeffs_.resize(static_cast<std::size_t>(high - low_ + 1), Integer(0));
  }
  const std::size_t offset = static_cast<std::size_t>(rlow - low_);
  if (c == 1) {
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[offset + i] += rhs.coeffs_[i];
  } else {
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[offset + i] += c * rhs.coeffs_[i];
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  add_scaled(rhs, 0, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  add_scaled(rhs, 0, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.low_ = lhs.low_ + rhs.low_;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  out.normalize();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int idx = static_cast<int>(coeffs_.size()) - 1; idx >= 0; --idx) {
    const Integer& c = coeffs_[static_cast<std::size_t>(idx)];
    if (c == 0) continue;
    const int e = low_ + idx;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly qint(int n) {
  LaurentPoly p;
  for (int j = 0; j < n; ++j) {
    p += LaurentPoly::monomial(n - 1 - 2 * j);
  }
  return p;
}

LaurentPoly qfact(int n) {
  LaurentPoly p(1);
  for (int j = 2; j <= n; ++j) p *= qint(j);
  return p;
}

LaurentPoly bar(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(-e, c);
  return out;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  if (p.is_zero()) return {};
  const int qtop = q.max_exponent();
  const Integer lead = q.coeff(qtop);
  const int quotient_low = p.min_exponent() - q.min_exponent();
  LaurentPoly rem = p;
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    const int e = rem.max_exponent() - qtop;
    if (e < quotient_low) {
      throw NotDivisible("exact_div: " + p.to_string() + " is not divisible by " + q.to_string());
    }
    const Integer top = rem.coeff(rem.max_exponent());
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible("exact_div: " + p.to_string() + " is not divisible by " + q.to_string());
    }
    Integer c = top / lead;
    quotient += LaurentPoly::monomial(e, c);
    rem.add_scaled(q, e, -c);
  }
  return quotient;
}

LaurentPoly bar_symmetrize_nonpos(const LaurentPoly& c) {
  LaurentPoly out;
  if (c.is_zero()) return out;
  for (const auto& [e, coef] : c.terms()) {
    if (e > 0) break;
    out += LaurentPoly::monomial(e, coef);
    if (e < 0) out += LaurentPoly::monomial(-e, coef);
  }
  return out;
}

}  // namespace kcb

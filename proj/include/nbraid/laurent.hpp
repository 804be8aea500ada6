#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nbraid {

/// Laurent polynomial in x with int64 coefficients: sum coeffs[k] x^(low + k).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::vector<std::int64_t> coeffs, int low = 0) : low_(low), coeffs_(std::move(coeffs)) {
    trim();
  }
  static LaurentPoly constant(std::int64_t c) { return LaurentPoly({c}); }
  static LaurentPoly monomial(std::int64_t c, int degree) { return LaurentPoly({c}, degree); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low_degree() const noexcept { return low_; }
  int high_degree() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }

  std::int64_t coeff(int degree) const noexcept {
    const int k = degree - low_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
  }

  LaurentPoly operator+(const LaurentPoly& o) const { return combine(o, +1); }
  LaurentPoly operator-(const LaurentPoly& o) const { return combine(o, -1); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<std::int64_t> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], o.coeffs_[j]));
    return LaurentPoly(std::move(out), low_ + o.low_);
  }

  /// Exact division; throws InternalError when the divisor does not divide.
  LaurentPoly divided_exactly_by(const LaurentPoly& d) const {
    if (d.is_zero()) throw InternalError("division by the zero polynomial");
    if (is_zero()) return {};
    std::vector<std::int64_t> rem = coeffs_;
    const std::int64_t lead = d.coeffs_.back();
    const std::size_t dn = d.coeffs_.size();
    if (rem.size() < dn) throw InternalError("inexact polynomial division");
    std::vector<std::int64_t> q(rem.size() - dn + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      const std::int64_t top = rem[k + dn - 1];
      if (top % lead != 0) throw InternalError("inexact polynomial division");
      const std::int64_t c = top / lead;
      q[k] = c;
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] = checked_add(rem[k + j], -checked_mul(c, d.coeffs_[j]));
    }
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t v) { return v != 0; }))
      throw InternalError("inexact polynomial division");
    return LaurentPoly(std::move(q), low_ - d.low_);
  }

  /// Shift to lowest degree 0 and make the lowest coefficient positive.
  LaurentPoly normalized() const {
    if (is_zero()) return {};
    std::vector<std::int64_t> c = coeffs_;
    if (c.front() < 0)
      for (auto& v : c) v = -v;
    return LaurentPoly(std::move(c), 0);
  }

  bool operator==(const LaurentPoly&) const = default;

  /// Descending-degree text, e.g. "x^4 - x^3 + x^2 - x + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int deg = high_degree(); deg >= low_; --deg) {
      const std::int64_t c = coeff(deg);
      if (c == 0) continue;
      const std::uint64_t mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || deg == 0) s += std::to_string(mag);
      if (deg != 0) {
        s += "x";
        if (deg != 1) s += "^" + std::to_string(deg);
      }
    }
    return s;
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw InternalError("Laurent coefficient overflow");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InternalError("Laurent coefficient overflow");
    return r;
  }

  LaurentPoly combine(const LaurentPoly& o, int sign) const {
    if (is_zero() && o.is_zero()) return {};
    const int lo = is_zero() ? o.low_ : o.is_zero() ? low_ : std::min(low_, o.low_);
    const int hi = is_zero() ? o.high_degree() : o.is_zero() ? high_degree() : std::max(high_degree(), o.high_degree());
    std::vector<std::int64_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
    for (int d = lo; d <= hi; ++d)
      out[static_cast<std::size_t>(d - lo)] = checked_add(coeff(d), sign * o.coeff(d));
    return LaurentPoly(std::move(out), lo);
  }

  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      low_ = 0;
      return;
    }
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
    while (coeffs_.back() == 0) coeffs_.pop_back();
  }

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace nbraid

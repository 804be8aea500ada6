#pragma once

// Alexander polynomial of a braid closure from the reduced Burau representation:
//
//   Delta(x) ~ det(I - B(w)) * (1 - x) / (1 - x^n)
//
// det(I - B(w)) is recovered exactly: it is evaluated at D+1 points modulo two
// 61/62-bit primes, interpolated, and the two residues are combined by CRT.
// D bounds the degree spread, so interpolation is exact, and the CRT lift is
// exact for every coefficient below 2^120 in magnitude (results must also fit
// int64).

#include <cstdint>
#include <vector>

#include "braid_word.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "permutation.hpp"

namespace nbraid {

namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

struct ModField {
  u64 p;
  u64 add(u64 a, u64 b) const noexcept {
    const u64 s = a + b;
    return s >= p ? s - p : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const noexcept { return static_cast<u64>((static_cast<u128>(a) * b) % p); }
  u64 pow(u64 a, u64 e) const noexcept {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const noexcept { return pow(a, p - 2); }
  u64 from_signed(std::int64_t v) const noexcept {
    return v >= 0 ? static_cast<u64>(v) % p : sub(0, static_cast<u64>(-(v + 1)) % p + 1);
  }
};

inline constexpr u64 kPrimeA = (u64{1} << 61) - 1;
inline constexpr u64 kPrimeB = (u64{1} << 62) - 57;

/// det(I - B(w)(x)) mod p for the reduced Burau matrix B, size n-1.
inline u64 burau_det_at(const BraidWord& w, u64 x, const ModField& f) {
  const int m = w.strands() - 1;
  const std::size_t sm = static_cast<std::size_t>(m);
  std::vector<u64> a(sm * sm, 0);  // row-major, a[r*m + c]
  for (std::size_t i = 0; i < sm; ++i) a[i * sm + i] = 1;
  const u64 xinv = f.inv(x);
  // Right-multiplying by the generator matrix of sigma_i changes column i-1 only.
  for (const Letter& l : w.letters()) {
    const int c = l.index - 1;
    for (std::size_t r = 0; r < sm; ++r) {
      u64* row = &a[r * sm];
      const u64 left = c > 0 ? row[c - 1] : 0;
      const u64 mid = row[c];
      const u64 right = c + 1 < m ? row[c + 1] : 0;
      if (l.sign > 0)
        row[c] = f.add(f.sub(f.mul(x, left), f.mul(x, mid)), right);
      else
        row[c] = f.add(f.sub(left, f.mul(xinv, mid)), f.mul(xinv, right));
    }
  }
  for (std::size_t i = 0; i < sm * sm; ++i) a[i] = f.sub(0, a[i]);
  for (std::size_t i = 0; i < sm; ++i) a[i * sm + i] = f.add(a[i * sm + i], 1);

  u64 det = 1;
  for (std::size_t col = 0; col < sm; ++col) {
    std::size_t piv = col;
    while (piv < sm && a[piv * sm + col] == 0) ++piv;
    if (piv == sm) return 0;
    if (piv != col) {
      for (std::size_t k = 0; k < sm; ++k) std::swap(a[piv * sm + k], a[col * sm + k]);
      det = f.sub(0, det);
    }
    const u64 pv = a[col * sm + col];
    det = f.mul(det, pv);
    const u64 pinv = f.inv(pv);
    for (std::size_t r = col + 1; r < sm; ++r) {
      const u64 factor = f.mul(a[r * sm + col], pinv);
      if (factor == 0) continue;
      for (std::size_t k = col; k < sm; ++k) a[r * sm + k] = f.sub(a[r * sm + k], f.mul(factor, a[col * sm + k]));
    }
  }
  return det;
}

/// Coefficients (mod p) of x^shift * det(I - B(w)(x)), a polynomial of degree <= degree_bound.
inline std::vector<u64> burau_det_poly_mod(const BraidWord& w, int shift, int degree_bound, const ModField& f) {
  const std::size_t npts = static_cast<std::size_t>(degree_bound) + 1;
  // Values at x = 1 .. D+1, then Newton forward differences in u = x - 1.
  std::vector<u64> d(npts);
  for (std::size_t k = 0; k < npts; ++k) {
    const u64 x = k + 1;
    d[k] = f.mul(f.pow(x, static_cast<u64>(shift)), burau_det_at(w, x, f));
  }
  for (std::size_t k = 1; k < npts; ++k)
    for (std::size_t i = npts - 1; i >= k; --i) d[i] = f.sub(d[i], d[i - 1]);
  // d[k] / k! are the coefficients on u (u-1) ... (u-k+1).
  std::vector<u64> inv_fact(npts, 1);
  u64 fact = 1;
  for (std::size_t k = 1; k < npts; ++k) fact = f.mul(fact, k);
  inv_fact[npts - 1] = f.inv(fact);
  for (std::size_t k = npts - 1; k > 0; --k) inv_fact[k - 1] = f.mul(inv_fact[k], k);

  // Horner in the Newton basis, written directly in x: (u - k) = (x - (k+1)).
  std::vector<u64> poly{f.mul(d[npts - 1], inv_fact[npts - 1])};
  for (std::size_t k = npts - 1; k-- > 0;) {
    const u64 root = k + 1;
    std::vector<u64> next(poly.size() + 1, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = f.add(next[j + 1], poly[j]);
      next[j] = f.sub(next[j], f.mul(root, poly[j]));
    }
    next[0] = f.add(next[0], f.mul(d[k], inv_fact[k]));
    poly = std::move(next);
  }
  poly.resize(npts);
  return poly;
}

inline std::int64_t crt_lift(u64 ra, u64 rb) {
  const ModField fb{kPrimeB};
  const u64 pa_mod_b = kPrimeA % kPrimeB;
  const u64 k = fb.mul(fb.sub(rb % kPrimeB, ra % kPrimeB), fb.inv(pa_mod_b));
  const u128 modulus = static_cast<u128>(kPrimeA) * kPrimeB;
  const u128 value = static_cast<u128>(ra) + static_cast<u128>(kPrimeA) * k;
  const i128 signed_value =
      value > modulus / 2 ? -static_cast<i128>(modulus - value) : static_cast<i128>(value);
  if (signed_value > INT64_MAX || signed_value < INT64_MIN)
    throw InternalError("Burau determinant coefficient exceeds int64");
  return static_cast<std::int64_t>(signed_value);
}

}  // namespace detail

/// det(I - reduced Burau(w)) as an exact Laurent polynomial in x.
inline LaurentPoly burau_determinant(const BraidWord& w) {
  const int n = w.strands();
  if (n == 1) return LaurentPoly::constant(1);
  int pos = 0, neg = 0;
  for (const Letter& l : w.letters()) (l.sign > 0 ? pos : neg)++;
  const int shift = (n - 1) * neg;
  const int bound = (n - 1) * (pos + neg);
  const auto ra = detail::burau_det_poly_mod(w, shift, bound, detail::ModField{detail::kPrimeA});
  const auto rb = detail::burau_det_poly_mod(w, shift, bound, detail::ModField{detail::kPrimeB});
  std::vector<std::int64_t> coeffs(ra.size());
  for (std::size_t k = 0; k < ra.size(); ++k) coeffs[k] = detail::crt_lift(ra[k], rb[k]);
  return LaurentPoly(std::move(coeffs), -shift);
}

/// Normalized Alexander polynomial of the closure of w (a knot): lowest degree 0,
/// lowest coefficient positive.
inline LaurentPoly alexander_polynomial(const BraidWord& w) {
  const int components = underlying_permutation(w).cycle_count();
  if (components != 1)
    throw UnsupportedClosure("Alexander polynomial requires a knot; closure has " +
                             std::to_string(components) + " components");
  const int n = w.strands();
  const LaurentPoly det = burau_determinant(w);
  if (det.is_zero()) throw DegenerateDeterminant("det(I - Burau) vanishes identically");
  const LaurentPoly cyclotomic(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
  return det.divided_exactly_by(cyclotomic).normalized();
}

}  // namespace nbraid

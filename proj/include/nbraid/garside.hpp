#pragma once

// Garside left-greedy normal form in B_n.
//
// Every braid is uniquely Delta^p A_1 ... A_r with each A_i a permutation braid
// (positive, every pair of strands crossing at most once), A_i != 1, Delta, and
// each pair (A_i, A_{i+1}) left-weighted: S(A_{i+1}) is contained in F(A_i),
// where S and F are the starting and finishing sets of generators. Two words
// are equal in B_n exactly when their normal forms coincide.

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "braid_word.hpp"
#include "permutation.hpp"

namespace nbraid {

/// Positive braid in which each pair of strands crosses at most once, stored by its permutation.
class PermutationBraid {
 public:
  static constexpr int kMaxStrands = 64;

  static PermutationBraid identity(int n) {
    check_strands(n);
    PermutationBraid p;
    p.n_ = static_cast<std::uint8_t>(n);
    std::iota(p.img_.begin(), p.img_.begin() + n, std::uint8_t{0});
    return p;
  }

  /// The half twist: strand i ends at position n+1-i.
  static PermutationBraid half_twist(int n) {
    check_strands(n);
    PermutationBraid p;
    p.n_ = static_cast<std::uint8_t>(n);
    for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n - 1 - i);
    return p;
  }

  /// sigma_i as a permutation braid.
  static PermutationBraid generator(int n, int i) {
    PermutationBraid p = identity(n);
    p.append(i);
    return p;
  }

  /// Delta sigma_i^{-1}: the left complement of sigma_i in Delta.
  static PermutationBraid delta_over(int n, int i) {
    PermutationBraid p = half_twist(n);
    for (int x = 0; x < n; ++x) p.img_[static_cast<std::size_t>(x)] = swap_value(p.img_[static_cast<std::size_t>(x)], i - 1);
    return p;
  }

  static PermutationBraid from_permutation(const Permutation& perm) {
    PermutationBraid p = identity(perm.size());
    for (int i = 0; i < perm.size(); ++i)
      p.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(perm(i + 1) - 1);
    return p;
  }

  int strands() const noexcept { return n_; }

  Permutation permutation() const {
    std::vector<int> images(n_);
    for (int i = 0; i < n_; ++i) images[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(i)] + 1;
    return Permutation::from_images(std::move(images));
  }

  bool is_identity() const noexcept {
    for (int i = 0; i < n_; ++i)
      if (img_[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  bool is_half_twist() const noexcept {
    for (int i = 0; i < n_; ++i)
      if (img_[static_cast<std::size_t>(i)] != n_ - 1 - i) return false;
    return true;
  }

  /// sigma_i is a left divisor: the strands starting at i, i+1 cross.
  bool starts_with(int i) const noexcept { return img_[static_cast<std::size_t>(i - 1)] > img_[static_cast<std::size_t>(i)]; }

  /// sigma_i is a right divisor: the strands ending at i, i+1 have crossed.
  bool finishes_with(int i) const noexcept {
    int a = -1, b = -1;
    for (int x = 0; x < n_; ++x) {
      if (img_[static_cast<std::size_t>(x)] == i - 1) a = x;
      if (img_[static_cast<std::size_t>(x)] == i) b = x;
    }
    return a > b;
  }

  /// this <- this * sigma_i. Requires !finishes_with(i).
  void append(int i) noexcept {
    for (int x = 0; x < n_; ++x) img_[static_cast<std::size_t>(x)] = swap_value(img_[static_cast<std::size_t>(x)], i - 1);
  }

  /// this <- sigma_i^{-1} * this. Requires starts_with(i).
  void strip_front(int i) noexcept { std::swap(img_[static_cast<std::size_t>(i - 1)], img_[static_cast<std::size_t>(i)]); }

  /// Delta^{-1} * this * Delta, i.e. sigma_i -> sigma_{n-i}.
  PermutationBraid flipped() const noexcept {
    PermutationBraid p = *this;
    for (int x = 0; x < n_; ++x)
      p.img_[static_cast<std::size_t>(x)] =
          static_cast<std::uint8_t>(n_ - 1 - img_[static_cast<std::size_t>(n_ - 1 - x)]);
    return p;
  }

  /// A reduced positive word for this permutation braid.
  BraidWord to_word() const {
    PermutationBraid rest = *this;
    std::vector<Letter> letters;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 1; i < n_; ++i) {
        if (rest.starts_with(i)) {
          letters.push_back({i, +1});
          rest.strip_front(i);
          progress = true;
          break;
        }
      }
    }
    return BraidWord(n_, std::move(letters));
  }

  /// Number of crossings.
  int length() const noexcept {
    int inv = 0;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (img_[static_cast<std::size_t>(a)] > img_[static_cast<std::size_t>(b)]) ++inv;
    return inv;
  }

  bool operator==(const PermutationBraid& o) const noexcept {
    if (n_ != o.n_) return false;
    for (int i = 0; i < n_; ++i)
      if (img_[static_cast<std::size_t>(i)] != o.img_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

 private:
  static void check_strands(int n) {
    if (n < 1 || n > kMaxStrands)
      throw ParameterError("permutation braids support 1.." + std::to_string(kMaxStrands) + " strands");
  }
  static std::uint8_t swap_value(std::uint8_t v, int i) noexcept {
    if (v == i) return static_cast<std::uint8_t>(i + 1);
    if (v == i + 1) return static_cast<std::uint8_t>(i);
    return v;
  }

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> img_{};
};

/// Make (a, b) left-weighted in place, preserving the product a*b. Returns true if anything moved.
inline bool left_weight(PermutationBraid& a, PermutationBraid& b) {
  bool changed = false;
  const int n = a.strands();
  for (int i = 1; i < n;) {
    if (b.starts_with(i) && !a.finishes_with(i)) {
      a.append(i);
      b.strip_front(i);
      changed = true;
      i = 1;
    } else {
      ++i;
    }
  }
  return changed;
}

struct NormalForm {
  int strands = 1;
  int infimum = 0;
  std::vector<PermutationBraid> factors;

  int supremum() const noexcept { return infimum + static_cast<int>(factors.size()); }
  bool is_trivial() const noexcept { return infimum == 0 && factors.empty(); }

  /// A word representing this element: Delta^inf followed by each factor's reduced word.
  BraidWord to_word() const {
    const BraidWord d = PermutationBraid::half_twist(strands).to_word();
    BraidWord w = d.pow(infimum);
    for (const auto& f : factors) w = w * f.to_word();
    return w;
  }

  /// e.g. "Δ^2" or "Δ^-1 · [2 1 3] · [1 3 2]" (one-line permutation tables).
  std::string to_string() const {
    std::string s = "Δ^" + std::to_string(infimum);
    for (const auto& f : factors) {
      s += " · [";
      const auto perm = f.permutation();
      for (int i = 1; i <= perm.size(); ++i) {
        if (i > 1) s += ' ';
        s += std::to_string(perm(i));
      }
      s += ']';
    }
    return s;
  }

  bool operator==(const NormalForm&) const = default;
};

namespace detail {

class NormalFormBuilder {
 public:
  explicit NormalFormBuilder(int strands) : n_(strands) {}

  void push(const Letter& l) {
    if (n_ == 1) return;
    if (l.sign > 0) {
      append(PermutationBraid::generator(n_, l.index));
    } else {
      // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); move Delta^{-1} to the front.
      for (auto& f : factors_) f = f.flipped();
      --inf_;
      append(PermutationBraid::delta_over(n_, l.index));
    }
  }

  NormalForm finish() && { return NormalForm{n_, inf_, std::move(factors_)}; }

 private:
  void append(const PermutationBraid& s) {
    factors_.push_back(s);
    for (std::size_t j = factors_.size() - 1; j > 0; --j)
      if (!left_weight(factors_[j - 1], factors_[j])) break;
    std::size_t lead = 0;
    while (lead < factors_.size() && factors_[lead].is_half_twist()) ++lead;
    if (lead > 0) {
      inf_ += static_cast<int>(lead);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
  }

  int n_;
  int inf_ = 0;
  std::vector<PermutationBraid> factors_;
};

}  // namespace detail

inline NormalForm normal_form(const BraidWord& w) {
  detail::NormalFormBuilder builder(w.strands());
  for (const Letter& l : w.letters()) builder.push(l);
  return std::move(builder).finish();
}

/// Word problem in B_n. Throws ParameterError on strand-count mismatch.
inline bool words_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw ParameterError("words_equal: strand counts differ (" + std::to_string(u.strands()) + " vs " +
                         std::to_string(v.strands()) + ")");
  if (u == v) return true;
  return normal_form(u) == normal_form(v);
}

/// Delta on n strands as a positive word.
inline BraidWord half_twist_word(int n) { return PermutationBraid::half_twist(n).to_word(); }

/// (sigma_{n-1} ... sigma_1)^n, equal to Delta^2 in B_n.
inline BraidWord full_twist_word(int n) { return delta(n - 1, n).pow(n); }

/// True iff the positive word w equals omega * Delta^2 for some positive omega.
/// On one strand every word is trivially such a product.
inline bool contains_full_twist(const BraidWord& w) {
  if (!w.is_positive()) throw ParameterError("contains_full_twist expects a positive word");
  if (w.strands() == 1) return true;
  return normal_form(w).infimum >= 2;
}

}  // namespace nbraid

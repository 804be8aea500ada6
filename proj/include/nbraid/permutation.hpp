#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "braid_word.hpp"

namespace nbraid {

/// A bijection of strand positions {1..n}.
///
/// Composition follows the braid's reading order: for words u, v,
/// perm(u v) = perm(u).then(perm(v)), i.e. apply perm(u) first.
class Permutation {
 public:
  explicit Permutation(int n = 1) : image_(static_cast<std::size_t>(n)) {
    std::iota(image_.begin(), image_.end(), 1);
  }

  /// From a one-line image table (1-based values).
  static Permutation from_images(std::vector<int> images) {
    Permutation p(0);
    std::vector<bool> seen(images.size() + 1, false);
    for (int v : images) {
      if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
        throw ParameterError("image table is not a permutation");
      seen[static_cast<std::size_t>(v)] = true;
    }
    p.image_ = std::move(images);
    return p;
  }

  int size() const noexcept { return static_cast<int>(image_.size()); }

  /// Final position of the strand that starts at position i (both 1-based).
  int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }

  const std::vector<int>& images() const noexcept { return image_; }

  /// This permutation followed by `next`.
  Permutation then(const Permutation& next) const {
    if (next.size() != size()) throw ParameterError("permutation size mismatch");
    Permutation out(size());
    for (int i = 1; i <= size(); ++i) out.image_[static_cast<std::size_t>(i - 1)] = next((*this)(i));
    return out;
  }

  Permutation inverse() const {
    Permutation out(size());
    for (int i = 1; i <= size(); ++i) out.image_[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return out;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i)
      if (image_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  int cycle_count() const {
    std::vector<bool> seen(image_.size(), false);
    int cycles = 0;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (seen[i]) continue;
      ++cycles;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j] - 1)) seen[j] = true;
    }
    return cycles;
  }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// Projection B_n -> S_n, tracking each strand's position letter by letter.
inline Permutation underlying_permutation(const BraidWord& w) {
  const int n = w.strands();
  // pos[s] = current position of the strand that started at s (0-based).
  std::vector<int> at(static_cast<std::size_t>(n));  // at[p] = strand currently at p
  std::iota(at.begin(), at.end(), 0);
  for (const Letter& l : w.letters()) std::swap(at[static_cast<std::size_t>(l.index - 1)],
                                                at[static_cast<std::size_t>(l.index)]);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) image[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p + 1;
  return Permutation::from_images(std::move(image));
}

struct ClosureInvariants {
  int strands = 1;
  int exponent_sum = 0;
  int component_count = 1;
  int bennequin_quantity = 1;  // strands - exponent_sum

  bool operator==(const ClosureInvariants&) const = default;
};

inline ClosureInvariants closure_invariants(const BraidWord& w) {
  ClosureInvariants c;
  c.strands = w.strands();
  c.exponent_sum = w.exponent_sum();
  c.component_count = underlying_permutation(w).cycle_count();
  c.bennequin_quantity = c.strands - c.exponent_sum;
  return c;
}

}  // namespace nbraid

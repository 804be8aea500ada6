#pragma once

// Words in the Artin generators of the braid group B_n.
//
// Generators are 1-based: letter {i, +1} is sigma_i, strand i+1 crossing over
// strand i; {i, -1} is its inverse. Letters are read left to right (top to
// bottom in a vertical braid diagram).

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace nbraid {

struct Letter {
  int index = 1;  // the i of sigma_i
  int sign = +1;  // +1 or -1

  constexpr Letter inverse() const noexcept { return {index, -sign}; }
  constexpr bool operator==(const Letter&) const = default;
};

/// An immutable braid word on a fixed number of strands.
class BraidWord {
 public:
  BraidWord() : BraidWord(1) {}
  explicit BraidWord(int strands, std::vector<Letter> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1)
      throw ParameterError("braid word needs strands >= 1, got " + std::to_string(strands_));
    for (const Letter& l : letters_) {
      if (l.sign != 1 && l.sign != -1)
        throw ParameterError("letter sign must be +1 or -1");
      if (l.index < 1 || l.index > strands_ - 1)
        throw ParameterError("generator sigma_" + std::to_string(l.index) +
                             " does not exist on " + std::to_string(strands_) + " strands");
    }
  }

  /// Build from signed generator indices: +i is sigma_i, -i its inverse.
  static BraidWord from_signed(int strands, std::span<const int> gens) {
    std::vector<Letter> letters;
    letters.reserve(gens.size());
    for (int g : gens) {
      if (g == 0) throw ParameterError("generator index 0 is not a braid generator");
      letters.push_back({g > 0 ? g : -g, g > 0 ? 1 : -1});
    }
    return BraidWord(strands, std::move(letters));
  }
  static BraidWord from_signed(int strands, std::initializer_list<int> gens) {
    return from_signed(strands, std::span<const int>(gens.begin(), gens.size()));
  }

  int strands() const noexcept { return strands_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_.at(i); }

  bool is_positive() const noexcept {
    return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.sign > 0; });
  }

  int exponent_sum() const noexcept {
    int s = 0;
    for (const Letter& l : letters_) s += l.sign;
    return s;
  }

  /// Largest generator index occurring, 0 for the empty word.
  int max_index() const noexcept {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.index);
    return m;
  }

  std::size_t count_index(int index) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        letters_.begin(), letters_.end(), [index](const Letter& l) { return l.index == index; }));
  }

  /// Signed indices, the inverse of from_signed.
  std::vector<int> to_signed() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) out.push_back(l.sign * l.index);
    return out;
  }

  /// Concatenation; both words must live on the same strand count.
  BraidWord operator*(const BraidWord& rhs) const {
    if (rhs.strands_ != strands_)
      throw ParameterError("cannot concatenate words on " + std::to_string(strands_) + " and " +
                           std::to_string(rhs.strands_) + " strands");
    std::vector<Letter> out = letters_;
    out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
    return BraidWord(strands_, std::move(out));
  }

  BraidWord pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    std::vector<Letter> out;
    out.reserve(letters_.size() * static_cast<std::size_t>(e));
    for (int k = 0; k < e; ++k) out.insert(out.end(), letters_.begin(), letters_.end());
    return BraidWord(strands_, std::move(out));
  }

  BraidWord inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return BraidWord(strands_, std::move(out));
  }

  BraidWord slice(std::size_t pos, std::size_t len) const {
    if (pos > letters_.size() || len > letters_.size() - pos)
      throw ParameterError("slice [" + std::to_string(pos) + ", " + std::to_string(pos + len) +
                           ") outside word of length " + std::to_string(letters_.size()));
    return BraidWord(strands_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                   letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
  }

  /// Replace letters [pos, pos+len) by `replacement`.
  BraidWord splice(std::size_t pos, std::size_t len, const BraidWord& replacement) const {
    if (pos > letters_.size() || len > letters_.size() - pos)
      throw ParameterError("splice range outside word");
    std::vector<Letter> out(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), replacement.letters_.begin(), replacement.letters_.end());
    out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(pos + len), letters_.end());
    return BraidWord(strands_, std::move(out));
  }

  /// The same letters read on a different strand count (used by (de)stabilization).
  BraidWord with_strands(int strands) const { return BraidWord(strands, letters_); }

  /// Image under sigma_i -> sigma_{n-i}; letter order is kept.
  BraidWord reflected() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) out.push_back({strands_ - l.index, l.sign});
    return BraidWord(strands_, std::move(out));
  }

  bool operator==(const BraidWord&) const = default;

  /// Canonical text form, e.g. "strands=3; 1 2 -1". The empty word is "strands=4;".
  std::string to_string() const {
    std::string s = "strands=" + std::to_string(strands_) + ";";
    for (const Letter& l : letters_) {
      s += ' ';
      s += std::to_string(l.sign * l.index);
    }
    return s;
  }

  static BraidWord parse(std::string_view text);

 private:
  int strands_;
  std::vector<Letter> letters_;
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline int parse_int(std::string_view tok, std::string_view what) {
  int value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError("bad integer '" + std::string(tok) + "' in " + std::string(what));
  return value;
}

}  // namespace detail

inline BraidWord BraidWord::parse(std::string_view text) {
  std::string_view s = detail::trim(text);
  constexpr std::string_view key = "strands";
  if (s.substr(0, key.size()) != key) throw ParseError("braid word must start with 'strands='");
  s.remove_prefix(key.size());
  s = detail::trim(s);
  if (s.empty() || s.front() != '=') throw ParseError("expected '=' after 'strands'");
  s.remove_prefix(1);
  const auto semi = s.find(';');
  if (semi == std::string_view::npos) throw ParseError("expected ';' after strand count");
  const int strands = detail::parse_int(detail::trim(s.substr(0, semi)), "strand count");
  s.remove_prefix(semi + 1);

  std::vector<int> gens;
  while (true) {
    s = detail::trim(s);
    if (s.empty()) break;
    std::size_t end = 0;
    while (end < s.size() && !detail::is_space(s[end])) ++end;
    const int g = detail::parse_int(s.substr(0, end), "braid word");
    if (g == 0) throw ParseError("generator 0 in braid word");
    gens.push_back(g);
    s.remove_prefix(end);
  }
  try {
    return from_signed(strands, gens);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

/// delta_n = sigma_n sigma_{n-1} ... sigma_1 on `strands` strands. delta_0 is empty.
inline BraidWord delta(int n, int strands) {
  if (n < 0) throw ParameterError("delta index must be >= 0");
  if (strands < n + 1)
    throw ParameterError("delta_" + std::to_string(n) + " needs strands >= " + std::to_string(n + 1));
  std::vector<Letter> out;
  for (int i = n; i >= 1; --i) out.push_back({i, +1});
  return BraidWord(strands, std::move(out));
}

/// gamma_n = sigma_1 sigma_2 ... sigma_n on `strands` strands. gamma_0 is empty.
inline BraidWord gamma(int n, int strands) {
  if (n < 0) throw ParameterError("gamma index must be >= 0");
  if (strands < n + 1)
    throw ParameterError("gamma_" + std::to_string(n) + " needs strands >= " + std::to_string(n + 1));
  std::vector<Letter> out;
  for (int i = 1; i <= n; ++i) out.push_back({i, +1});
  return BraidWord(strands, std::move(out));
}

/// sigma_from sigma_{from+1} ... sigma_to (ascending run), empty when to < from.
inline BraidWord ascending_run(int from, int to, int strands) {
  std::vector<Letter> out;
  for (int i = from; i <= to; ++i) out.push_back({i, +1});
  return BraidWord(strands, std::move(out));
}

/// sigma_from sigma_{from-1} ... sigma_to (descending run), empty when from < to.
inline BraidWord descending_run(int from, int to, int strands) {
  std::vector<Letter> out;
  for (int i = from; i >= to; --i) out.push_back({i, +1});
  return BraidWord(strands, std::move(out));
}

}  // namespace nbraid

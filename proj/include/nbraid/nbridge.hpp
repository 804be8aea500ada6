#pragma once

#include <string>

#include "braid_word.hpp"

namespace nbraid {

/// Parameters of the n-bridge braid K(w, b, t, n) = delta_b^n delta_{w-1}^t on w strands.
struct NBridgeParams {
  int w = 2;  // strands
  int b = 1;  // bridge width
  int t = 1;  // twists
  int n = 1;  // bridges

  /// Throws ParameterError naming the first violated bound.
  void validate() const {
    if (w < 2) throw ParameterError("w >= 2 violated (w=" + std::to_string(w) + ")");
    if (b < 1) throw ParameterError("b >= 1 violated (b=" + std::to_string(b) + ")");
    if (b > w - 1)
      throw ParameterError("b <= w-1 violated (b=" + std::to_string(b) + ", w=" + std::to_string(w) + ")");
    if (t < 1) throw ParameterError("t >= 1 violated (t=" + std::to_string(t) + ")");
    if (n < 1) throw ParameterError("n >= 1 violated (n=" + std::to_string(n) + ")");
  }

  std::string to_string() const {
    return "K(" + std::to_string(w) + "," + std::to_string(b) + "," + std::to_string(t) + "," +
           std::to_string(n) + ")";
  }

  bool operator==(const NBridgeParams&) const = default;
};

inline BraidWord nbridge_word(const NBridgeParams& p) {
  p.validate();
  return delta(p.b, p.w).pow(p.n) * delta(p.w - 1, p.w).pow(p.t);
}

}  // namespace nbraid

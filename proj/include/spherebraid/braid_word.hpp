#pragma once

#include <string>
#include <vector>

namespace spherebraid {

/// A word in the Artin generators of B_m(C).  Letters are signed indices:
/// +k stands for sigma_k, -k for its inverse, 1 <= k <= strands - 1.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  int length() const { return static_cast<int>(letters.size()); }

  /// Cancel adjacent sigma_k sigma_k^{-1} pairs until stable.
  BraidWord free_reduced() const;

  /// Free reduction plus rotation of cancelling boundary letters; the
  /// result is a conjugate word with the same closure link.
  BraidWord cyclically_reduced() const;

  /// Image in S_m; perm[i] = endpoint of the strand starting at slot i.
  std::vector<int> permutation() const;
  bool is_pure() const;

  BraidWord inverse() const;
  BraidWord power(int k) const;
  BraidWord concat(const BraidWord& other) const;
};

/// Full twist (sigma_1 ... sigma_{m-1})^m, the generator of the center;
/// exponent sum m (m - 1).
BraidWord full_twist(int m);

/// Text format "m: l1 l2 ..." (e.g. "4: 1 -2 3"); the empty word prints as
/// "m:".
std::string to_text(const BraidWord& w);
BraidWord parse_braid_text(const std::string& text);

}  // namespace spherebraid

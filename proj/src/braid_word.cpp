#include "spherebraid/braid_word.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "spherebraid/errors.hpp"

namespace spherebraid {

BraidWord BraidWord::free_reduced() const {
  BraidWord out{strands, {}};
  out.letters.reserve(letters.size());
  for (int l : letters) {
    if (!out.letters.empty() && out.letters.back() == -l) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

BraidWord BraidWord::cyclically_reduced() const {
  BraidWord w = free_reduced();
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  BraidWord out{strands, std::vector<int>(w.letters.begin() + lo, w.letters.begin() + hi)};
  return out;
}

std::vector<int> BraidWord::permutation() const {
  std::vector<int> perm(strands);
  std::iota(perm.begin(), perm.end(), 0);
  // track positions: pos[i] = current slot of the strand that started at i
  std::vector<int> slot_to_strand(strands);
  std::iota(slot_to_strand.begin(), slot_to_strand.end(), 0);
  for (int l : letters) {
    int k = std::abs(l) - 1;
    if (k < 0 || k + 1 >= strands) throw DomainError("letter index out of range");
    std::swap(slot_to_strand[k], slot_to_strand[k + 1]);
  }
  for (int slot = 0; slot < strands; ++slot) perm[slot_to_strand[slot]] = slot;
  return perm;
}

bool BraidWord::is_pure() const {
  auto p = permutation();
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

BraidWord BraidWord::inverse() const {
  BraidWord out{strands, {}};
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord BraidWord::power(int k) const {
  BraidWord base = k >= 0 ? *this : inverse();
  BraidWord out{strands, {}};
  out.letters.reserve(letters.size() * std::abs(k));
  for (int i = 0; i < std::abs(k); ++i) {
    out.letters.insert(out.letters.end(), base.letters.begin(), base.letters.end());
  }
  return out;
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  if (other.strands != strands) throw DomainError("concat needs equal strand counts");
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

BraidWord full_twist(int m) {
  if (m < 2) throw DomainError("full twist needs m >= 2");
  BraidWord w{m, {}};
  w.letters.reserve(static_cast<size_t>(m) * (m - 1));
  for (int rep = 0; rep < m; ++rep) {
    for (int k = 1; k < m; ++k) w.letters.push_back(k);
  }
  return w;
}

std::string to_text(const BraidWord& w) {
  std::ostringstream os;
  os << w.strands << ":";
  for (int l : w.letters) os << " " << l;
  return os.str();
}

BraidWord parse_braid_text(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError("braid text needs 'm: letters'");
  BraidWord w;
  w.strands = std::atoi(text.substr(0, colon).c_str());
  if (w.strands < 2) throw DomainError("braid text needs m >= 2");
  std::istringstream is(text.substr(colon + 1));
  int l = 0;
  while (is >> l) {
    if (l == 0 || std::abs(l) >= w.strands) throw DomainError("braid letter out of range");
    w.letters.push_back(l);
  }
  return w;
}

}  // namespace spherebraid

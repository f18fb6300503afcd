#include "spherebraid/seifert.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numeric>
#include <vector>

#include "spherebraid/errors.hpp"

namespace spherebraid {

namespace {

struct Generator {
  int corridor;  // 1-based generator index of the braid
  int a, b;      // letter positions of the two bands (a < b)
  int ea, eb;    // band signs
};

std::vector<Generator> surface_basis(const BraidWord& w) {
  std::vector<std::vector<std::pair<int, int>>> bands(w.strands);  // corridor -> (pos, sign)
  for (int t = 0; t < w.length(); ++t) {
    int l = w.letters[t];
    bands[std::abs(l)].push_back({t, l > 0 ? 1 : -1});
  }
  std::vector<Generator> gens;
  for (int c = 1; c < w.strands; ++c) {
    for (size_t k = 0; k + 1 < bands[c].size(); ++k) {
      gens.push_back({c, bands[c][k].first, bands[c][k + 1].first, bands[c][k].second,
                      bands[c][k + 1].second});
    }
  }
  return gens;
}

// --- overflow-checked small rationals --------------------------------------

struct RatOverflow {};

struct Rat64 {
  long long n = 0, d = 1;

  static long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw RatOverflow{};
    return r;
  }
  static long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw RatOverflow{};
    return r;
  }

  void normalize() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(std::llabs(n), d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
  }

  Rat64() = default;
  Rat64(long long v) : n(v), d(1) {}
  Rat64(long long nn, long long dd) : n(nn), d(dd) { normalize(); }

  bool zero() const { return n == 0; }
  int sign() const { return n > 0 ? 1 : (n < 0 ? -1 : 0); }

  Rat64 operator*(const Rat64& o) const {
    long long g1 = std::gcd(std::llabs(n), o.d);
    long long g2 = std::gcd(std::llabs(o.n), d);
    return Rat64(checked_mul(n / g1, o.n / g2), checked_mul(d / g2, o.d / g1));
  }
  Rat64 operator/(const Rat64& o) const { return *this * Rat64(o.d, o.n); }
  Rat64 operator-(const Rat64& o) const {
    long long g = std::gcd(d, o.d);
    long long lcm = checked_mul(d / g, o.d);
    long long lhs = checked_mul(n, lcm / d);
    long long rhs = checked_mul(o.n, lcm / o.d);
    return Rat64(checked_add(lhs, -rhs), lcm);
  }
  Rat64 operator+(const Rat64& o) const {
    long long g = std::gcd(d, o.d);
    long long lcm = checked_mul(d / g, o.d);
    return Rat64(checked_add(checked_mul(n, lcm / d), checked_mul(o.n, lcm / o.d)), lcm);
  }
};

struct BigRat {
  boost::multiprecision::cpp_rational v;
  BigRat() = default;
  BigRat(long long x) : v(x) {}
  bool zero() const { return v == 0; }
  int sign() const { return v > 0 ? 1 : (v < 0 ? -1 : 0); }
  BigRat operator*(const BigRat& o) const { return {v * o.v}; }
  BigRat operator/(const BigRat& o) const { return {v / o.v}; }
  BigRat operator-(const BigRat& o) const { return {v - o.v}; }
  BigRat operator+(const BigRat& o) const { return {v + o.v}; }
 private:
  BigRat(boost::multiprecision::cpp_rational x) : v(std::move(x)) {}
};

template <class R>
int eliminate(const Eigen::MatrixXi& sym) {
  int k = static_cast<int>(sym.rows());
  std::vector<std::vector<R>> s(k, std::vector<R>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) s[i][j] = R(sym(i, j));
  }
  std::vector<int> active;
  active.reserve(k);
  for (int i = 0; i < k; ++i) active.push_back(i);
  int sig = 0;
  while (!active.empty()) {
    int pivot = -1;
    for (int idx : active) {
      if (!s[idx][idx].zero()) {
        pivot = idx;
        break;
      }
    }
    if (pivot < 0) {
      // all active diagonal entries vanish; a hyperbolic pair or done
      int a = -1, b = -1;
      for (size_t x = 0; x < active.size() && a < 0; ++x) {
        for (size_t y = x + 1; y < active.size(); ++y) {
          if (!s[active[x]][active[y]].zero()) {
            a = active[x];
            b = active[y];
            break;
          }
        }
      }
      if (a < 0) break;  // null block
      // congruence by E = I + e_b e_a^T: add column b to column a, then
      // row b to row a (the second pass sees the updated column, which is
      // exactly what makes s[a][a] = 2 s[a][b])
      for (int idx : active) s[idx][a] = s[idx][a] + s[idx][b];
      for (int idx : active) s[a][idx] = s[a][idx] + s[b][idx];
      continue;
    }
    sig += s[pivot][pivot].sign();
    R piv = s[pivot][pivot];
    std::vector<int> nonzero;
    for (int idx : active) {
      if (idx != pivot && !s[pivot][idx].zero()) nonzero.push_back(idx);
    }
    for (int i : nonzero) {
      R f = s[i][pivot] / piv;
      for (int j : nonzero) s[i][j] = s[i][j] - f * s[pivot][j];
      s[i][pivot] = R(0);
      s[pivot][i] = R(0);
    }
    active.erase(std::find(active.begin(), active.end(), pivot));
  }
  return sig;
}

}  // namespace

Eigen::MatrixXi seifert_matrix(const BraidWord& w) {
  auto gens = surface_basis(w);
  int k = static_cast<int>(gens.size());
  Eigen::MatrixXi v = Eigen::MatrixXi::Zero(k, k);
  for (int x = 0; x < k; ++x) {
    const auto& g = gens[x];
    v(x, x) = -(g.ea + g.eb) / 2;
    for (int y = x + 1; y < k; ++y) {
      const auto& f = gens[y];
      if (f.corridor == g.corridor) {
        // consecutive generators share a band; non-consecutive do not link
        if (f.a == g.b) {
          if (f.ea > 0) {
            v(x, y) = 1;
          } else {
            v(y, x) = -1;
          }
        }
      } else if (std::abs(f.corridor - g.corridor) == 1) {
        const auto& left = (g.corridor < f.corridor) ? g : f;
        const auto& right = (g.corridor < f.corridor) ? f : g;
        int entry = 0;
        if (left.a < right.a && right.a < left.b && left.b < right.b) {
          entry = 1;  // left corridor's interval starts first
        } else if (right.a < left.a && left.a < right.b && right.b < left.b) {
          entry = -1;
        }
        v(x, y) = entry;  // split of V + V^T is immaterial for the signature
      }
    }
  }
  return v;
}

int signature_exact(const Eigen::MatrixXi& sym) {
  try {
    return eliminate<Rat64>(sym);
  } catch (const RatOverflow&) {
    return eliminate<BigRat>(sym);
  }
}

int closure_signature(const BraidWord& w) {
  Eigen::MatrixXi v = seifert_matrix(w);
  Eigen::MatrixXi sym = v + v.transpose().eval();
  return signature_exact(sym);
}

}  // namespace spherebraid

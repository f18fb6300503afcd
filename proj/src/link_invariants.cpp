#include "spherebraid/link_invariants.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <vector>

#include "spherebraid/errors.hpp"

namespace spherebraid {

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int l : w.letters) s += (l > 0) ? 1 : -1;
  return s;
}

namespace {

HomogenizeResult tail_fit(const std::vector<double>& values, int k_first, double tol) {
  // least squares y = slope * k + b on k = k_first .. k_first + count - 1
  int count = static_cast<int>(values.size());
  double sk = 0, sy = 0, skk = 0, sky = 0;
  for (int i = 0; i < count; ++i) {
    double k = k_first + i;
    sk += k;
    sy += values[i];
    skk += k * k;
    sky += k * values[i];
  }
  double det = count * skk - sk * sk;
  double slope = (count * sky - sk * sy) / det;
  double b = (sy - slope * sk) / count;
  double residual = 0.0;
  for (int i = 0; i < count; ++i) {
    residual = std::max(residual, std::abs(values[i] - slope * (k_first + i) - b));
  }
  if (residual > tol) {
    throw NonStabilized("homogenization tail is not affine within tolerance");
  }
  return {slope, residual};
}

}  // namespace

HomogenizeResult homogenize(const std::function<double(const BraidWord&)>& f, const BraidWord& a,
                            int depth, double tol) {
  if (depth < 4) throw DomainError("homogenize needs depth >= 4");
  int k_first = (depth + 1) / 2;
  std::vector<double> tail;
  tail.reserve(depth - k_first + 1);
  for (int k = k_first; k <= depth; ++k) tail.push_back(f(a.power(k)));
  return tail_fit(tail, k_first, tol);
}

double homogenized_signature(const BraidWord& w, int depth, double tol) {
  BraidWord base = w.cyclically_reduced();
  if (base.letters.empty()) return 0.0;
  int k_first = (depth + 1) / 2;
  std::vector<double> tail;
  tail.reserve(depth - k_first + 1);
  for (int k = k_first; k <= depth; ++k) {
    tail.push_back(static_cast<double>(closure_signature(base.power(k))));
  }
  return tail_fit(tail, k_first, tol).slope;
}

double full_twist_signature_rate(int m, int depth) {
  static std::map<std::pair<int, int>, double> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m, depth});
    if (it != cache.end()) return it->second;
  }
  BraidWord delta = full_twist(m);
  double rate = homogenized_signature(delta, depth) / exponent_sum(delta);
  std::lock_guard<std::mutex> lock(mu);
  cache[{m, depth}] = rate;
  return rate;
}

QuasimorphismValue s_quasimorphism(const BraidWord& alpha, int depth, double tol) {
  if (!alpha.is_pure()) throw NotPure("s is defined on pure braids");
  if (alpha.strands < 2) return {0.0, std::nullopt};
  double sbar = homogenized_signature(alpha, depth, tol);
  double rate = full_twist_signature_rate(alpha.strands, depth);
  return {sbar - rate * exponent_sum(alpha), std::nullopt};
}

std::string invariant_csv_row(const BraidWord& w, int depth) {
  std::ostringstream os;
  os << '"' << to_text(w) << '"' << ',' << w.strands << ',' << exponent_sum(w) << ','
     << closure_signature(w);
  if (w.is_pure()) {
    os << ',' << s_quasimorphism(w, depth).value;
  } else {
    os << ",";
  }
  return os.str();
}

}  // namespace spherebraid

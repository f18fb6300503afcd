#include "spherebraid/configuration.hpp"

#include <cmath>

#include "spherebraid/errors.hpp"

namespace spherebraid {

double Configuration::min_sep() const {
  double best = 2.0;
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      best = std::min(best, chordal(points[i], points[j]));
    }
  }
  return best;
}

Configuration basepoint_config(int n, uint64_t seed) {
  Rng rng(seed, 0xb53e);
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  Configuration q;
  q.points.reserve(n);
  for (int i = 0; i < n; ++i) {
    double h = -0.8 + 1.6 * (i + 0.5) / n;  // stay away from both poles
    double phi = golden * i + 0.02 * rng.uniform(-1.0, 1.0);
    h += 0.02 * rng.uniform(-1.0, 1.0) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - h * h));
    q.points.push_back(from_sphere3({r * std::cos(phi), r * std::sin(phi), h}));
  }
  return q;
}

Configuration sample_configuration(int n, Rng& rng, const ConfigPredicate& accept) {
  if (n < 2) throw DomainError("configurations need n >= 2 points");
  for (long attempt = 0; attempt < conv::kSamplerBudget; ++attempt) {
    Configuration x;
    x.points.reserve(n);
    for (int i = 0; i < n; ++i) x.points.push_back(random_point(rng));
    if (x.min_sep() < conv::kEpsConfig) continue;
    if (accept && !accept(x)) continue;
    return x;
  }
  throw SamplerStuck("configuration sampler exceeded its rejection budget");
}

}  // namespace spherebraid

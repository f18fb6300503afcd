#pragma once

#include <functional>
#include <vector>

#include "spherebraid/projective.hpp"

namespace spherebraid {

/// Ordered tuple of pairwise-distinct points, a point of X_n(CP^1).
struct Configuration {
  std::vector<ProjPoint> points;

  int n() const { return static_cast<int>(points.size()); }
  double min_sep() const;
  bool valid(double eps = conv::kEpsConfig) const { return min_sep() >= eps; }
};

/// Quasi-uniform generic basepoint: Fibonacci spiral vertices with a seeded
/// jitter that breaks the residual symmetries.  All points stay off the
/// poles so that both short-path systems are defined.
Configuration basepoint_config(int n, uint64_t seed);

using ConfigPredicate = std::function<bool(const Configuration&)>;

/// n i.i.d. mu-uniform points, rejected until min_sep >= kEpsConfig and the
/// optional predicate accepts (used for short-path nondegeneracy).  Throws
/// SamplerStuck after kSamplerBudget rejections.
Configuration sample_configuration(int n, Rng& rng, const ConfigPredicate& accept = nullptr);

}  // namespace spherebraid

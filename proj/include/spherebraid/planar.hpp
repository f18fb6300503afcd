#pragma once

#include <functional>
#include <vector>

#include "spherebraid/loop.hpp"

namespace spherebraid {

/// A loop of m = n-1 planar strands: the n-3 moving cross-ratio coordinates
/// u_k(t) of a configuration loop plus two constant strands at 0 and 1.
/// The grid is refined so that consecutive strand moves stay below
/// kPlanarStepFrac of the local pairwise separation, which rules out
/// crossings hiding between samples.
struct PlanarLoop {
  std::vector<double> times;             // refined grid on [0, 1]
  std::vector<std::vector<Cx>> grid;     // grid[ti][strand]
  std::function<std::vector<Cx>(double)> eval;
  int moving = 0;

  int strands() const { return grid.empty() ? 0 : static_cast<int>(grid.front().size()); }

  PlanarLoop reversed() const;

  /// Build directly from strand evaluators (used by tests and diagnostics).
  static PlanarLoop from_eval(std::function<std::vector<Cx>(double)> eval, int base_samples);
};

/// pi_c along the loop, with the constant strands at 0 and 1 appended.
/// Throws NumericalDiagonal when two planar strands come within kEpsPlanar.
PlanarLoop planarize(const Loop& loop);

}  // namespace spherebraid

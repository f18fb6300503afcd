#pragma once

#include <Eigen/Dense>
#include <string>

#include "spherebraid/braid_word.hpp"
#include "spherebraid/planar.hpp"
#include "spherebraid/rng.hpp"

namespace spherebraid {

/// One transverse crossing of the direction-theta diagram.  For
/// omega = e^{i theta} the diagram position is p = Im(e^{-i theta} u) and
/// the depth is q = Re(e^{-i theta} u); the strand with larger q is over.
struct CrossingEvent {
  double t = 0.0;
  int over = 0;
  int under = 0;
  int position = 0;  // generator index, 1-based
  int sign = 0;      // +1 when the over-strand moves towards larger positions
};

/// All crossings of the theta-diagram in time order, bisected to
/// kCrossingTimeTol.  Throws NonGenericDirection on tangencies, triple
/// alignments, or crossings too close in time.
std::vector<CrossingEvent> scan_crossings(const PlanarLoop& loop, double theta);

/// The braid word read off the theta-diagram.
BraidWord extract_braid(const PlanarLoop& loop, double theta);

/// counts(i, j) = number of times strand i overcrosses strand j.
Eigen::MatrixXi crossing_counts(const PlanarLoop& loop, double theta);

/// int |theta'_ij| along the loop: total angular variation of
/// u_i - u_j, divided by 2 pi.
double abs_winding_integral(const PlanarLoop& loop, int i, int j);

/// A direction with all crossings transverse and n_ij <= C int |theta'_ij|
/// for every ordered pair, found by seeded uniform sampling.  Requires
/// C > (m-1)(m-2)/2.  Throws DirectionSearchExhausted after the retry
/// budget.
double choose_direction(const PlanarLoop& loop, double C, Rng& rng);

/// Free-reduced length of the braid extracted at a chosen generic
/// direction: an upper bound for the word norm of the loop class.
int word_norm_bound(const Loop& loop, double C, Rng& rng);

std::string crossing_csv(const std::vector<CrossingEvent>& events);

}  // namespace spherebraid

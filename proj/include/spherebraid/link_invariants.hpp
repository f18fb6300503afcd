#pragma once

#include <functional>
#include <optional>
#include <string>

#include "spherebraid/braid_word.hpp"
#include "spherebraid/conventions.hpp"
#include "spherebraid/seifert.hpp"

namespace spherebraid {

/// Sum of letter signs: the homomorphism B_m -> Z with value 1 on each
/// Artin generator.
int exponent_sum(const BraidWord& w);

struct HomogenizeResult {
  double slope = 0.0;
  double residual = 0.0;  // max absolute deviation from the tail fit
};

/// Limit slope of f(a^k)/k, estimated by a least-squares affine fit on the
/// stabilized tail k in [ceil(depth/2), depth].  The sequences arising here
/// (signatures and exponent sums of braid powers) are eventually affine, so
/// the tail fit recovers the limit exactly; NonStabilized is thrown when
/// the tail residual exceeds tol.
HomogenizeResult homogenize(const std::function<double(const BraidWord&)>& f, const BraidWord& a,
                            int depth = conv::kHomogenizeDepth,
                            double tol = conv::kAffineFitTolStrict);

/// Homogenized closure signature of w (cyclically reduced before powering;
/// the closure is unchanged).
double homogenized_signature(const BraidWord& w, int depth = conv::kHomogenizeDepth,
                             double tol = conv::kAffineFitTolStrict);

struct QuasimorphismValue {
  double value = 0.0;
  std::optional<double> defect_witness;
};

/// s_m(alpha) = sign~(alpha) - (sign~(Delta)/lk(Delta)) lk(alpha) on pure
/// braids, with Delta the full twist; s vanishes on Delta by construction
/// and descends to P_{m+1}(S^2).  Throws NotPure otherwise.
QuasimorphismValue s_quasimorphism(const BraidWord& alpha, int depth = conv::kHomogenizeDepth,
                                   double tol = conv::kAffineFitTolStrict);

/// slope(sign~(Delta_m)) / lk(Delta_m), cached per (m, depth).
double full_twist_signature_rate(int m, int depth = conv::kHomogenizeDepth);

/// CSV line "word,strands,lk,signature,s" for invariant tables.
std::string invariant_csv_row(const BraidWord& w, int depth = conv::kHomogenizeDepth);

}  // namespace spherebraid

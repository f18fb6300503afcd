#pragma once

// All numerical conventions and tolerances in one place.  Every estimate
// record emitted by the CLI echoes these values, so results are
// reproducible down to the constants that produced them.

namespace spherebraid::conv {

// --- sphere geometry ----------------------------------------------------
// Lengths use the unit-curvature round sphere (radius 1, total area 4*pi).
// In the affine chart zeta the round metric density is
//   |v|_round = kMetricChartFactor * |v| / (1 + |zeta|^2).
// The half-scale chart norm |v| / (1 + |zeta|^2) is kept separately on
// TangentVector::sph_norm(); it is the norm used in chart-comparison
// estimates and satisfies (1/2)|v| <= |v|_sph <= |v| on the unit disk.
inline constexpr double kSphereRadius = 1.0;
inline constexpr double kMetricChartFactor = 2.0;

// The measure mu is normalized to total mass 1 (independently of the
// metric).  Its chart-0 density is (1/pi) * (1 + |zeta|^2)^-2, so the
// cap measure is a(r) = r^2 / (1 + r^2) and u(r) = 1 - 2 a(r).
inline constexpr double kMeasureTotalMass = 1.0;

// --- point and configuration tolerances ---------------------------------
// Chordal distances live in [0, 2] on the radius-1 sphere.
inline constexpr double kEpsPoint = 1e-9;      // "distinct points" threshold
inline constexpr double kEpsAntipodal = 1e-9;  // antipodal-pair rejection
inline constexpr double kEpsConfig = 1e-4;     // sampler min pairwise separation
inline constexpr double kEpsPlanar = 1e-7;     // min separation in cross-ratio coords

// Loop samples (and short paths) must keep at least this separation.
inline constexpr double kLoopMinSep = kEpsConfig / 2.0;

inline constexpr long kSamplerBudget = 1000000;  // rejections before SamplerStuck

// --- braid diagram extraction --------------------------------------------
// A crossing is rejected as non-generic when the relative angle between
// the two strand velocities and the projection line is below
// kMinCrossingAngle, or when two crossings are closer than kMinCrossingGap
// in loop time.  Crossing times are bisected to kCrossingTimeTol.
inline constexpr double kMinCrossingAngle = 1e-4;
inline constexpr double kMinCrossingGap = 1e-9;
inline constexpr double kCrossingTimeTol = 1e-9;
inline constexpr int kDirectionBudget = 256;

// Planar sampling refinement: consecutive strand moves are kept below this
// fraction of the current pairwise separation, which guarantees no crossing
// can hide between consecutive samples.
inline constexpr double kPlanarStepFrac = 0.3;

// --- orientation conventions ----------------------------------------------
// A counterclockwise orbit of two planar points is the positive generator:
// one full CCW revolution extracts as "2: 1 1" (sigma_1^2).  Concretely,
// for projection direction omega = e^{i theta} the diagram position is
// p = Im(e^{-i theta} u), the depth is q = Re(e^{-i theta} u), the strand
// with larger q is over, and a crossing is positive when the over-strand
// moves towards the larger position index.
inline constexpr bool kCcwOrbitPositive = true;

// Link signature convention: the positive trefoil (sigma_1^3) closes to a
// link of signature -2.  Both the Seifert-matrix route and the Goeritz
// oracle are anchored to this.
inline constexpr int kPositiveTrefoilSignature = -2;

// --- homogenization --------------------------------------------------------
inline constexpr int kHomogenizeDepth = 8;
// Sequences f(a^k) here are eventually exactly affine; the strict tolerance
// applies where the spec pins exact values.  Estimators accept a bounded
// integer wobble (period-2 parity effects in signatures) up to the loose
// tolerance and report the residual.
inline constexpr double kAffineFitTolStrict = 1e-9;
inline constexpr double kAffineFitTolLoose = 0.75;

// --- integration -----------------------------------------------------------
inline constexpr double kDtFraction = 1e-3;      // default dt = kDtFraction * duration
inline constexpr double kMaxStepMove = 0.2;      // chordal move per step before blowup
inline constexpr double kQuadRelVar = 0.10;      // path quadrature refinement trigger
inline constexpr int kQuadMaxDepth = 30;

// --- Monte Carlo defaults ----------------------------------------------------
inline constexpr long kDefaultSamples = 10000;   // configurations per estimate
inline constexpr long kDefaultTimeSteps = 1000;  // steps per trajectory

}  // namespace spherebraid::conv

#pragma once

#include <Eigen/Dense>
#include <memory>
#include <variant>
#include <vector>

#include "spherebraid/projective.hpp"
#include "spherebraid/radial_profile.hpp"

namespace spherebraid {

/// f_{t,omega}: chart-0 points rotate by angle 2 pi t omega(|zeta|); the
/// poles 0 and infinity are fixed.  Evolution is by closed form.
struct RotationalFlow {
  RadialProfile profile;
};

/// Time-dependent Hamiltonian given by scalar keyframes on a lat-long grid
/// in canonical coordinates (phi, h): phi in [0, 2 pi) periodic, h in
/// [-1, 1] the height.  The area form is d phi ^ d h, so
/// phi' = dH/dh, h' = -dH/dphi, and the field is divergence free by
/// construction.  Values and centered-difference gradients are bilinearly
/// interpolated; keyframes are linear in time over [0, duration].
struct HamiltonianFlow {
  int n_phi = 0;
  int n_h = 0;
  std::vector<Eigen::MatrixXd> keyframes;  // each n_phi x n_h
};

struct FlowSpec;

/// Sequential composition: parts run one after another in their own
/// durations (total duration is the sum).
struct ConcatFlow {
  std::vector<std::shared_ptr<const FlowSpec>> parts;
};

/// R . flow . R^{-1} for a sphere rotation R.
struct ConjugatedFlow {
  Mobius rotation;
  std::shared_ptr<const FlowSpec> inner;
};

struct FlowSpec {
  std::variant<RotationalFlow, HamiltonianFlow, ConcatFlow, ConjugatedFlow> kind;
  double duration = 1.0;

  static FlowSpec rotational(RadialProfile profile, double duration = 1.0) {
    return FlowSpec{RotationalFlow{std::move(profile)}, duration};
  }
  static FlowSpec identity(double duration = 1.0) {
    return rotational(RadialProfile::constant(0.0), duration);
  }
  static FlowSpec hamiltonian(HamiltonianFlow h, double duration = 1.0) {
    return FlowSpec{std::move(h), duration};
  }
  static FlowSpec concat(std::vector<FlowSpec> parts);
  static FlowSpec conjugated(const Mobius& rotation, FlowSpec inner);
};

/// Endpoint of the trajectory of p from flow time t0 to t1 (fixed-step RK4
/// with chart hand-off for Hamiltonian flows, closed form otherwise).
ProjPoint evolve_point(const FlowSpec& flow, const ProjPoint& p, double t0, double t1, double dt);

/// Trajectory sampled at t0, t0+dt, ..., t1 (last step clipped).
std::vector<ProjPoint> evolve(const FlowSpec& flow, const ProjPoint& p, double t0, double t1,
                              double dt);

/// Generating vector field at flow time t, in the chart where p is best
/// conditioned.
TangentVector velocity(const FlowSpec& flow, const ProjPoint& p, double t);

struct ScalarEstimate {
  double value = 0.0;
  double stderr_ = 0.0;
};

/// Monte Carlo / time-quadrature estimate of the L^p length
///   l_p = int_0^T ( int |X_t|^p dmu )^{1/p} dt
/// with respect to the unit-curvature round metric and the mass-1 measure.
/// Deterministic given the seed.
ScalarEstimate lp_length(const FlowSpec& flow, double p, long t_steps, long mc_samples,
                         uint64_t seed);

/// |J - 1| where J is the (phi, h)-Jacobian determinant of the time-T flow
/// map at x, estimated by central differences at scale delta.  Exactly 0 for
/// an area-preserving map, so this measures integrator area distortion.
double area_distortion(const FlowSpec& flow, const ProjPoint& x, double delta, double dt);

}  // namespace spherebraid

#pragma once

#include <memory>
#include <vector>

#include "spherebraid/configuration.hpp"
#include "spherebraid/flow.hpp"
#include "spherebraid/short_paths.hpp"

namespace spherebraid {

/// The based loop lambda(x, flow) in X_n: short path q -> x on [0, 1/3],
/// the flow trajectory of x on [1/3, 2/3], and the reversed short path
/// q -> y = flow(x) on [2/3, 1].  Carries both a sample record and an
/// on-demand evaluator (closed form for the path legs and rotational flows,
/// re-integration from the nearest stored sample otherwise).
class Loop {
 public:
  Loop(std::shared_ptr<const FlowSpec> flow, Configuration basepoint, Configuration x,
       PathSystem system, double dt);

  const Configuration& basepoint() const { return q_; }
  const Configuration& start() const { return x_; }
  const Configuration& end() const { return y_; }
  PathSystem system() const { return system_; }
  const FlowSpec& flow() const { return *flow_; }
  double dt() const { return dt_; }
  int n() const { return q_.n(); }
  bool closed() const { return true; }

  /// Sample record: times in [0,1] and the configurations there; first and
  /// last equal the basepoint.
  const std::vector<double>& times() const { return times_; }
  const std::vector<Configuration>& samples() const { return samples_; }

  Configuration eval(double t) const;

 private:
  std::shared_ptr<const FlowSpec> flow_;
  Configuration q_, x_, y_;
  PathSystem system_;
  double dt_;
  std::vector<double> times_;
  std::vector<Configuration> samples_;
  std::vector<Configuration> flow_leg_;  // trajectory samples at dt spacing
};

/// Traces lambda(x, flow) based at q.  Throws NegligibleSetHit when either
/// short path is degenerate and DiagonalCrossing when a trajectory sample
/// violates the minimum separation.
Loop trace_loop(std::shared_ptr<const FlowSpec> flow, const Configuration& x,
                const Configuration& q, PathSystem system, double dt = 0.0);

}  // namespace spherebraid

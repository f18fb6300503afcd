#include "spherebraid/loop.hpp"

#include <cmath>

#include "spherebraid/errors.hpp"

namespace spherebraid {

namespace {
constexpr int kLegSamples = 48;
}

Loop::Loop(std::shared_ptr<const FlowSpec> flow, Configuration basepoint, Configuration x,
           PathSystem system, double dt)
    : flow_(std::move(flow)), q_(std::move(basepoint)), x_(std::move(x)), system_(system), dt_(dt) {
  double T = flow_->duration;
  if (dt_ <= 0.0) dt_ = conv::kDtFraction * T;
  check_short_path(system_, q_, x_);

  long steps = std::max(1L, static_cast<long>(std::llround(std::ceil(T / dt_ - 1e-12))));
  flow_leg_.reserve(steps + 1);
  flow_leg_.push_back(x_);
  Configuration cur = x_;
  for (long k = 0; k < steps; ++k) {
    double a = T * k / steps, b = T * (k + 1) / steps;
    Configuration next;
    next.points.reserve(cur.n());
    for (const auto& p : cur.points) next.points.push_back(evolve_point(*flow_, p, a, b, b - a));
    if (next.min_sep() < conv::kLoopMinSep) {
      throw DiagonalCrossing("trajectory tuple violated the minimum separation");
    }
    flow_leg_.push_back(next);
    cur = next;
  }
  y_ = flow_leg_.back();
  check_short_path(system_, q_, y_);

  times_.reserve(2 * kLegSamples + steps + 1);
  samples_.reserve(2 * kLegSamples + steps + 1);
  for (int k = 0; k < kLegSamples; ++k) {
    double s = double(k) / kLegSamples;
    times_.push_back(s / 3.0);
    samples_.push_back(short_path_eval(system_, q_, x_, s));
  }
  for (long k = 0; k <= steps; ++k) {
    times_.push_back(1.0 / 3.0 + double(k) / steps / 3.0);
    samples_.push_back(flow_leg_[k]);
  }
  for (int k = 1; k <= kLegSamples; ++k) {
    double s = double(k) / kLegSamples;
    times_.push_back(2.0 / 3.0 + s / 3.0);
    samples_.push_back(short_path_eval(system_, q_, y_, 1.0 - s));
  }
}

Configuration Loop::eval(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  if (t <= 1.0 / 3.0) return short_path_eval(system_, q_, x_, 3.0 * t);
  if (t >= 2.0 / 3.0) return short_path_eval(system_, q_, y_, 3.0 * (1.0 - t));
  double T = flow_->duration;
  double s = (3.0 * t - 1.0) * T;
  long steps = static_cast<long>(flow_leg_.size()) - 1;
  long k = std::min(steps - 1, static_cast<long>(std::floor(s / T * steps)));
  double a = T * k / steps;
  if (s <= a + 1e-15) return flow_leg_[k];
  Configuration out;
  out.points.reserve(q_.n());
  for (const auto& p : flow_leg_[k].points) {
    out.points.push_back(evolve_point(*flow_, p, a, s, s - a));
  }
  return out;
}

Loop trace_loop(std::shared_ptr<const FlowSpec> flow, const Configuration& x,
                const Configuration& q, PathSystem system, double dt) {
  return Loop(std::move(flow), q, x, system, dt);
}

}  // namespace spherebraid

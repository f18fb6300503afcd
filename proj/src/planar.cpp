#include "spherebraid/planar.hpp"

#include <cmath>

#include "spherebraid/cross_ratio.hpp"
#include "spherebraid/errors.hpp"

namespace spherebraid {

namespace {

double min_pair_sep(const std::vector<Cx>& u) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < u.size(); ++i) {
    for (size_t j = i + 1; j < u.size(); ++j) {
      best = std::min(best, std::abs(u[i] - u[j]));
    }
  }
  return best;
}

// A step is acceptable when, for every pair, the combined move is a small
// fraction of the pair separation at both ends.
bool step_ok(const std::vector<Cx>& a, const std::vector<Cx>& b) {
  size_t m = a.size();
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      double sep = std::min(std::abs(a[i] - a[j]), std::abs(b[i] - b[j]));
      double move = std::abs(b[i] - a[i]) + std::abs(b[j] - a[j]);
      if (move > conv::kPlanarStepFrac * sep) return false;
    }
  }
  return true;
}

void refine(const std::function<std::vector<Cx>(double)>& eval, std::vector<double>& times,
            std::vector<std::vector<Cx>>& grid) {
  constexpr double kMinDt = 1e-11;
  std::vector<double> out_t;
  std::vector<std::vector<Cx>> out_u;
  out_t.push_back(times.front());
  out_u.push_back(grid.front());
  for (size_t k = 0; k + 1 < times.size(); ++k) {
    // stack of (t1, u1) targets; invariant: out back is the current left end
    std::vector<std::pair<double, std::vector<Cx>>> stack;
    stack.emplace_back(times[k + 1], grid[k + 1]);
    while (!stack.empty()) {
      auto [t1, u1] = stack.back();
      const auto& u0 = out_u.back();
      double t0 = out_t.back();
      if (min_pair_sep(u1) < conv::kEpsPlanar || min_pair_sep(u0) < conv::kEpsPlanar) {
        throw NumericalDiagonal("planar strands within kEpsPlanar");
      }
      if (t1 - t0 <= kMinDt || step_ok(u0, u1)) {
        out_t.push_back(t1);
        out_u.push_back(u1);
        stack.pop_back();
      } else {
        double tm = 0.5 * (t0 + t1);
        stack.emplace_back(tm, eval(tm));
      }
    }
  }
  times = std::move(out_t);
  grid = std::move(out_u);
}

}  // namespace

PlanarLoop PlanarLoop::reversed() const {
  PlanarLoop out;
  out.moving = moving;
  auto fwd = eval;
  out.eval = [fwd](double t) { return fwd(1.0 - t); };
  out.times.reserve(times.size());
  out.grid.reserve(grid.size());
  for (size_t k = times.size(); k-- > 0;) {
    out.times.push_back(1.0 - times[k]);
    out.grid.push_back(grid[k]);
  }
  return out;
}

PlanarLoop PlanarLoop::from_eval(std::function<std::vector<Cx>(double)> eval, int base_samples) {
  PlanarLoop out;
  out.eval = std::move(eval);
  out.times.reserve(base_samples + 1);
  out.grid.reserve(base_samples + 1);
  for (int k = 0; k <= base_samples; ++k) {
    double t = double(k) / base_samples;
    out.times.push_back(t);
    out.grid.push_back(out.eval(t));
  }
  out.moving = out.strands();
  refine(out.eval, out.times, out.grid);
  return out;
}

PlanarLoop planarize(const Loop& loop) {
  int n = loop.n();
  if (n < 4) throw DomainError("planarize needs n >= 4 points");
  PlanarLoop out;
  out.moving = n - 3;
  auto base = std::make_shared<Loop>(loop);
  out.eval = [base](double t) {
    Configuration c = base->eval(t);
    std::vector<Cx> u = moduli_projection(c.points);
    u.push_back(Cx{0.0, 0.0});
    u.push_back(Cx{1.0, 0.0});
    return u;
  };
  const auto& lt = loop.times();
  out.times.reserve(lt.size());
  out.grid.reserve(lt.size());
  for (size_t k = 0; k < lt.size(); ++k) {
    std::vector<Cx> u = moduli_projection(loop.samples()[k].points);
    u.push_back(Cx{0.0, 0.0});
    u.push_back(Cx{1.0, 0.0});
    if (k > 0 && lt[k] <= out.times.back()) continue;
    out.times.push_back(lt[k]);
    out.grid.push_back(std::move(u));
  }
  refine(out.eval, out.times, out.grid);
  return out;
}

}  // namespace spherebraid

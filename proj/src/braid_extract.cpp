#include "spherebraid/braid_extract.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spherebraid/errors.hpp"

namespace spherebraid {

namespace {

struct Frame {
  Cx dir;  // e^{-i theta}
  double p(Cx u) const { return (dir * u).imag(); }
  double q(Cx u) const { return (dir * u).real(); }
};

// Bisect the sign change of p_i - p_j inside [t0, t1].
double bisect_crossing(const PlanarLoop& loop, const Frame& f, int i, int j, double t0, double d0,
                       double t1) {
  for (int it = 0; it < 80 && t1 - t0 > conv::kCrossingTimeTol; ++it) {
    double tm = 0.5 * (t0 + t1);
    auto u = loop.eval(tm);
    double dm = f.p(u[i]) - f.p(u[j]);
    if ((dm > 0.0) == (d0 > 0.0)) {
      t0 = tm;
      d0 = dm;
    } else {
      t1 = tm;
    }
  }
  return 0.5 * (t0 + t1);
}

}  // namespace

std::vector<CrossingEvent> scan_crossings(const PlanarLoop& loop, double theta) {
  Frame f{std::polar(1.0, -theta)};
  int m = loop.strands();
  const auto& T = loop.times;
  const auto& G = loop.grid;
  size_t nt = T.size();

  // cached projections
  std::vector<std::vector<double>> P(nt, std::vector<double>(m));
  for (size_t k = 0; k < nt; ++k) {
    for (int s = 0; s < m; ++s) P[k][s] = f.p(G[k][s]);
  }

  struct RawEvent {
    double t;
    int i, j;  // i over j
  };
  std::vector<RawEvent> raw;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (size_t k = 0; k + 1 < nt; ++k) {
        double d0 = P[k][i] - P[k][j];
        double d1 = P[k + 1][i] - P[k + 1][j];
        if (d0 == 0.0) throw NonGenericDirection("projection tie at a grid point");
        if ((d0 > 0.0) == (d1 > 0.0)) continue;
        double tc = bisect_crossing(loop, f, i, j, T[k], d0, T[k + 1]);
        auto u = loop.eval(tc);
        // transversality: relative crossing angle against the strand speeds
        double h = std::max(1e-7, 4.0 * conv::kCrossingTimeTol);
        auto ua = loop.eval(std::max(0.0, tc - h));
        auto ub = loop.eval(std::min(1.0, tc + h));
        Cx vi = (ub[i] - ua[i]);
        Cx vj = (ub[j] - ua[j]);
        double dp = f.p(ub[i]) - f.p(ub[j]) - (f.p(ua[i]) - f.p(ua[j]));
        double speed = std::abs(vi) + std::abs(vj);
        if (speed == 0.0 || std::abs(dp) < conv::kMinCrossingAngle * speed) {
          throw NonGenericDirection("tangential crossing");
        }
        bool i_over = f.q(u[i]) > f.q(u[j]);
        raw.push_back({tc, i_over ? i : j, i_over ? j : i});
      }
    }
  }
  std::sort(raw.begin(), raw.end(), [](const RawEvent& a, const RawEvent& b) { return a.t < b.t; });
  for (size_t k = 0; k + 1 < raw.size(); ++k) {
    if (raw[k + 1].t - raw[k].t < conv::kMinCrossingGap) {
      throw NonGenericDirection("two crossings within kMinCrossingGap");
    }
  }

  // assemble positions; slots ordered by increasing p
  std::vector<int> slot_of(m);
  {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return P[0][a] < P[0][b]; });
    for (int s = 0; s < m; ++s) slot_of[order[s]] = s;
  }
  std::vector<CrossingEvent> events;
  events.reserve(raw.size());
  for (const auto& r : raw) {
    int sa = slot_of[r.i], sb = slot_of[r.j];
    if (std::abs(sa - sb) != 1) {
      throw NonGenericDirection("non-adjacent swap; crossing detection incomplete");
    }
    CrossingEvent e;
    e.t = r.t;
    e.over = r.i;
    e.under = r.j;
    e.position = std::min(sa, sb) + 1;
    e.sign = (sa < sb) ? +1 : -1;
    events.push_back(e);
    std::swap(slot_of[r.i], slot_of[r.j]);
  }
  return events;
}

BraidWord extract_braid(const PlanarLoop& loop, double theta) {
  BraidWord w{loop.strands(), {}};
  auto events = scan_crossings(loop, theta);
  w.letters.reserve(events.size());
  for (const auto& e : events) w.letters.push_back(e.sign * e.position);
  return w;
}

Eigen::MatrixXi crossing_counts(const PlanarLoop& loop, double theta) {
  int m = loop.strands();
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(m, m);
  for (const auto& e : scan_crossings(loop, theta)) counts(e.over, e.under) += 1;
  return counts;
}

double abs_winding_integral(const PlanarLoop& loop, int i, int j) {
  const auto& T = loop.times;
  const auto& G = loop.grid;
  double total = 0.0;
  constexpr double kMaxTurn = 0.3;  // radians per accepted step
  for (size_t k = 0; k + 1 < T.size(); ++k) {
    struct Seg {
      double t0, t1;
      Cx d0, d1;
    };
    std::vector<Seg> stack{{T[k], T[k + 1], G[k][i] - G[k][j], G[k + 1][i] - G[k + 1][j]}};
    while (!stack.empty()) {
      Seg s = stack.back();
      stack.pop_back();
      double turn = std::abs(std::arg(s.d1 / s.d0));
      if (turn <= kMaxTurn || s.t1 - s.t0 < 1e-12) {
        total += turn;
      } else {
        double tm = 0.5 * (s.t0 + s.t1);
        auto u = loop.eval(tm);
        Cx dm = u[i] - u[j];
        stack.push_back({s.t0, tm, s.d0, dm});
        stack.push_back({tm, s.t1, dm, s.d1});
      }
    }
  }
  return total / (2.0 * kPi);
}

double choose_direction(const PlanarLoop& loop, double C, Rng& rng) {
  int m = loop.strands();
  if (C <= (m - 1) * (m - 2) / 2.0) {
    throw DomainError("choose_direction needs C > (m-1)(m-2)/2");
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      w(i, j) = w(j, i) = abs_winding_integral(loop, i, j);
    }
  }
  for (int tries = 0; tries < conv::kDirectionBudget; ++tries) {
    double theta = rng.uniform(0.0, 2.0 * kPi);
    try {
      Eigen::MatrixXi counts = crossing_counts(loop, theta);
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        for (int j = 0; j < m && ok; ++j) {
          if (i != j && counts(i, j) > C * w(i, j) + 1e-9) ok = false;
        }
      }
      if (ok) return theta;
    } catch (const NonGenericDirection&) {
      continue;
    }
  }
  throw DirectionSearchExhausted("no direction satisfied the Markov bound");
}

int word_norm_bound(const Loop& loop, double C, Rng& rng) {
  PlanarLoop planar = planarize(loop);
  double theta = choose_direction(planar, C, rng);
  return extract_braid(planar, theta).free_reduced().length();
}

std::string crossing_csv(const std::vector<CrossingEvent>& events) {
  std::ostringstream os;
  os << "t,over,under,position,sign\n";
  for (const auto& e : events) {
    os << e.t << "," << e.over << "," << e.under << "," << e.position << "," << e.sign << "\n";
  }
  return os.str();
}

}  // namespace spherebraid

#include "spherebraid/flow.hpp"

#include <cmath>

#include "spherebraid/errors.hpp"

namespace spherebraid {

FlowSpec FlowSpec::concat(std::vector<FlowSpec> parts) {
  ConcatFlow c;
  double total = 0.0;
  for (auto& p : parts) {
    total += p.duration;
    c.parts.push_back(std::make_shared<const FlowSpec>(std::move(p)));
  }
  return FlowSpec{std::move(c), total};
}

FlowSpec FlowSpec::conjugated(const Mobius& rotation, FlowSpec inner) {
  double total = inner.duration;
  return FlowSpec{ConjugatedFlow{rotation, std::make_shared<const FlowSpec>(std::move(inner))},
                  total};
}

namespace {

// --- Hamiltonian grid sampling -------------------------------------------

struct GridSample {
  double h_phi = 0.0;  // dH/dphi
  double h_h = 0.0;    // dH/dh
};

double wrap_phi(double phi) {
  double t = std::fmod(phi, 2.0 * kPi);
  return t < 0.0 ? t + 2.0 * kPi : t;
}

// Bilinear interpolation of the centered-difference gradient of one frame.
GridSample frame_gradient(const Eigen::MatrixXd& f, int n_phi, int n_h, double phi, double h) {
  double dphi = 2.0 * kPi / n_phi;
  double dh = 2.0 / (n_h - 1);
  double fi = wrap_phi(phi) / dphi;
  double fj = (std::clamp(h, -1.0, 1.0) + 1.0) / dh;
  int i0 = static_cast<int>(std::floor(fi)) % n_phi;
  int j0 = std::min(static_cast<int>(std::floor(fj)), n_h - 2);
  double ti = fi - std::floor(fi);
  double tj = fj - j0;
  auto node = [&](int i, int j) -> GridSample {
    int im = (i + n_phi - 1) % n_phi, ip = (i + 1) % n_phi;
    GridSample g;
    g.h_phi = (f(ip, j) - f(im, j)) / (2.0 * dphi);
    if (j == 0) {
      g.h_h = (f(i, 1) - f(i, 0)) / dh;
    } else if (j == n_h - 1) {
      g.h_h = (f(i, j) - f(i, j - 1)) / dh;
    } else {
      g.h_h = (f(i, j + 1) - f(i, j - 1)) / (2.0 * dh);
    }
    return g;
  };
  GridSample g00 = node(i0, j0), g10 = node((i0 + 1) % n_phi, j0);
  GridSample g01 = node(i0, j0 + 1), g11 = node((i0 + 1) % n_phi, j0 + 1);
  GridSample out;
  out.h_phi = (1 - ti) * (1 - tj) * g00.h_phi + ti * (1 - tj) * g10.h_phi +
              (1 - ti) * tj * g01.h_phi + ti * tj * g11.h_phi;
  out.h_h = (1 - ti) * (1 - tj) * g00.h_h + ti * (1 - tj) * g10.h_h + (1 - ti) * tj * g01.h_h +
            ti * tj * g11.h_h;
  return out;
}

GridSample hamiltonian_gradient(const HamiltonianFlow& ham, double phi, double h, double t01) {
  size_t k = ham.keyframes.size();
  if (k == 1) return frame_gradient(ham.keyframes[0], ham.n_phi, ham.n_h, phi, h);
  double s = std::clamp(t01, 0.0, 1.0) * (k - 1);
  size_t lo = std::min(static_cast<size_t>(s), k - 2);
  double w = s - lo;
  GridSample a = frame_gradient(ham.keyframes[lo], ham.n_phi, ham.n_h, phi, h);
  GridSample b = frame_gradient(ham.keyframes[lo + 1], ham.n_phi, ham.n_h, phi, h);
  return {a.h_phi * (1 - w) + b.h_phi * w, a.h_h * (1 - w) + b.h_h * w};
}

// Chart state for integration: coordinate zeta in chart 0 or chart inf.
struct ChartState {
  Cx zeta;
  bool inf_chart;
};

double height_of(const ChartState& s) {
  double r2 = std::norm(s.zeta);
  double h = (r2 - 1.0) / (r2 + 1.0);
  return s.inf_chart ? -h : h;
}

// Field in the current chart.  In chart 0, zeta = R(h) e^{i phi} with
// h = (|zeta|^2-1)/(|zeta|^2+1), giving
//   zeta' = i zeta H_h - zeta H_phi / (1 - h^2);
// in the infinity chart (eta = 1/zeta) the signs of both terms flip.
Cx chart_velocity(const HamiltonianFlow& ham, const ChartState& s, double t01) {
  double h = height_of(s);
  double phi = std::arg(s.inf_chart ? std::conj(s.zeta) : s.zeta);
  GridSample g = hamiltonian_gradient(ham, phi, h, t01);
  double one_m_h2 = std::max(1.0 - h * h, 1e-12);
  Cx v = Cx(0.0, 1.0) * s.zeta * g.h_h - s.zeta * (g.h_phi / one_m_h2);
  return s.inf_chart ? -v : v;
}

void normalize_chart(ChartState& s) {
  if (std::abs(s.zeta) > 1.0) {
    s.zeta = 1.0 / s.zeta;
    s.inf_chart = !s.inf_chart;
  }
}

ChartState chart_state(const ProjPoint& p) {
  if (std::norm(p.z) <= std::norm(p.w)) return {p.z / p.w, false};
  return {p.w / p.z, true};
}

ProjPoint to_point(const ChartState& s) {
  return s.inf_chart ? ProjPoint::from_chart_inf(s.zeta) : ProjPoint::from_chart0(s.zeta);
}

// One RK4 step of real-time length dt; T converts real time to the [0,1]
// keyframe parameter.
void rk4_step(const HamiltonianFlow& ham, ChartState& s, double t, double dt, double T) {
  Cx k1 = chart_velocity(ham, s, t / T);
  Cx k2 = chart_velocity(ham, {s.zeta + 0.5 * dt * k1, s.inf_chart}, (t + 0.5 * dt) / T);
  Cx k3 = chart_velocity(ham, {s.zeta + 0.5 * dt * k2, s.inf_chart}, (t + 0.5 * dt) / T);
  Cx k4 = chart_velocity(ham, {s.zeta + dt * k3, s.inf_chart}, (t + dt) / T);
  Cx move = dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  if (!std::isfinite(move.real()) || !std::isfinite(move.imag()) ||
      std::abs(move) > conv::kMaxStepMove * (1.0 + std::abs(s.zeta))) {
    throw IntegrationBlowup("Hamiltonian step exceeded the move tolerance");
  }
  s.zeta += move;
  normalize_chart(s);
}

ProjPoint rotate_point(const RadialProfile& profile, const ProjPoint& p, double dt) {
  if (!p.has_chart0()) return p;  // infinity is fixed
  if (!p.has_chart_inf()) return p;
  double r = std::abs(p.chart0());
  double ang = 2.0 * kPi * dt * profile(r);
  Cx rot{std::cos(ang), std::sin(ang)};
  // rotate homogeneous z to stay conditioned in either chart
  return ProjPoint::from_homogeneous(p.z * rot, p.w);
}

}  // namespace

ProjPoint evolve_point(const FlowSpec& flow, const ProjPoint& p, double t0, double t1, double dt) {
  if (dt <= 0.0) throw DomainError("evolve needs dt > 0");
  if (const auto* rot = std::get_if<RotationalFlow>(&flow.kind)) {
    return rotate_point(rot->profile, p, t1 - t0);
  }
  if (const auto* conj = std::get_if<ConjugatedFlow>(&flow.kind)) {
    ProjPoint q = conj->rotation.inverse().apply(p);
    q = evolve_point(*conj->inner, q, t0, t1, dt);
    return conj->rotation.apply(q);
  }
  if (const auto* cat = std::get_if<ConcatFlow>(&flow.kind)) {
    ProjPoint q = p;
    double off = 0.0;
    for (const auto& part : cat->parts) {
      double a = std::clamp(t0 - off, 0.0, part->duration);
      double b = std::clamp(t1 - off, 0.0, part->duration);
      if (b > a) q = evolve_point(*part, q, a, b, dt);
      off += part->duration;
    }
    return q;
  }
  const auto& ham = std::get<HamiltonianFlow>(flow.kind);
  ChartState s = chart_state(p);
  long steps = std::max(1L, static_cast<long>(std::ceil((t1 - t0) / dt - 1e-12)));
  double step = (t1 - t0) / steps;
  for (long i = 0; i < steps; ++i) {
    rk4_step(ham, s, t0 + i * step, step, flow.duration);
  }
  return to_point(s);
}

std::vector<ProjPoint> evolve(const FlowSpec& flow, const ProjPoint& p, double t0, double t1,
                              double dt) {
  std::vector<ProjPoint> out;
  long steps = std::max(1L, static_cast<long>(std::ceil((t1 - t0) / dt - 1e-12)));
  out.reserve(steps + 1);
  out.push_back(p);
  ProjPoint cur = p;
  for (long i = 0; i < steps; ++i) {
    double a = t0 + (t1 - t0) * i / steps;
    double b = t0 + (t1 - t0) * (i + 1) / steps;
    cur = evolve_point(flow, cur, a, b, b - a);
    out.push_back(cur);
  }
  return out;
}

TangentVector velocity(const FlowSpec& flow, const ProjPoint& p, double t) {
  if (const auto* rot = std::get_if<RotationalFlow>(&flow.kind)) {
    TangentVector v;
    v.base = p;
    if (!p.has_chart0() || !p.has_chart_inf()) {
      v.chart = 0;
      v.v = 0.0;
      if (!p.has_chart0()) v.chart = 1;
      return v;
    }
    if (std::norm(p.z) <= std::norm(p.w)) {
      Cx zeta = p.chart0();
      v.chart = 0;
      v.v = Cx(0.0, 2.0 * kPi * rot->profile(std::abs(zeta))) * zeta;
    } else {
      Cx eta = p.chart_inf();
      v.chart = 1;
      v.v = Cx(0.0, -2.0 * kPi * rot->profile(1.0 / std::abs(eta))) * eta;
    }
    return v;
  }
  if (const auto* conj = std::get_if<ConjugatedFlow>(&flow.kind)) {
    ProjPoint q = conj->rotation.inverse().apply(p);
    TangentVector inner = velocity(*conj->inner, q, t);
    TangentVector out;
    out.base = p;
    if (std::abs(inner.v) == 0.0) {
      out.chart = std::norm(p.z) <= std::norm(p.w) ? 0 : 1;
      out.v = 0.0;
      return out;
    }
    // push forward through the rotation in chart 0, then convert to the
    // better chart of the target point
    Cx zq = inner.chart == 0 ? q.chart0() : 1.0 / q.chart_inf();
    Cx vq = inner.chart == 0 ? inner.v : -inner.v / (q.chart_inf() * q.chart_inf());
    out.chart = 0;
    out.v = conj->rotation.deriv_chart0(zq) * vq;
    if (!p.has_chart0() || std::norm(p.z) > std::norm(p.w)) {
      Cx target = (conj->rotation.a * zq + conj->rotation.b) /
                  (conj->rotation.c * zq + conj->rotation.d);
      out.chart = 1;
      out.v = -out.v / (target * target);
    }
    return out;
  }
  if (const auto* cat = std::get_if<ConcatFlow>(&flow.kind)) {
    double off = 0.0;
    for (const auto& part : cat->parts) {
      if (t <= off + part->duration || &part == &cat->parts.back()) {
        return velocity(*part, p, std::clamp(t - off, 0.0, part->duration));
      }
      off += part->duration;
    }
    return TangentVector{p, 0.0, 0};
  }
  const auto& ham = std::get<HamiltonianFlow>(flow.kind);
  ChartState s = chart_state(p);
  TangentVector v;
  v.base = p;
  v.chart = s.inf_chart ? 1 : 0;
  v.v = chart_velocity(ham, s, t / flow.duration);
  return v;
}

ScalarEstimate lp_length(const FlowSpec& flow, double p, long t_steps, long mc_samples,
                         uint64_t seed) {
  if (p < 1.0) throw DomainError("lp_length needs p >= 1");
  double T = flow.duration;
  double dt = T / t_steps;
  double total = 0.0, var = 0.0;
  for (long k = 0; k < t_steps; ++k) {
    double t = (k + 0.5) * dt;
    double sum = 0.0, sum2 = 0.0;
    for (long i = 0; i < mc_samples; ++i) {
      Rng rng(seed, static_cast<uint64_t>(k), static_cast<uint64_t>(i) + 1);
      ProjPoint x = random_point(rng);
      double s = round_speed(velocity(flow, x, t));
      double sp = std::pow(s, p);
      sum += sp;
      sum2 += sp * sp;
    }
    double mean = sum / mc_samples;
    double se2 = std::max(0.0, sum2 / mc_samples - mean * mean) / mc_samples;
    double term = std::pow(mean, 1.0 / p);
    total += term * dt;
    if (mean > 0.0) {
      double d = term / (p * mean);  // d(mean^{1/p})/d(mean)
      var += d * d * se2 * dt * dt;
    }
  }
  return {total, std::sqrt(var)};
}

double area_distortion(const FlowSpec& flow, const ProjPoint& x, double delta, double dt) {
  // displace in canonical (phi, h) coordinates, flow, and measure the
  // parallelogram area of the images in (phi, h)
  Eigen::Vector3d v = to_sphere3(x);
  double h = std::clamp(v.z(), -0.999, 0.999);
  double phi = std::atan2(v.y(), v.x());
  auto at = [&](double dphi, double dh) {
    double hh = std::clamp(h + dh, -0.9999, 0.9999);
    double pp = phi + dphi;
    double rr = std::sqrt(1.0 - hh * hh);
    ProjPoint p0 = from_sphere3({rr * std::cos(pp), rr * std::sin(pp), hh});
    ProjPoint p1 = evolve_point(flow, p0, 0.0, flow.duration, dt);
    Eigen::Vector3d w = to_sphere3(p1);
    return std::pair<double, double>(std::atan2(w.y(), w.x()), w.z());
  };
  auto [pp_phi, ph_phi] = at(delta, 0.0);
  auto [pm_phi, mh_phi] = at(-delta, 0.0);
  auto [pp_h, ph_h] = at(0.0, delta);
  auto [pm_h, mh_h] = at(0.0, -delta);
  auto dphi = [](double a, double b) {
    double d = a - b;
    while (d > kPi) d -= 2.0 * kPi;
    while (d < -kPi) d += 2.0 * kPi;
    return d;
  };
  double a11 = dphi(pp_phi, pm_phi) / (2.0 * delta);
  double a21 = (ph_phi - mh_phi) / (2.0 * delta);
  double a12 = dphi(pp_h, pm_h) / (2.0 * delta);
  double a22 = (ph_h - mh_h) / (2.0 * delta);
  return std::abs(a11 * a22 - a12 * a21 - 1.0);
}

}  // namespace spherebraid

#include "wring/pulse.hpp"

#include <algorithm>
#include <cmath>

namespace wring {

Waveform::Waveform(std::vector<std::pair<double, double>> breakpoints)
    : pts_(std::move(breakpoints)) {
  if (pts_.empty()) {
    throw ValidationError("waveform needs at least one breakpoint");
  }
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    if (!(pts_[i].first > pts_[i - 1].first)) {
      throw ValidationError("waveform breakpoint times must strictly increase");
    }
  }
}

Waveform Waveform::constant(double t0, double t1, double value) {
  if (t1 <= t0) return Waveform({{t0, value}});
  return Waveform({{t0, value}, {t1, value}});
}

double Waveform::value(double t) const {
  if (t <= pts_.front().first) return pts_.front().second;
  if (t >= pts_.back().first) return pts_.back().second;
  auto it = std::upper_bound(
      pts_.begin(), pts_.end(), t,
      [](double tt, const std::pair<double, double>& p) { return tt < p.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double f = (t - lo.first) / (hi.first - lo.first);
  return lo.second + f * (hi.second - lo.second);
}

double Waveform::min_value() const {
  double m = pts_.front().second;
  for (const auto& p : pts_) m = std::min(m, p.second);
  return m;
}

double Waveform::max_value() const {
  double m = pts_.front().second;
  for (const auto& p : pts_) m = std::max(m, p.second);
  return m;
}

double Waveform::max_slope() const {
  double m = 0.0;
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    const double dv = pts_[i].second - pts_[i - 1].second;
    const double dt = pts_[i].first - pts_[i - 1].first;
    m = std::max(m, std::abs(dv / dt));
  }
  return m;
}

double Waveform::integral() const {
  double s = 0.0;
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    s += 0.5 * (pts_[i].second + pts_[i - 1].second) *
         (pts_[i].first - pts_[i - 1].first);
  }
  return s;
}

void PulseSchedule::validate() const {
  if (!(t_final > 0.0)) {
    throw ValidationError("schedule t_final must be > 0");
  }
  if (omega.min_value() < 0.0) {
    throw ValidationError("omega waveform must stay >= 0");
  }
  for (const Waveform* w : {&omega, &delta, &phi}) {
    if (w->start_time() < -1e-12 || w->end_time() > t_final + 1e-12) {
      throw ValidationError("waveform breakpoints must lie in [0, t_final]");
    }
  }
}

namespace {

// Append, merging breakpoints that coincide in time.
void push_pt(std::vector<std::pair<double, double>>& v, double t, double x) {
  if (!v.empty() && std::abs(v.back().first - t) < 1e-15) return;
  v.push_back({t, x});
}

}  // namespace

PulseSchedule build_prep_schedule(const PrepParams& p) {
  if (p.tau_omega_ramp < 0.0) {
    throw ValidationError("prep schedule: tau_omega_ramp must be >= 0");
  }
  if (!(2.0 * p.tau_omega_ramp < p.t_final)) {
    throw ValidationError(
        "prep schedule: ramps do not fit, need 2*tau_omega_ramp < t_final");
  }
  const double tau = p.tau_omega_ramp;
  double r0 = p.delta_ramp_start >= 0.0 ? p.delta_ramp_start : tau;
  double r1 = p.delta_ramp_end >= 0.0 ? p.delta_ramp_end : p.t_final - tau;
  if (!(r0 < r1) || r1 > p.t_final) {
    throw ValidationError("prep schedule: invalid detuning ramp window");
  }

  std::vector<std::pair<double, double>> om;
  push_pt(om, 0.0, 0.0);
  push_pt(om, tau, p.omega);
  push_pt(om, p.t_final - tau, p.omega);
  push_pt(om, p.t_final, 0.0);

  std::vector<std::pair<double, double>> de;
  push_pt(de, 0.0, p.delta_initial);
  push_pt(de, r0, p.delta_initial);
  push_pt(de, r1, p.delta_final);
  push_pt(de, p.t_final, p.delta_final);

  PulseSchedule s;
  s.omega = Waveform(std::move(om));
  s.delta = Waveform(std::move(de));
  s.phi = Waveform::constant(0.0, p.t_final, 0.0);
  s.t_final = p.t_final;
  s.validate();
  return s;
}

PulseSchedule build_rotation_schedule(const RotationParams& p) {
  if (p.omega_rot < 0.0) {
    throw ValidationError("rotation schedule: omega_rot must be >= 0");
  }
  if (!(p.ramp > 0.0) || p.tau_rot < 0.0) {
    throw ValidationError("rotation schedule: invalid ramp/plateau durations");
  }
  const double t_final = 2.0 * p.ramp + p.tau_rot;
  std::vector<std::pair<double, double>> om;
  push_pt(om, 0.0, 0.0);
  push_pt(om, p.ramp, p.omega_rot);
  push_pt(om, p.ramp + p.tau_rot, p.omega_rot);
  push_pt(om, t_final, 0.0);

  PulseSchedule s;
  s.omega = Waveform(std::move(om));
  s.delta = Waveform::constant(0.0, t_final, 0.0);
  s.phi = Waveform::constant(0.0, t_final, p.phase);
  s.t_final = t_final;
  s.validate();
  return s;
}

double pulse_area(const PulseSchedule& s) { return s.omega.integral(); }

}  // namespace wring

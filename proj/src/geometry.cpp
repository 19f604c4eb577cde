#include "wring/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wring/pulse.hpp"
#include "wring/rng.hpp"

namespace wring {

double RingGeometry::distance(int i, int j) const {
  const double dx = positions[i][0] - positions[j][0];
  const double dy = positions[i][1] - positions[j][1];
  return std::hypot(dx, dy);
}

RingGeometry ring_positions(int L, double a) {
  if (L < 3) {
    throw ValidationError("invalid geometry: ring needs L >= 3, got L=" +
                          std::to_string(L));
  }
  if (!(a > 0.0)) {
    throw ValidationError("invalid geometry: lattice spacing must be > 0");
  }
  RingGeometry g;
  g.L = L;
  g.a = a;
  const double radius = a / (2.0 * std::sin(M_PI / L));
  g.positions.reserve(L);
  for (int k = 0; k < L; ++k) {
    const double theta = 2.0 * M_PI * k / L;
    g.positions.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  return g;
}

RingGeometry perturb_positions(const RingGeometry& g, double sigma_x,
                               double sigma_y, std::uint64_t seed) {
  if (sigma_x < 0.0 || sigma_y < 0.0) {
    throw ValidationError("perturbation sigma must be >= 0");
  }
  RingGeometry out = g;
  Rng rng(seed);
  for (auto& p : out.positions) {
    p[0] += sigma_x > 0.0 ? rng.normal(0.0, sigma_x) : 0.0;
    p[1] += sigma_y > 0.0 ? rng.normal(0.0, sigma_y) : 0.0;
  }
  out.perturbed = true;
  out.seed = seed;
  return out;
}

Truncation truncation_from_string(const std::string& s) {
  if (s == "full") return Truncation::Full;
  if (s == "nearest") return Truncation::Nearest;
  if (s == "next-nearest") return Truncation::NextNearest;
  throw ValidationError("unknown truncation mode: " + s);
}

const char* truncation_name(Truncation t) {
  switch (t) {
    case Truncation::Full:
      return "full";
    case Truncation::Nearest:
      return "nearest";
    case Truncation::NextNearest:
      return "next-nearest";
  }
  return "unknown";
}

Eigen::MatrixXd interaction_matrix(const RingGeometry& g, double c6,
                                   Truncation truncation) {
  const int L = g.L;
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(L, L);
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      const int ring_dist = std::min(j - i, L - (j - i));
      if (truncation == Truncation::Nearest && ring_dist > 1) continue;
      if (truncation == Truncation::NextNearest && ring_dist > 2) continue;
      const double r = g.distance(i, j);
      if (r < 1e-9) {
        throw ValidationError("singular distance: atoms " + std::to_string(i) +
                              " and " + std::to_string(j) + " coincide");
      }
      const double u = c6 / std::pow(r, 6);
      U(i, j) = u;
      U(j, i) = u;
    }
  }
  return U;
}

namespace {

void check_waveform(const Waveform& w, double vmin, double vmax,
                    double slew_max, Violation::Kind range_kind,
                    Violation::Kind slew_kind, const char* name,
                    std::vector<Violation>& out) {
  if (w.min_value() < vmin || w.max_value() > vmax) {
    out.push_back({range_kind,
                   std::string(name) + " value outside [" +
                       std::to_string(vmin) + ", " + std::to_string(vmax) +
                       "] rad/us"});
  }
  if (w.max_slope() > slew_max) {
    out.push_back({slew_kind, std::string(name) + " slope exceeds " +
                                  std::to_string(slew_max) + " rad/us^2"});
  }
}

}  // namespace

std::vector<Violation> validate_hardware(const RingGeometry& g,
                                         const PulseSchedule& s,
                                         const HardwareLimits& limits) {
  std::vector<Violation> out;
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& p : g.positions) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  if (!g.positions.empty() &&
      (xmax - xmin > limits.plate_edge || ymax - ymin > limits.plate_edge)) {
    out.push_back({Violation::Kind::PlateSize,
                   "geometry extent exceeds the " +
                       std::to_string(limits.plate_edge) + " um plate"});
  }
  for (int i = 0; i < g.L; ++i) {
    for (int j = i + 1; j < g.L; ++j) {
      const double dy = std::abs(g.positions[i][1] - g.positions[j][1]);
      if (dy > 0.0 && dy < limits.min_vertical) {
        out.push_back({Violation::Kind::VerticalSpacing,
                       "atoms " + std::to_string(i) + " and " +
                           std::to_string(j) + " have vertical gap " +
                           std::to_string(dy) + " um < " +
                           std::to_string(limits.min_vertical) + " um"});
      }
    }
  }
  check_waveform(s.omega, 0.0, limits.omega_max, limits.omega_slew_max,
                 Violation::Kind::OmegaRange, Violation::Kind::OmegaSlew,
                 "omega", out);
  check_waveform(s.delta, -limits.abs_delta_max, limits.abs_delta_max,
                 limits.delta_slew_max, Violation::Kind::DeltaRange,
                 Violation::Kind::DeltaSlew, "delta", out);
  return out;
}

}  // namespace wring

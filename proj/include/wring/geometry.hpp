#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wring/common.hpp"

namespace wring {

// Atoms on (or near) a ring in the plane. Lengths in um.
struct RingGeometry {
  int L = 0;
  double a = 0.0;  // lattice spacing (nearest-neighbor chord length)
  std::vector<std::array<double, 2>> positions;
  bool perturbed = false;
  std::optional<std::uint64_t> seed;

  double distance(int i, int j) const;
};

// L atoms equally spaced on a circle of radius a / (2 sin(pi/L)), first atom
// at angle 0, counter-clockwise. L >= 3 required.
RingGeometry ring_positions(int L, double a);

// Independent Gaussian displacement of every coordinate; deterministic for a
// fixed seed. Models thermal atom motion frozen at the start of a shot.
RingGeometry perturb_positions(const RingGeometry& g, double sigma_x,
                               double sigma_y, std::uint64_t seed);

enum class Truncation { Full, Nearest, NextNearest };

Truncation truncation_from_string(const std::string& s);
const char* truncation_name(Truncation t);

// U_{lj} = c6 / r_{lj}^6 for retained pairs (by ring-index distance), zero
// otherwise; symmetric with zero diagonal. Throws on coincident atoms.
Eigen::MatrixXd interaction_matrix(const RingGeometry& g, double c6,
                                   Truncation truncation);

struct HardwareLimits {
  double plate_edge = 75.0;       // um, square field of view
  double min_vertical = 2.0;      // um, minimum nonzero |dy| between atoms
  double omega_max = 15.8;        // rad/us
  double abs_delta_max = 125.0;   // rad/us
  double omega_slew_max = 250.0;  // rad/us^2
  double delta_slew_max = 2500.0;  // rad/us^2
};

struct Violation {
  enum class Kind {
    PlateSize,
    VerticalSpacing,
    OmegaRange,
    DeltaRange,
    OmegaSlew,
    DeltaSlew,
  };
  Kind kind;
  std::string message;
};

struct PulseSchedule;

// Checks geometry against the plate and vertical-spacing limits and the
// schedule against amplitude/slew limits. Violations are returned as data;
// inputs are never mutated and nothing throws.
std::vector<Violation> validate_hardware(const RingGeometry& g,
                                         const PulseSchedule& s,
                                         const HardwareLimits& limits);

}  // namespace wring

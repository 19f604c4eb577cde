#include "wring/calibration.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace wring {

double resonance_probability(double omega, double delta_minus_offset,
                             double t_pi) {
  const double w2 = omega * omega + delta_minus_offset * delta_minus_offset;
  if (w2 == 0.0) return 0.0;
  const double s = std::sin(0.5 * std::sqrt(w2) * t_pi);
  return omega * omega / w2 * s * s;
}

CalibrationFit calibration_fit(
    const std::vector<std::pair<double, double>>& data, double t_pi) {
  if (data.size() < 5) {
    throw ValidationError("calibration fit needs at least 5 points");
  }
  if (!(t_pi > 0.0)) throw ValidationError("t_pi must be positive");

  const int n = static_cast<int>(data.size());

  // Deterministic initialization: pi-pulse condition and the sample peak.
  double omega = M_PI / t_pi;
  double offset = data.front().first;
  double peak = -1.0;
  for (const auto& [d, p] : data) {
    if (p > peak) {
      peak = p;
      offset = d;
    }
  }

  auto residuals = [&](double om, double off, Eigen::VectorXd& r) {
    for (int i = 0; i < n; ++i) {
      r(i) = resonance_probability(om, data[i].first - off, t_pi) -
             data[i].second;
    }
  };

  Eigen::VectorXd r(n), r_try(n), rp(n), rm(n);
  Eigen::MatrixXd J(n, 2);
  residuals(omega, offset, r);
  double cost = r.squaredNorm();
  double lambda = 1e-3;

  int iter = 0;
  const int max_iter = 200;
  for (; iter < max_iter; ++iter) {
    const double h_om = 1e-7 * std::max(1.0, std::abs(omega));
    const double h_off = 1e-7 * std::max(1.0, std::abs(offset));
    residuals(omega + h_om, offset, rp);
    residuals(omega - h_om, offset, rm);
    J.col(0) = (rp - rm) / (2.0 * h_om);
    residuals(omega, offset + h_off, rp);
    residuals(omega, offset - h_off, rm);
    J.col(1) = (rp - rm) / (2.0 * h_off);

    const Eigen::Matrix2d JtJ = J.transpose() * J;
    const Eigen::Vector2d g = J.transpose() * r;
    if (g.norm() < 1e-12) break;

    bool stepped = false;
    for (int tries = 0; tries < 24; ++tries) {
      Eigen::Matrix2d A = JtJ;
      A(0, 0) += lambda * std::max(JtJ(0, 0), 1e-12);
      A(1, 1) += lambda * std::max(JtJ(1, 1), 1e-12);
      const Eigen::Vector2d step = A.ldlt().solve(-g);
      const double om_try = omega + step(0);
      const double off_try = offset + step(1);
      residuals(om_try, off_try, r_try);
      const double cost_try = r_try.squaredNorm();
      if (cost_try < cost) {
        const double improvement = cost - cost_try;
        omega = om_try;
        offset = off_try;
        r = r_try;
        cost = cost_try;
        lambda = std::max(lambda * 0.3, 1e-12);
        stepped = true;
        if (improvement < 1e-16 * (1.0 + cost) && step.norm() < 1e-12) {
          iter = max_iter;  // converged to machine precision
        }
        break;
      }
      lambda *= 10.0;
    }
    if (!stepped) break;
  }

  if (cost / n > 0.25) {
    throw NumericalError(
        "calibration fit failed to converge: rms residual " +
        std::to_string(std::sqrt(cost / n)) + " after " +
        std::to_string(iter) + " iterations");
  }

  CalibrationFit fit;
  fit.omega = std::abs(omega);  // lineshape is even in omega
  fit.delta_offset = offset;
  fit.residual_rms = std::sqrt(cost / n);
  fit.iterations = iter;
  return fit;
}

}  // namespace wring

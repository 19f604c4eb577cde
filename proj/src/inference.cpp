#include "wring/inference.hpp"

#include <cmath>
#include <limits>

#include "wring/basis.hpp"
#include "wring/observables.hpp"

namespace wring {

double kl_divergence(const Eigen::VectorXd& f, const Eigen::VectorXd& t,
                     double epsilon) {
  if (f.size() != t.size()) {
    throw ValidationError("KL divergence needs a common support family");
  }
  if (epsilon < 0.0) throw ValidationError("KL regularizer must be >= 0");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    const double fi = f[i];
    if (fi <= 0.0) continue;
    const double ti = std::max(t[i], epsilon);
    if (ti <= 0.0) return std::numeric_limits<double>::infinity();
    sum += fi * (std::log(fi) - std::log(ti));
  }
  return sum;
}

EstimatorValue fidelity_from_counts(const std::vector<double>& kink_probs,
                                    double px, int L) {
  if (static_cast<int>(kink_probs.size()) != L) {
    throw ValidationError("need exactly L kink probabilities");
  }
  double psum = 0.0;
  for (double p : kink_probs) {
    if (p < 0.0) throw ValidationError("kink probabilities must be >= 0");
    psum += p;
  }
  if (psum > 1.0 + 1e-9) {
    throw ValidationError("kink probabilities sum above 1");
  }
  EstimatorValue out;
  out.value = (psum + px) / double(L);
  out.in_range = out.value >= 0.0 && out.value <= 1.0;
  return out;
}

std::vector<double> kink_probabilities(const Eigen::VectorXd& z_probs, int L) {
  std::vector<double> p;
  p.reserve(L);
  for (auto idx : kink_indices(L)) p.push_back(z_probs[idx]);
  return p;
}

PxEstimate px_from_samples(const ShotSet& shots) {
  if (shots.basis != Basis::X) {
    throw ValidationError("px estimation needs x-basis shots");
  }
  if (shots.shots.empty()) throw ValidationError("empty shot set");
  const auto masks = px_window_masks(shots.L);

  const std::size_t n = shots.size();
  double sum = 0.0, sumsq = 0.0;
  for (const auto& s : shots.shots) {
    double val = 0.0;
    for (std::uint32_t m : masks) {
      val += (popcount64(s.post & m) % 2 == 0) ? 1.0 : -1.0;
    }
    sum += val;
    sumsq += val * val;
  }
  PxEstimate out;
  out.value = sum / double(n);
  if (n > 1) {
    const double var = (sumsq - sum * sum / double(n)) / double(n - 1);
    out.std_error = std::sqrt(std::max(0.0, var) / double(n));
  }
  return out;
}

double log_likelihood(const Eigen::VectorXd& f_exp,
                      const Eigen::VectorXd& t_pred, long n_samples,
                      double epsilon) {
  if (n_samples < 1) throw ValidationError("need at least one sample");
  const double d = kl_divergence(f_exp, t_pred, epsilon);
  if (std::isinf(d)) return -std::numeric_limits<double>::infinity();
  return -double(n_samples) * d;
}

double likelihood(const Eigen::VectorXd& f_exp, const Eigen::VectorXd& t_pred,
                  long n_samples, double epsilon) {
  return std::exp(log_likelihood(f_exp, t_pred, n_samples, epsilon));
}

PosteriorWeights posterior_weights(const Eigen::MatrixXd& log_lik) {
  const Eigen::Index q = log_lik.rows();
  if (q < 1) throw ValidationError("need at least one ensemble member");
  Eigen::VectorXd s = log_lik.rowwise().sum();
  const double smax = s.maxCoeff();
  if (std::isinf(smax) && smax < 0) {
    throw NumericalError(
        "degenerate posterior: every member has zero product likelihood");
  }
  PosteriorWeights out;
  out.w = (s.array() - smax).exp();
  out.w /= out.w.sum();
  return out;
}

PosteriorFidelity posterior_fidelity(const std::vector<double>& member_f,
                                     const PosteriorWeights& weights) {
  if (static_cast<Eigen::Index>(member_f.size()) != weights.w.size()) {
    throw ValidationError("weight vector and member list differ in length");
  }
  PosteriorFidelity out;
  for (std::size_t j = 0; j < member_f.size(); ++j) {
    out.fidelity += weights.w[j] * member_f[j];
  }
  double var = 0.0;
  for (std::size_t j = 0; j < member_f.size(); ++j) {
    var += weights.w[j] * (member_f[j] - out.fidelity) *
           (member_f[j] - out.fidelity);
  }
  out.spread = std::sqrt(std::max(0.0, var));
  return out;
}

}  // namespace wring

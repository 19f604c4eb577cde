#include "wring/measurement.hpp"

#include <cmath>

#include "wring/rng.hpp"
#include "wring/rotation.hpp"

namespace wring {

const char* basis_name(Basis b) { return b == Basis::Z ? "z" : "x"; }

Basis basis_from_string(const std::string& s) {
  if (s == "z" || s == "Z") return Basis::Z;
  if (s == "x" || s == "X") return Basis::X;
  throw ValidationError("unknown basis tag: " + s);
}

void ConfusionModel::validate() const {
  if (p_g_to_r < 0 || p_g_to_r > 1 || p_r_to_g < 0 || p_r_to_g > 1) {
    throw ValidationError("confusion probabilities must lie in [0, 1]");
  }
}

ShotSet sample_bitstrings(const QuantumState& state, Basis basis, int n,
                          std::uint64_t seed,
                          const std::string& experiment_id) {
  if (n < 1) throw ValidationError("need at least one shot");
  state.validate(1e-6);

  Eigen::VectorXd probs;
  if (basis == Basis::Z) {
    probs = state.z_probabilities();
  } else {
    probs = apply_ideal_rotation(state, M_PI / 2, M_PI / 2).z_probabilities();
  }
  // guard against tiny negative diagonal entries of noisy density matrices
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (probs[i] < 0.0) {
      if (probs[i] < -1e-8) throw ValidationError("invalid state probabilities");
      probs[i] = 0.0;
    }
  }

  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  const double total = acc;

  ShotSet out;
  out.L = state.sites();
  out.basis = basis;
  out.experiment_id = experiment_id;
  out.seed = seed;
  out.shots.resize(n);
  Rng rng(seed);
  for (int s = 0; s < n; ++s) {
    const double u = rng.uniform() * total;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    out.shots[s].pre = 0;
    out.shots[s].post =
        std::uint32_t(std::min<std::ptrdiff_t>(it - cdf.begin(), probs.size() - 1));
  }
  return out;
}

ShotSet apply_readout_noise(const ShotSet& shots, const ConfusionModel& cm,
                            std::uint64_t seed) {
  cm.validate();
  ShotSet out = shots;
  Rng rng(seed);
  auto flip = [&](std::uint32_t bits) {
    std::uint32_t res = bits;
    for (int l = 0; l < shots.L; ++l) {
      const bool is_r = bits >> l & 1u;
      const double p = is_r ? cm.p_r_to_g : cm.p_g_to_r;
      if (p > 0.0 && rng.uniform() < p) res ^= 1u << l;
    }
    return res;
  };
  for (auto& s : out.shots) {
    s.pre = flip(s.pre);
    s.post = flip(s.post);
  }
  return out;
}

namespace {

// In-place tensor application of one 2x2 real matrix per site.
void apply_site_matrix(Eigen::VectorXd& p, int L, double m00, double m01,
                       double m10, double m11) {
  const std::size_t dim = p.size();
  for (int l = 0; l < L; ++l) {
    const std::size_t s = std::size_t(1) << l;
    for (std::size_t base = 0; base < dim; base += 2 * s) {
      for (std::size_t i = base; i < base + s; ++i) {
        const double a = p[i], b = p[i + s];
        p[i] = m00 * a + m01 * b;
        p[i + s] = m10 * a + m11 * b;
      }
    }
  }
}

}  // namespace

Eigen::VectorXd readout_forward(const Eigen::VectorXd& probs, int L,
                                const ConfusionModel& cm) {
  cm.validate();
  Eigen::VectorXd out = probs;
  // column-stochastic: observed = M * true
  apply_site_matrix(out, L, 1.0 - cm.p_g_to_r, cm.p_r_to_g, cm.p_g_to_r,
                    1.0 - cm.p_r_to_g);
  return out;
}

MitigationResult mitigate_readout(const Eigen::VectorXd& freq, int L,
                                  const ConfusionModel& cm) {
  cm.validate();
  const double det = 1.0 - cm.p_g_to_r - cm.p_r_to_g;
  if (std::abs(det) < 1e-12) {
    throw ValidationError(
        "singular confusion model: p_g_to_r + p_r_to_g = 1 is not invertible");
  }
  const double sum = freq.sum();
  if (std::abs(sum - 1.0) > 1e-6) {
    throw ValidationError("mitigation input must be normalized");
  }

  MitigationResult res;
  res.probs = freq;
  apply_site_matrix(res.probs, L, (1.0 - cm.p_r_to_g) / det, -cm.p_r_to_g / det,
                    -cm.p_g_to_r / det, (1.0 - cm.p_g_to_r) / det);
  double clipped = 0.0;
  for (Eigen::Index i = 0; i < res.probs.size(); ++i) {
    if (res.probs[i] < 0.0) {
      clipped -= res.probs[i];
      res.probs[i] = 0.0;
    }
  }
  res.clipped_mass = clipped;
  const double total = res.probs.sum();
  if (total <= 0.0) throw NumericalError("mitigation clipped all probability");
  res.probs /= total;
  return res;
}

PostselectResult postselect_shots(const ShotSet& shots,
                                  std::uint32_t required_pre) {
  PostselectResult res;
  res.shots.L = shots.L;
  res.shots.basis = shots.basis;
  res.shots.experiment_id = shots.experiment_id;
  res.shots.seed = shots.seed;
  for (const auto& s : shots.shots) {
    if (s.pre == required_pre) {
      res.shots.shots.push_back(s);
    } else {
      ++res.discarded;
    }
  }
  return res;
}

Eigen::VectorXd shot_histogram(const ShotSet& shots) {
  if (shots.shots.empty()) throw ValidationError("empty shot set");
  Eigen::VectorXd h = Eigen::VectorXd::Zero(Eigen::Index(1) << shots.L);
  for (const auto& s : shots.shots) h[s.post] += 1.0;
  h /= double(shots.shots.size());
  return h;
}

}  // namespace wring

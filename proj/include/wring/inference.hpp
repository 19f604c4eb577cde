#pragma once

#include <vector>

#include "wring/measurement.hpp"

namespace wring {

// D_KL(f || t) = sum_x f(x) [log f(x) - log max(t(x), epsilon)], natural
// log; terms with f(x) = 0 contribute zero. The regularizer applies to the
// predicted distribution only. With epsilon = 0 and t(x) = 0 < f(x) the
// divergence is +infinity.
double kl_divergence(const Eigen::VectorXd& f, const Eigen::VectorXd& t,
                     double epsilon = 0.0);

// Default likelihood regularizer for an N-shot experiment: 1 / (10 N).
inline double default_epsilon(long n_shots) { return 0.1 / double(n_shots); }

struct EstimatorValue {
  double value = 0.0;
  // false when sampling noise pushed the estimator outside [0, 1]
  bool in_range = true;
};

// F_e = (1/L) [ sum_k p_k + px ]
EstimatorValue fidelity_from_counts(const std::vector<double>& kink_probs,
                                    double px, int L);

// p_1..p_L read off a z-basis distribution over all 2^L strings.
std::vector<double> kink_probabilities(const Eigen::VectorXd& z_probs, int L);

struct PxEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Estimates Tr(rho P_x) from x-basis shots. Every shot string is an
// eigenvector of each sigma_x window string with eigenvalue given by the
// parity of the window's Rydberg count, so the estimator is the shot mean
// of sum_w (-1)^{|post & w|}; the error is the binomial-propagated standard
// error of that mean.
PxEstimate px_from_samples(const ShotSet& shots);

// exp(-N D_KL(f || t, eps)) in (0, 1]; the log form is what the posterior
// pipeline consumes.
double likelihood(const Eigen::VectorXd& f_exp, const Eigen::VectorXd& t_pred,
                  long n_samples, double epsilon);
double log_likelihood(const Eigen::VectorXd& f_exp,
                      const Eigen::VectorXd& t_pred, long n_samples,
                      double epsilon);

struct PosteriorWeights {
  Eigen::VectorXd w;  // nonnegative, sums to 1
};

// w_j = prod_a L_j^(a) / sum_l prod_a L_l^(a), evaluated in log space from
// the Q x M matrix of per-experiment log likelihoods. Throws when every
// member has vanishing product likelihood.
PosteriorWeights posterior_weights(const Eigen::MatrixXd& log_lik);

struct PosteriorFidelity {
  double fidelity = 0.0;  // weighted mean of the member estimators
  double spread = 0.0;    // weighted standard deviation
};

PosteriorFidelity posterior_fidelity(const std::vector<double>& member_f,
                                     const PosteriorWeights& weights);

}  // namespace wring

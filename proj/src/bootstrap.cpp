#include "wring/bootstrap.hpp"

#include <cmath>

#include "wring/rng.hpp"

namespace wring {

BootstrapResult bootstrap_stat(
    const std::vector<double>& samples,
    const std::function<double(const std::vector<double>&)>& statistic, int B,
    std::uint64_t seed) {
  if (samples.empty()) throw ValidationError("bootstrap needs samples");
  if (B < 100) throw ValidationError("bootstrap needs B >= 100 resamples");

  const std::size_t n = samples.size();
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  std::vector<double> resample(n);
  std::vector<double> stats(B);
  for (int b = 0; b < B; ++b) {
    for (std::size_t i = 0; i < n; ++i) resample[i] = samples[pick(rng.engine())];
    stats[b] = statistic(resample);
  }

  double mean = 0.0;
  for (double s : stats) mean += s;
  mean /= B;
  double var = 0.0;
  for (double s : stats) var += (s - mean) * (s - mean);
  var /= (B - 1);

  return {mean, std::sqrt(var)};
}

}  // namespace wring

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wring/common.hpp"

namespace wring {

struct BootstrapResult {
  double mean = 0.0;       // mean of the statistic over resamples
  double std_error = 0.0;  // spread of the statistic over resamples
};

// Resample-with-replacement estimate of a statistic's sampling spread.
// B >= 100 resamples of the full sample size; deterministic per seed.
BootstrapResult bootstrap_stat(
    const std::vector<double>& samples,
    const std::function<double(const std::vector<double>&)>& statistic, int B,
    std::uint64_t seed);

}  // namespace wring

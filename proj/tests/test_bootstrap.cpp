#include <cmath>

#include "doctest.h"
#include "wring/bootstrap.hpp"
#include "wring/rng.hpp"

using namespace wring;

namespace {
double mean_stat(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / v.size();
}
}  // namespace

TEST_CASE("constant samples have zero bootstrap spread") {
  std::vector<double> samples(500, 3.25);
  const auto r = bootstrap_stat(samples, mean_stat, 200, 1);
  CHECK(r.mean == doctest::Approx(3.25));
  CHECK(r.std_error == 0.0);
}

TEST_CASE("Bernoulli(1/2) mean has standard error sqrt(p(1-p)/n)") {
  const int n = 1000;
  Rng rng(42);
  std::vector<double> samples(n);
  for (auto& s : samples) s = rng.uniform() < 0.5 ? 1.0 : 0.0;
  const auto r = bootstrap_stat(samples, mean_stat, 600, 7);
  const double expect = std::sqrt(0.25 / n);  // 0.0158
  CHECK(std::abs(r.std_error - expect) < 0.15 * expect);
}

TEST_CASE("bootstrap is deterministic per seed") {
  std::vector<double> samples{1, 2, 3, 4, 5, 6, 7, 8};
  const auto a = bootstrap_stat(samples, mean_stat, 150, 9);
  const auto b = bootstrap_stat(samples, mean_stat, 150, 9);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("bootstrap input validation") {
  std::vector<double> empty;
  CHECK_THROWS_AS(bootstrap_stat(empty, mean_stat, 200, 1), ValidationError);
  std::vector<double> ok{1.0, 2.0};
  CHECK_THROWS_AS(bootstrap_stat(ok, mean_stat, 50, 1), ValidationError);
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wring/config.hpp"
#include "wring/inference.hpp"
#include "wring/protocol.hpp"
#include "wring/spectrum.hpp"

namespace wring {

// Plot-ready delimited tables: comma separation, fixed column order, a
// one-line header per table, locale-independent numeric formatting. Reports
// are byte-stable for identical inputs and seeds.

std::string format_number(double v);

// FNV-1a digest of an input file's bytes, echoed in report headers.
std::uint64_t fnv1a(const std::string& bytes);
std::string file_digest(const std::string& path);

// "# key: value" preamble with the fully resolved config and input digests.
std::string report_header(const std::string& title,
                          const ExperimentConfig& cfg,
                          const std::vector<std::pair<std::string, std::string>>&
                              inputs);

// Population table: L kink rows plus the "other" bucket, raw and mitigated
// columns with bootstrap errors and the 1/L reference.
std::string population_table(int L, const std::vector<double>& raw,
                             const std::vector<double>& raw_err,
                             const std::vector<double>& mitigated,
                             double raw_other, double mitigated_other);

struct KlRow {
  std::string label;
  double bitstring_kl = 0.0;
  double magnetization_kl = 0.0;
};
std::string kl_table(const std::vector<KlRow>& rows);

// Fidelity table: prior band and posterior point (Fig. 4(b) analog); the
// posterior columns are blank when no Bayesian update was run.
struct FidelityReport {
  double estimator = 0.0;
  double estimator_err = 0.0;
  std::optional<double> prior_min, prior_max, prior_mean, prior_spread;
  std::optional<double> posterior, posterior_spread;
};
std::string fidelity_table(int L, const FidelityReport& rep);

std::string gap_table(const std::vector<std::pair<int, SpectrumResult>>& rows,
                      const std::optional<PowerLawFit>& odd_fit);

std::string sweep_table(const SweepResult& sweep);

}  // namespace wring

#include "wring/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wring/basis.hpp"

namespace wring {

std::string format_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input for digest: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(ss.str())));
  return buf;
}

std::string report_header(
    const std::string& title, const ExperimentConfig& cfg,
    const std::vector<std::pair<std::string, std::string>>& inputs) {
  std::ostringstream os;
  os << "# wring report: " << title << "\n";
  for (const auto& [name, digest] : inputs) {
    os << "# input " << name << " fnv1a=" << digest << "\n";
  }
  os << "# config:\n";
  std::istringstream echo(cfg.echo());
  std::string line;
  while (std::getline(echo, line)) os << "#   " << line << "\n";
  return os.str();
}

std::string population_table(int L, const std::vector<double>& raw,
                             const std::vector<double>& raw_err,
                             const std::vector<double>& mitigated,
                             double raw_other, double mitigated_other) {
  if (int(raw.size()) != L || int(raw_err.size()) != L ||
      int(mitigated.size()) != L) {
    throw ValidationError("population table needs L kink entries per column");
  }
  std::ostringstream os;
  os << "state,bitstring,p_raw,p_raw_err,p_mitigated,one_over_L\n";
  for (int k = 1; k <= L; ++k) {
    os << "kink_" << k << ',' << kink_string(L, k) << ','
       << format_number(raw[k - 1]) << ',' << format_number(raw_err[k - 1])
       << ',' << format_number(mitigated[k - 1]) << ','
       << format_number(1.0 / L) << "\n";
  }
  os << "other,-," << format_number(raw_other) << ",,"
     << format_number(mitigated_other) << ",\n";
  return os.str();
}

std::string kl_table(const std::vector<KlRow>& rows) {
  std::ostringstream os;
  os << "dataset,bitstring_kl_nats,magnetization_kl_nats\n";
  for (const auto& r : rows) {
    os << r.label << ',' << format_number(r.bitstring_kl) << ','
       << format_number(r.magnetization_kl) << "\n";
  }
  return os.str();
}

std::string fidelity_table(int L, const FidelityReport& rep) {
  std::ostringstream os;
  os << "L,f_estimator,f_estimator_err,prior_min,prior_max,prior_mean,"
        "prior_spread,posterior,posterior_spread,one_over_L\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
  };
  os << L << ',' << format_number(rep.estimator) << ','
     << format_number(rep.estimator_err) << ',' << opt(rep.prior_min) << ','
     << opt(rep.prior_max) << ',' << opt(rep.prior_mean) << ','
     << opt(rep.prior_spread) << ',' << opt(rep.posterior) << ','
     << opt(rep.posterior_spread) << ',' << format_number(1.0 / L) << "\n";
  return os.str();
}

std::string gap_table(const std::vector<std::pair<int, SpectrumResult>>& rows,
                      const std::optional<PowerLawFit>& odd_fit) {
  std::ostringstream os;
  os << "L,gap_rad_per_us,band_gap_rad_per_us,ground_degeneracy,solver\n";
  for (const auto& [L, r] : rows) {
    os << L << ',' << format_number(r.gap) << ',' << format_number(r.band_gap)
       << ',' << r.ground_degeneracy << ','
       << (r.used_dense ? "dense" : "lanczos") << "\n";
  }
  if (odd_fit) {
    os << "# odd-L fit: gap ~ L^alpha, alpha = "
       << format_number(odd_fit->exponent) << " +- "
       << format_number(odd_fit->stderr_exponent) << "\n";
  }
  return os.str();
}

std::string sweep_table(const SweepResult& sweep) {
  std::ostringstream os;
  os << "delta_rad_per_us,fidelity\n";
  for (const auto& [d, f] : sweep.grid) {
    os << format_number(d) << ',' << format_number(f) << "\n";
  }
  os << "# best: delta = " << format_number(sweep.best.first)
     << ", fidelity = " << format_number(sweep.best.second) << "\n";
  return os.str();
}

}  // namespace wring

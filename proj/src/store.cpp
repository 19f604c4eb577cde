#include "wring/store.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wring/shotfile.hpp"

namespace wring {

namespace {

std::string num17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Eigen::VectorXd read_distribution(const std::string& path, int L) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open distribution file: " + path);
  Eigen::VectorXd p = Eigen::VectorXd::Zero(Eigen::Index(1) << L);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ValidationError(path + ": malformed distribution line: " + line);
    }
    const long idx = std::stol(line.substr(0, comma));
    if (idx < 0 || idx >= p.size()) {
      throw ValidationError(path + ": index out of range: " + line);
    }
    p[idx] = std::stod(line.substr(comma + 1));
  }
  return p;
}

void write_distribution(const std::string& path, const Eigen::VectorXd& p) {
  std::ostringstream os;
  os << "index,prob\n";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p[i] != 0.0) os << i << ',' << num17(p[i]) << "\n";
  }
  write_text_file(path, os.str());
}

}  // namespace

void write_state_file(const std::string& path, const QuantumState& state) {
  std::ostringstream os;
  os << "# wring-state v1 L=" << state.sites() << " kind="
     << (state.is_pure() ? "pure" : "density") << "\n";
  if (state.is_pure()) {
    os << "index,re,im\n";
    for (Eigen::Index i = 0; i < state.psi().size(); ++i) {
      const cplx v = state.psi()[i];
      if (v != cplx(0.0, 0.0)) {
        os << i << ',' << num17(v.real()) << ',' << num17(v.imag()) << "\n";
      }
    }
  } else {
    os << "row,col,re,im\n";
    const auto& rho = state.rho();
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
      for (Eigen::Index j = 0; j < rho.cols(); ++j) {
        const cplx v = rho(i, j);
        if (v != cplx(0.0, 0.0)) {
          os << i << ',' << j << ',' << num17(v.real()) << ','
             << num17(v.imag()) << "\n";
        }
      }
    }
  }
  write_text_file(path, os.str());
}

QuantumState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open state file: " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# wring-state v1 ", 0) != 0) {
    throw ValidationError(path + ": missing state-file header");
  }
  int L = -1;
  bool pure = true;
  {
    std::stringstream ss(line.substr(2));
    std::string field;
    while (ss >> field) {
      if (field.rfind("L=", 0) == 0) L = std::stoi(field.substr(2));
      if (field.rfind("kind=", 0) == 0) pure = field.substr(5) == "pure";
    }
  }
  if (L < 1 || L > 13) throw ValidationError(path + ": bad L in header");
  std::getline(in, line);  // column header

  const Eigen::Index dim = Eigen::Index(1) << L;
  if (pure) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      long idx;
      double re, im;
      if (std::sscanf(line.c_str(), "%ld,%lf,%lf", &idx, &re, &im) != 3 ||
          idx < 0 || idx >= dim) {
        throw ValidationError(path + ": malformed state line: " + line);
      }
      psi[idx] = cplx(re, im);
    }
    return QuantumState::pure(std::move(psi), L);
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    long i, j;
    double re, im;
    if (std::sscanf(line.c_str(), "%ld,%ld,%lf,%lf", &i, &j, &re, &im) != 4 ||
        i < 0 || i >= dim || j < 0 || j >= dim) {
      throw ValidationError(path + ": malformed state line: " + line);
    }
    rho(i, j) = cplx(re, im);
  }
  return QuantumState::density(std::move(rho), L);
}

void save_ensemble(const std::string& dir, const PriorEnsemble& ensemble,
                   const ExperimentConfig& cfg) {
  std::filesystem::create_directories(dir);
  write_text_file(dir + "/config.ini",
                  cfg.echo() + "# ensemble seed = " +
                      std::to_string(ensemble.seed) + "\n");

  std::ostringstream os;
  os << "j,seed,omega_scale,delta_offset,f_estimator\n";
  for (std::size_t j = 0; j < ensemble.members.size(); ++j) {
    const auto& m = ensemble.members[j];
    os << j << ',' << m.seed << ',' << num17(m.omega_scale) << ','
       << num17(m.delta_offset) << ',' << num17(m.f_estimator) << "\n";
  }
  write_text_file(dir + "/members.csv", os.str());

  for (std::size_t j = 0; j < ensemble.members.size(); ++j) {
    const auto& m = ensemble.members[j];
    write_distribution(dir + "/member_" + std::to_string(j) + "_z.csv",
                       m.z_dist);
    for (std::size_t a = 0; a < m.x_dists.size(); ++a) {
      write_distribution(dir + "/member_" + std::to_string(j) + "_x" +
                             std::to_string(a) + ".csv",
                         m.x_dists[a]);
    }
  }
}

StoredEnsemble load_ensemble(const std::string& dir) {
  std::ifstream members(dir + "/members.csv");
  if (!members) {
    throw ValidationError("cannot open ensemble member table in " + dir);
  }
  StoredEnsemble out;

  // recover L and the ensemble seed from the stored config echo
  {
    std::ifstream cfg(dir + "/config.ini");
    if (!cfg) throw ValidationError("cannot open ensemble config in " + dir);
    std::string line;
    while (std::getline(cfg, line)) {
      if (line.rfind("L = ", 0) == 0) out.L = std::stoi(line.substr(4));
      if (line.rfind("# ensemble seed = ", 0) == 0) {
        out.seed = std::stoull(line.substr(18));
      }
    }
    if (out.L < 1) throw ValidationError(dir + ": config echo lacks L");
  }

  std::string line;
  std::getline(members, line);  // header
  while (std::getline(members, line)) {
    if (line.empty()) continue;
    EnsembleMember m;
    long j;
    unsigned long long seed;
    if (std::sscanf(line.c_str(), "%ld,%llu,%lf,%lf,%lf", &j, &seed,
                    &m.omega_scale, &m.delta_offset, &m.f_estimator) != 5) {
      throw ValidationError(dir + ": malformed member line: " + line);
    }
    m.seed = seed;
    out.ensemble.members.push_back(std::move(m));
  }
  if (out.ensemble.members.empty()) {
    throw ValidationError(dir + ": ensemble has no members");
  }

  for (std::size_t j = 0; j < out.ensemble.members.size(); ++j) {
    auto& m = out.ensemble.members[j];
    m.z_dist = read_distribution(
        dir + "/member_" + std::to_string(j) + "_z.csv", out.L);
    for (int a = 0;; ++a) {
      const std::string path =
          dir + "/member_" + std::to_string(j) + "_x" + std::to_string(a) +
          ".csv";
      if (!std::filesystem::exists(path)) break;
      m.x_dists.push_back(read_distribution(path, out.L));
    }
  }
  out.n_rotations = static_cast<int>(out.ensemble.members.front().x_dists.size());
  out.ensemble.seed = out.seed;
  out.ensemble.config.L = out.L;
  return out;
}

}  // namespace wring

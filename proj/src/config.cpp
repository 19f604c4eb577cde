#include "wring/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace wring {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value,
                    int line) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size()) {
    throw ValidationError("config line " + std::to_string(line) + ": key '" +
                          key + "' expects a number, got '" + value + "'");
  }
  return out;
}

long parse_int(const std::string& key, const std::string& value, int line) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size()) {
    throw ValidationError("config line " + std::to_string(line) + ": key '" +
                          key + "' expects an integer, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value, int line) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ValidationError("config line " + std::to_string(line) + ": key '" +
                        key + "' expects true/false, got '" + value + "'");
}

std::vector<double> parse_list(const std::string& key,
                               const std::string& value, int line) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_double(key, item, line));
  }
  if (out.empty()) {
    throw ValidationError("config line " + std::to_string(line) + ": key '" +
                          key + "' expects a comma-separated list");
  }
  return out;
}

std::string fmt_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text,
                              const std::string& origin) {
  ExperimentConfig cfg;
  using Setter = std::function<void(const std::string&, int)>;
  std::map<std::string, Setter> keys;

  auto dbl = [&](const char* name, double* target) {
    keys[name] = [name, target](const std::string& v, int line) {
      *target = parse_double(name, v, line);
    };
  };
  dbl("system.a", &cfg.a);
  dbl("system.c6", &cfg.c6);
  dbl("prep.omega", &cfg.prep.omega);
  dbl("prep.delta", &cfg.prep.delta_final);
  dbl("prep.t_final", &cfg.prep.t_final);
  dbl("prep.tau_omega_ramp", &cfg.prep.tau_omega_ramp);
  dbl("prep.delta_initial", &cfg.prep.delta_initial);
  dbl("prep.delta_ramp_start", &cfg.prep.delta_ramp_start);
  dbl("prep.delta_ramp_end", &cfg.prep.delta_ramp_end);
  dbl("rotation.omega_rot", &cfg.rotation.omega_rot);
  dbl("rotation.tau_rot", &cfg.rotation.tau_rot);
  dbl("rotation.ramp", &cfg.rotation.ramp);
  dbl("rotation.phase", &cfg.rotation.phase);
  dbl("noise.gamma", &cfg.noise.gamma);
  dbl("noise.sigma_pos", &cfg.noise.sigma_pos);
  dbl("noise.sigma_omega_rel", &cfg.noise.sigma_omega_rel);
  dbl("noise.sigma_delta", &cfg.noise.sigma_delta);
  dbl("noise.p_g_to_r", &cfg.noise.p_g_to_r);
  dbl("noise.p_r_to_g", &cfg.noise.p_r_to_g);
  dbl("run.dt", &cfg.dt);
  dbl("limits.plate_edge", &cfg.limits.plate_edge);
  dbl("limits.min_vertical", &cfg.limits.min_vertical);
  dbl("limits.omega_max", &cfg.limits.omega_max);
  dbl("limits.abs_delta_max", &cfg.limits.abs_delta_max);
  dbl("limits.omega_slew_max", &cfg.limits.omega_slew_max);
  dbl("limits.delta_slew_max", &cfg.limits.delta_slew_max);

  keys["system.L"] = [&cfg](const std::string& v, int line) {
    cfg.L = static_cast<int>(parse_int("system.L", v, line));
  };
  keys["system.truncation"] = [&cfg](const std::string& v, int line) {
    try {
      cfg.truncation = truncation_from_string(v);
    } catch (const ValidationError&) {
      throw ValidationError("config line " + std::to_string(line) +
                            ": unknown truncation '" + v + "'");
    }
  };
  keys["rotation.omega_rot_offsets"] = [&cfg](const std::string& v, int line) {
    cfg.omega_rot_offsets = parse_list("rotation.omega_rot_offsets", v, line);
  };
  keys["ensemble.q"] = [&cfg](const std::string& v, int line) {
    cfg.ensemble_q = static_cast<int>(parse_int("ensemble.q", v, line));
  };
  keys["ensemble.trajectories"] = [&cfg](const std::string& v, int line) {
    cfg.trajectories_per_member =
        static_cast<int>(parse_int("ensemble.trajectories", v, line));
  };
  keys["run.seed"] = [&cfg](const std::string& v, int line) {
    cfg.seed = static_cast<std::uint64_t>(parse_int("run.seed", v, line));
  };
  keys["run.shots"] = [&cfg](const std::string& v, int line) {
    cfg.shots = static_cast<int>(parse_int("run.shots", v, line));
  };
  keys["run.method"] = [&cfg](const std::string& v, int line) {
    if (v == "pwc") {
      cfg.method = EvolveOptions::Method::PiecewiseConstant;
    } else if (v == "cf4") {
      cfg.method = EvolveOptions::Method::CommutatorFree4;
    } else {
      throw ValidationError("config line " + std::to_string(line) +
                            ": run.method expects pwc or cf4, got '" + v + "'");
    }
  };
  keys["limits.allow_unphysical"] = [&cfg](const std::string& v, int line) {
    cfg.allow_unphysical = parse_bool("limits.allow_unphysical", v, line);
  };

  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ValidationError(origin + " line " + std::to_string(lineno) +
                              ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError(origin + " line " + std::to_string(lineno) +
                            ": expected key = value");
    }
    const std::string key = section + "." + trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = keys.find(key);
    if (it == keys.end()) {
      throw ValidationError(origin + " line " + std::to_string(lineno) +
                            ": unknown key '" + key + "'");
    }
    it->second(value, lineno);
  }

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

std::vector<RotationParams> ExperimentConfig::rotation_variants() const {
  std::vector<RotationParams> out;
  for (double off : omega_rot_offsets) {
    RotationParams r = rotation;
    r.omega_rot = std::max(0.0, rotation.omega_rot + off);
    out.push_back(r);
  }
  return out;
}

EnsembleConfig ExperimentConfig::ensemble_config() const {
  EnsembleConfig e;
  e.L = L;
  e.a = a;
  e.c6 = c6;
  e.truncation = truncation;
  e.prep = prep;
  e.rotations = rotation_variants();
  e.noise = noise;
  e.readout = confusion();
  e.Q = ensemble_q;
  e.evolve = evolve_options();
  e.evolve.method = EvolveOptions::Method::PiecewiseConstant;
  e.evolve.dt = std::max(dt, 1e-3);
  e.trajectories_per_member = trajectories_per_member;
  return e;
}

void ExperimentConfig::validate() const {
  if (L < 3) throw ValidationError("system.L must be >= 3");
  if (L > 13) throw CapacityError("system.L exceeds the desk-scale cap 13");
  if (shots < 1) throw ValidationError("run.shots must be >= 1");
  if (ensemble_q < 1) throw ValidationError("ensemble.q must be >= 1");
  if (!(dt > 0)) throw ValidationError("run.dt must be > 0");
  noise.validate();
  if (allow_unphysical) return;
  const auto viols =
      validate_hardware(geometry(), build_prep_schedule(prep), limits);
  if (!viols.empty()) {
    std::string msg = "configuration violates hardware limits:";
    for (const auto& v : viols) msg += "\n  - " + v.message;
    msg += "\nset limits.allow_unphysical = true to override";
    throw ValidationError(msg);
  }
}

std::string ExperimentConfig::echo() const {
  std::ostringstream os;
  os << "[system]\n"
     << "L = " << L << "\n"
     << "a = " << fmt_num(a) << "\n"
     << "c6 = " << fmt_num(c6) << "\n"
     << "truncation = " << truncation_name(truncation) << "\n"
     << "[prep]\n"
     << "omega = " << fmt_num(prep.omega) << "\n"
     << "delta = " << fmt_num(prep.delta_final) << "\n"
     << "t_final = " << fmt_num(prep.t_final) << "\n"
     << "tau_omega_ramp = " << fmt_num(prep.tau_omega_ramp) << "\n"
     << "delta_initial = " << fmt_num(prep.delta_initial) << "\n"
     << "delta_ramp_start = " << fmt_num(prep.delta_ramp_start) << "\n"
     << "delta_ramp_end = " << fmt_num(prep.delta_ramp_end) << "\n"
     << "[rotation]\n"
     << "omega_rot = " << fmt_num(rotation.omega_rot) << "\n"
     << "tau_rot = " << fmt_num(rotation.tau_rot) << "\n"
     << "ramp = " << fmt_num(rotation.ramp) << "\n"
     << "phase = " << fmt_num(rotation.phase) << "\n"
     << "omega_rot_offsets =";
  for (std::size_t i = 0; i < omega_rot_offsets.size(); ++i) {
    os << (i ? "," : " ") << fmt_num(omega_rot_offsets[i]);
  }
  os << "\n[noise]\n"
     << "gamma = " << fmt_num(noise.gamma) << "\n"
     << "sigma_pos = " << fmt_num(noise.sigma_pos) << "\n"
     << "sigma_omega_rel = " << fmt_num(noise.sigma_omega_rel) << "\n"
     << "sigma_delta = " << fmt_num(noise.sigma_delta) << "\n"
     << "p_g_to_r = " << fmt_num(noise.p_g_to_r) << "\n"
     << "p_r_to_g = " << fmt_num(noise.p_r_to_g) << "\n"
     << "[ensemble]\n"
     << "q = " << ensemble_q << "\n"
     << "trajectories = " << trajectories_per_member << "\n"
     << "[run]\n"
     << "seed = " << seed << "\n"
     << "shots = " << shots << "\n"
     << "method = "
     << (method == EvolveOptions::Method::PiecewiseConstant ? "pwc" : "cf4")
     << "\n"
     << "dt = " << fmt_num(dt) << "\n"
     << "[limits]\n"
     << "plate_edge = " << fmt_num(limits.plate_edge) << "\n"
     << "min_vertical = " << fmt_num(limits.min_vertical) << "\n"
     << "omega_max = " << fmt_num(limits.omega_max) << "\n"
     << "abs_delta_max = " << fmt_num(limits.abs_delta_max) << "\n"
     << "omega_slew_max = " << fmt_num(limits.omega_slew_max) << "\n"
     << "delta_slew_max = " << fmt_num(limits.delta_slew_max) << "\n"
     << "allow_unphysical = " << (allow_unphysical ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace wring

#include "wring/shotfile.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wring/basis.hpp"

namespace wring {

std::string format_shot_file(const ShotSet& shots) {
  std::ostringstream os;
  os << "# wring-shots v1 L=" << shots.L << " basis=" << basis_name(shots.basis)
     << " experiment=" << (shots.experiment_id.empty() ? "-" : shots.experiment_id)
     << " seed=" << shots.seed << "\n";
  os << "shot_id,basis,pre,post\n";
  for (std::size_t i = 0; i < shots.shots.size(); ++i) {
    os << i << ',' << basis_name(shots.basis) << ','
       << to_bitstring(shots.shots[i].pre, shots.L) << ','
       << to_bitstring(shots.shots[i].post, shots.L) << "\n";
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write to " + tmp);
    out << content;
    if (!out.good()) throw ValidationError("short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw ValidationError("cannot move " + tmp + " to " + path + ": " +
                          ec.message());
  }
}

void write_shot_file(const std::string& path, const ShotSet& shots) {
  write_text_file(path, format_shot_file(shots));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

}  // namespace

ShotSet parse_shot_file(const std::string& text, int expected_L,
                        const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# wring-shots v1 ", 0) != 0) {
    throw ValidationError(origin + ": missing shot-file header");
  }

  ShotSet shots;
  shots.L = -1;
  for (const auto& field : split(line.substr(2), ' ')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "L") shots.L = std::stoi(value);
    if (key == "basis") shots.basis = basis_from_string(value);
    if (key == "experiment" && value != "-") shots.experiment_id = value;
    if (key == "seed") shots.seed = std::stoull(value);
  }
  if (shots.L < 1) throw ValidationError(origin + ": header lacks L");
  if (expected_L >= 0 && shots.L != expected_L) {
    throw ValidationError(origin + ": file has L=" + std::to_string(shots.L) +
                          ", expected L=" + std::to_string(expected_L));
  }

  if (!std::getline(in, line) || line != "shot_id,basis,pre,post") {
    throw ValidationError(origin + ": missing column header");
  }

  std::vector<std::string> bad;
  int lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    try {
      if (f.size() != 4) throw ValidationError("expected 4 fields");
      if (basis_from_string(f[1]) != shots.basis) {
        throw ValidationError("basis differs from the header");
      }
      Shot s;
      s.pre = from_bitstring(f[2], shots.L);
      s.post = from_bitstring(f[3], shots.L);
      shots.shots.push_back(s);
    } catch (const ValidationError& e) {
      bad.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!bad.empty()) {
    std::string msg = origin + ": " + std::to_string(bad.size()) +
                      " malformed shot line(s)";
    for (std::size_t i = 0; i < bad.size() && i < 5; ++i) {
      msg += "\n  " + bad[i];
    }
    throw ValidationError(msg);
  }
  if (shots.shots.empty()) {
    throw ValidationError(origin + ": shot file has no data lines");
  }
  return shots;
}

ShotSet read_shot_file(const std::string& path, int expected_L) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open shot file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_shot_file(ss.str(), expected_L, path);
}

}  // namespace wring

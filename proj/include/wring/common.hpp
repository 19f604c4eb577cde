#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wring {

using cplx = std::complex<double>;

// Unit conventions used throughout: lengths in um, times in us,
// angular frequencies and rates in rad/us, phases in rad.
inline constexpr double kDefaultC6 = 5.42e6;  // rad us^-1 um^6

// Exit-code taxonomy shared by the library errors and the CLI.
//   0 success, 2 validation failure, 3 capacity exceeded, 4 numerical failure.
class Error : public std::runtime_error {
 public:
  Error(std::string msg, int exit_code)
      : std::runtime_error(std::move(msg)), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::string msg) : Error(std::move(msg), 2) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(std::string msg) : Error(std::move(msg), 3) {}
};

class NumericalError : public Error {
 public:
  explicit NumericalError(std::string msg) : Error(std::move(msg), 4) {}
};

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace wring

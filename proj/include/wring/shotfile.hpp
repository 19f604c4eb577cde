#pragma once

#include <string>

#include "wring/measurement.hpp"

namespace wring {

// Shot file, bit-exact contract:
//   line 1: "# wring-shots v1 L=<L> basis=<z|x> experiment=<id> seed=<n>"
//   line 2: "shot_id,basis,pre,post"
//   data  : "<id>,<z|x>,<pre>,<post>" with pre/post over {g,r}; {0,1} is
//           accepted as an input alias and normalized to {g,r} on write.
std::string format_shot_file(const ShotSet& shots);
void write_shot_file(const std::string& path, const ShotSet& shots);

// Validates against the documented format; malformed lines are reported
// with their indices. expected_L = -1 accepts the header's L.
ShotSet read_shot_file(const std::string& path, int expected_L = -1);
ShotSet parse_shot_file(const std::string& text, int expected_L = -1,
                        const std::string& origin = "<string>");

// Atomic text write (write-then-rename).
void write_text_file(const std::string& path, const std::string& content);

}  // namespace wring

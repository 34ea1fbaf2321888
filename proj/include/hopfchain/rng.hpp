#pragma once

#include <cstdint>
#include <random>

namespace hopfchain {

// One reproducible stream per (seed, stream). The mappings to bounded
// integers and unit reals are written out so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  // Uniform on {0, ..., bound-1}.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

}  // namespace hopfchain

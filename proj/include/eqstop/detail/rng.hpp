#ifndef EQSTOP_DETAIL_RNG_HPP
#define EQSTOP_DETAIL_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace eqstop::detail {

// Explicit inverse-transform sampling on top of mt19937_64 so that seeded
// streams are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double exponential(double rate) {
    return -std::log1p(-uniform()) / rate;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eqstop::detail

#endif

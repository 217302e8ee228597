// Seeded linear congruential generator with fixed constants, so sampled
// sweeps replay identically everywhere:
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// and each draw returns the top 32 bits of the new state.

#ifndef ORTHO8_RNG_HPP_
#define ORTHO8_RNG_HPP_

#include <cstdint>

namespace ortho8 {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next_u32() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::uint32_t>(state_ >> 32);
  }
  // uniform-ish draw in [0, bound)
  std::uint32_t next_below(std::uint32_t bound) { return next_u32() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace ortho8

#endif  // ORTHO8_RNG_HPP_

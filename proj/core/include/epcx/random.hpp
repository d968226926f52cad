#pragma once

#include <cstdint>
#include <random>

namespace epcx {

/// Seeded generator for randomized suites: std::mt19937_64 (MT19937-64 with
/// the standard seeding), reals as (x >> 11) * 2^-53 mapped onto [lo, hi).
/// The mapping is spelled out so other implementations reproduce the draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  [[nodiscard]] double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  [[nodiscard]] double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace epcx

#ifndef PHOTOPLAN_RNG_HPP
#define PHOTOPLAN_RNG_HPP

#include <cstdint>
#include <random>

namespace photoplan {

/// Deterministic uniform generator. std::uniform_real_distribution is
/// implementation defined, so doubles are derived from the raw 64-bit
/// stream directly; identical seeds give identical sequences on every
/// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    // Rejection-free modulo is fine here: n is tiny relative to 2^64, the
    // bias is < n / 2^64 and irrelevant for simulation draws.
    return engine_() % n;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Fixed offsets separating the RNG streams a mission consumes. Keeping the
/// streams distinct makes draw order insensitive to how often each consumer
/// runs.
namespace rng_stream {
inline constexpr std::uint64_t kOptimizer = 0x9e3779b97f4a7c15ull;
inline constexpr std::uint64_t kPlanner = 0xbf58476d1ce4e5b9ull;
inline constexpr std::uint64_t kScenario = 0x94d049bb133111ebull;
}  // namespace rng_stream

}  // namespace photoplan

#endif  // PHOTOPLAN_RNG_HPP

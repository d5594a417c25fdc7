#pragma once

#include <cstdint>
#include <random>

namespace acg {

/// Seedable, splittable generator. All randomness in the library flows
/// through an Rng; streams derived with split() are independent of how work
/// is scheduled across threads.
class Rng
{
public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }

  /// Child stream number `stream`. Same parent seed and stream id give the
  /// same child regardless of call order.
  Rng split(std::uint64_t stream) const { return Rng(mix(seed_ ^ mix(stream + 0x51ed2701u))); }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound)
  {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z)
  {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

} // namespace acg

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cayley/value.hpp"

namespace cayley {

/// Number of points a generated function is compared on.
inline constexpr std::size_t kDefaultProbes = 16;

/// Deterministic random source. The same (seed, size) always reproduces the
/// same sample sequence; `size` bounds list lengths and structure depth.
class Gen {
 public:
  explicit Gen(std::uint64_t seed, std::size_t size = 8);

  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t size() const noexcept { return size_; }

  /// Independent stream derived from this generator's seed and `salt`.
  /// Does not advance this generator.
  Gen fork(std::uint64_t salt) const;

  /// Same stream position, half the size (never below 1). Nested structure
  /// is generated with shrunk generators.
  Gen shrink() const;

  std::uint64_t next();
  /// Uniform in [0, n). n must be positive.
  std::size_t below(std::size_t n);
  bool coin();

  /// Bounded integer in [-kIntBound, kIntBound].
  Value::Int integer();
  /// Bounded natural in [0, kNatBound].
  Value::Int natural();
  /// Short label over a five-letter alphabet, at most min(size, 3) letters.
  std::string label();

  Value value(const Ty& ty);

  /// A deterministic pseudo-random function: the output at x is drawn from a
  /// stream seeded by this generator and hash(x). Probes are drawn from `dom`.
  Fn function(const Ty& dom, const Ty& cod, std::size_t probes = kDefaultProbes);

  std::vector<Value> probes(const Ty& dom, std::size_t count = kDefaultProbes);

  static constexpr Value::Int kIntBound = 100;
  static constexpr Value::Int kNatBound = 20;

 private:
  std::uint64_t seed_;
  std::size_t size_;
  std::mt19937_64 rng_;
};

/// splitmix64 finaliser, used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) noexcept;

}  // namespace cayley

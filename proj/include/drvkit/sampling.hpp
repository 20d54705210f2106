#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "drvkit/derivation.hpp"

namespace drvkit {

/// Seeded generator with a platform-independent bounded draw
/// (std::uniform_int_distribution is implementation-defined).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Uniform index in [0, n).
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Coefficients drawn uniformly from [lo, hi].
GroupRingElement random_element(const GroupPtr& group, const Ring& ring, SeededRng& rng, long lo, long hi);

/// Random rational combination of the twisted-centralizer basis; each
/// coefficient is k / d with d drawn from `denominators` and k in [-9, 9].
GroupRingElement random_twisted_central(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau,
                                        SeededRng& rng, std::span<const long> denominators);

}  // namespace drvkit

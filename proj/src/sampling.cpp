#include "drvkit/sampling.hpp"

#include <limits>

namespace drvkit {

long SeededRng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<long>(draw % span);
}

GroupRingElement random_element(const GroupPtr& group, const Ring& ring, SeededRng& rng, long lo, long hi) {
  GroupRingElement x(group, ring);
  for (Element g = 0; g < group->order(); ++g) x.set(g, Scalar::from_int(ring, rng.uniform(lo, hi)));
  return x;
}

GroupRingElement random_twisted_central(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau,
                                        SeededRng& rng, std::span<const long> denominators) {
  const Ring q = sigma.ring().fraction_field();
  GroupRingElement c(sigma.group(), q);
  for (const auto& b : twisted_centralizer_basis(sigma, tau)) {
    const long den = denominators[rng.index(denominators.size())];
    c += b.with_ring(q).scaled(Scalar::from_fraction(q, rng.uniform(-9, 9), den));
  }
  return c;
}

}  // namespace drvkit

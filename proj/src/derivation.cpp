#include "drvkit/derivation.hpp"

#include <array>

#include "drvkit/error.hpp"
#include "drvkit/linalg.hpp"

namespace drvkit {

namespace {

void require_same_context(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau) {
  if (!same_group(sigma.group(), tau.group()) || !sigma.ring().compatible(tau.ring())) {
    throw MismatchError("sigma and tau act on different group rings");
  }
}

// Coefficient m of x tau(g) - sigma(g) x, as a row over the unknowns x_k
// stored at column offset + k.
std::vector<SparseSystem::Entry> twisted_commutator_row(const AlgebraEndomorphism& sigma,
                                                        const AlgebraEndomorphism& tau, Element g, Element m,
                                                        std::size_t offset, const Scalar& sign) {
  const FiniteGroup& group = *sigma.group();
  std::vector<SparseSystem::Entry> entries;
  const GroupRingElement& tg = tau.image(g);
  const GroupRingElement& sg = sigma.image(g);
  for (Element t = 0; t < group.order(); ++t) {
    if (!tg[t].is_zero()) entries.emplace_back(offset + group.multiply(m, group.inverse(t)), tg[t] * sign);
  }
  for (Element s = 0; s < group.order(); ++s) {
    if (!sg[s].is_zero()) entries.emplace_back(offset + group.multiply(group.inverse(s), m), -(sg[s] * sign));
  }
  return entries;
}

// Rows x tau(g) - sigma(g) x = rhs(g) over all g, one per coefficient.
SparseSystem twisted_commutator_system(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau,
                                       const std::vector<GroupRingElement>* rhs) {
  const Ring ring = sigma.ring().fraction_field();
  const std::size_t n = sigma.group()->order();
  const Scalar one = Scalar::one(ring);
  SparseSystem system(ring, n);
  for (Element g = 0; g < n; ++g) {
    for (Element m = 0; m < n; ++m) {
      auto entries = twisted_commutator_row(sigma, tau, g, m, 0, one);
      system.add_row(std::move(entries), rhs != nullptr ? (*rhs)[g][m] : Scalar::zero(ring));
    }
  }
  return system;
}

std::vector<GroupRingElement> to_elements(const GroupPtr& group, const Ring& ring, std::vector<Vector> vectors) {
  std::vector<GroupRingElement> out;
  out.reserve(vectors.size());
  for (auto& v : vectors) out.push_back(GroupRingElement::from_coeffs(group, ring, std::move(v)));
  return out;
}

struct BlockMatrix {
  std::array<GroupRingElement, 4> entry;  // row-major 2x2

  BlockMatrix operator*(const BlockMatrix& rhs) const {
    const auto& a = entry;
    const auto& b = rhs.entry;
    return BlockMatrix{{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                        a[2] * b[1] + a[3] * b[3]}};
  }
  bool operator==(const BlockMatrix&) const = default;
};

}  // namespace

CocycleVerdict validate_cocycle(std::span<const GroupRingElement> values, const AlgebraEndomorphism& sigma,
                                const AlgebraEndomorphism& tau, std::size_t max_reported) {
  CocycleVerdict verdict;
  require_same_context(sigma, tau);
  const GroupPtr& group = sigma.group();
  if (values.size() != group->order()) {
    verdict.problems.push_back("expected " + std::to_string(group->order()) + " values, got " +
                               std::to_string(values.size()));
    return verdict;
  }
  for (const auto& v : values) {
    if (!same_group(v.group(), group) || !v.ring().compatible(sigma.ring())) {
      verdict.problems.push_back("derivation values live in a different group ring than sigma and tau");
      return verdict;
    }
  }
  for (Element g = 0; g < group->order(); ++g) {
    for (Element h = 0; h < group->order(); ++h) {
      const GroupRingElement& lhs = values[group->multiply(g, h)];
      GroupRingElement rhs = values[g] * tau.image(h) + sigma.image(g) * values[h];
      if (lhs != rhs) {
        if (verdict.violations.size() >= max_reported) return verdict;
        verdict.violations.push_back({g, h, lhs, std::move(rhs)});
      }
    }
  }
  return verdict;
}

DerivationTable::DerivationTable(AlgebraEndomorphism sigma, AlgebraEndomorphism tau,
                                 std::vector<GroupRingElement> values)
    : sigma_(std::move(sigma)), tau_(std::move(tau)), values_(std::move(values)) {
  require_same_context(sigma_, tau_);
  if (values_.size() != group()->order()) {
    throw MismatchError("expected " + std::to_string(group()->order()) + " derivation values, got " +
                        std::to_string(values_.size()));
  }
  certified_ = validate_cocycle(values_, sigma_, tau_, 1).valid();
}

DerivationTable DerivationTable::zero(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau) {
  std::vector<GroupRingElement> values(sigma.group()->order(), GroupRingElement::zero(sigma.group(), sigma.ring()));
  return DerivationTable(sigma, tau, std::move(values));
}

DerivationTable DerivationTable::operator+(const DerivationTable& rhs) const {
  std::vector<GroupRingElement> values = values_;
  for (std::size_t g = 0; g < values.size(); ++g) values[g] += rhs.values_[g];
  return DerivationTable(sigma_, tau_, std::move(values));
}

DerivationTable DerivationTable::operator-(const DerivationTable& rhs) const {
  std::vector<GroupRingElement> values = values_;
  for (std::size_t g = 0; g < values.size(); ++g) values[g] -= rhs.values_[g];
  return DerivationTable(sigma_, tau_, std::move(values));
}

DerivationTable DerivationTable::scaled(const Scalar& factor) const {
  std::vector<GroupRingElement> values;
  values.reserve(values_.size());
  for (const auto& v : values_) values.push_back(v.scaled(factor));
  return DerivationTable(sigma_, tau_, std::move(values));
}

GroupRingElement apply_derivation(const DerivationTable& delta, const GroupRingElement& a) {
  if (!delta.certified()) throw ValidationError("derivation table is not certified");
  if (!same_group(a.group(), delta.group())) throw MismatchError("element and derivation over different groups");
  GroupRingElement out(delta.group(), delta.ring());
  for (Element g = 0; g < a.size(); ++g) {
    if (!a[g].is_zero()) out += delta.value(g).scaled(a[g]);
  }
  return out;
}

DerivationTable inner_derivation(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                                 const AlgebraEndomorphism& tau) {
  require_same_context(sigma, tau);
  std::vector<GroupRingElement> values;
  values.reserve(x.size());
  for (Element g = 0; g < x.size(); ++g) values.push_back(x * tau.image(g) - sigma.image(g) * x);
  return DerivationTable(sigma, tau, std::move(values));
}

std::vector<GroupRingElement> twisted_centralizer_basis_by_nullspace(const AlgebraEndomorphism& sigma,
                                                                     const AlgebraEndomorphism& tau) {
  require_same_context(sigma, tau);
  SparseSystem system = twisted_commutator_system(sigma, tau, nullptr);
  return to_elements(sigma.group(), system.ring(), nullspace_basis(system));
}

std::vector<GroupRingElement> twisted_centralizer_basis(const AlgebraEndomorphism& sigma,
                                                        const AlgebraEndomorphism& tau) {
  require_same_context(sigma, tau);
  if (!sigma.is_lift() || !tau.is_lift()) return twisted_centralizer_basis_by_nullspace(sigma, tau);
  std::vector<GroupRingElement> basis;
  for (const auto& block : twisted_orbits(*sigma.group_hom(), *tau.group_hom()).blocks) {
    basis.push_back(GroupRingElement::indicator(sigma.group(), sigma.ring(), block));
  }
  return basis;
}

std::vector<DerivationTable> derivation_space_basis(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau,
                                                    const Limits& limits) {
  require_same_context(sigma, tau);
  const Ring& ring = sigma.ring();
  if (!ring.is_field()) throw ValidationError("derivation-space enumeration needs a field, got " + ring.to_string());
  const GroupPtr& group = sigma.group();
  const std::size_t n = group->order();
  if (n > limits.enumeration_cap) {
    throw CapExceeded("derivation-space enumeration is capped at |G| <= " + std::to_string(limits.enumeration_cap) +
                      ", got " + std::to_string(n));
  }

  // Unknown g * n + k is the coefficient of k in delta(g).
  const Scalar one = Scalar::one(ring);
  SparseSystem system(ring, n * n);
  for (Element k = 0; k < n; ++k) system.add_row({{group->identity() * n + k, one}});
  for (Element g = 0; g < n; ++g) {
    const GroupRingElement& sg = sigma.image(g);
    for (Element h = 0; h < n; ++h) {
      const GroupRingElement& th = tau.image(h);
      const Element gh = group->multiply(g, h);
      for (Element m = 0; m < n; ++m) {
        std::vector<SparseSystem::Entry> entries{{gh * n + m, one}};
        for (Element t = 0; t < n; ++t) {
          if (!th[t].is_zero()) entries.emplace_back(g * n + group->multiply(m, group->inverse(t)), -th[t]);
        }
        for (Element s = 0; s < n; ++s) {
          if (!sg[s].is_zero()) entries.emplace_back(h * n + group->multiply(group->inverse(s), m), -sg[s]);
        }
        system.add_row(std::move(entries));
      }
    }
  }

  std::vector<DerivationTable> basis;
  for (const auto& v : nullspace_basis(system)) {
    std::vector<GroupRingElement> values;
    values.reserve(n);
    for (Element g = 0; g < n; ++g) {
      values.push_back(GroupRingElement::from_coeffs(
          group, ring, Vector(v.begin() + static_cast<std::ptrdiff_t>(g * n),
                              v.begin() + static_cast<std::ptrdiff_t>((g + 1) * n))));
    }
    basis.emplace_back(sigma, tau, std::move(values));
  }
  return basis;
}

std::size_t inner_space_dimension(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau) {
  return sigma.group()->order() - twisted_centralizer_basis(sigma, tau).size();
}

std::vector<std::string> HypothesisStatus::violations() const {
  std::vector<std::string> out;
  if (!sigma_fixes_center) out.emplace_back("sigma does not fix the center");
  if (!tau_fixes_center) out.emplace_back("tau does not fix the center");
  if (char_divides_order) out.emplace_back("characteristic divides the group order");
  return out;
}

HypothesisStatus check_hypotheses(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau) {
  require_same_context(sigma, tau);
  HypothesisStatus status;
  status.sigma_fixes_center = fixes_center(sigma);
  status.tau_fixes_center = fixes_center(tau);
  const std::uint32_t p = sigma.ring().characteristic();
  status.char_divides_order = p != 0 && sigma.group()->order() % p == 0;
  status.sigma_bijective = sigma.is_bijective();
  status.tau_bijective = tau.is_bijective();
  status.sigma_is_lift = sigma.is_lift();
  status.tau_is_lift = tau.is_lift();
  return status;
}

std::string to_string(WitnessStatus status) {
  return status == WitnessStatus::Inner ? "inner" : "not-inner";
}

WitnessReport solve_inner_witness(const DerivationTable& delta) {
  if (!delta.certified()) throw ValidationError("derivation table is not certified");
  const AlgebraEndomorphism& sigma = delta.sigma();
  const AlgebraEndomorphism& tau = delta.tau();

  WitnessReport report;
  report.hypotheses = check_hypotheses(sigma, tau);
  report.centralizer_dimension = twisted_centralizer_basis(sigma, tau).size();

  SparseSystem system = twisted_commutator_system(sigma, tau, &delta.values());
  std::optional<Vector> solution = solve_particular(system);
  if (!solution) return report;

  GroupRingElement x = GroupRingElement::from_coeffs(delta.group(), system.ring(), std::move(*solution));
  report.residual_zero = inner_derivation(x, sigma, tau) == delta;
  report.status = report.residual_zero ? WitnessStatus::Inner : WitnessStatus::NotInner;
  report.witness = std::move(x);
  return report;
}

bool triangular_embedding_check(std::span<const GroupRingElement> values, const AlgebraEndomorphism& sigma,
                                const AlgebraEndomorphism& tau) {
  require_same_context(sigma, tau);
  const GroupPtr& group = sigma.group();
  if (values.size() != group->order()) return false;
  const GroupRingElement zero = GroupRingElement::zero(group, sigma.ring());
  std::vector<BlockMatrix> psi;
  psi.reserve(values.size());
  for (Element g = 0; g < values.size(); ++g) {
    psi.push_back(BlockMatrix{{sigma.image(g), values[g], zero, tau.image(g)}});
  }
  for (Element g = 0; g < values.size(); ++g) {
    for (Element h = 0; h < values.size(); ++h) {
      if (psi[g] * psi[h] != psi[group->multiply(g, h)]) return false;
    }
  }
  return true;
}

bool central_power_check(const DerivationTable& delta, const GroupRingElement& alpha, unsigned n) {
  if (n == 0) throw ValidationError("power rule needs n >= 1");
  if (!is_central(alpha)) throw ValidationError("power rule needs alpha in the center");
  GroupRingElement power = GroupRingElement::one(alpha.group(), alpha.ring());  // alpha^(n-1)
  for (unsigned k = 1; k < n; ++k) power = power * alpha;
  const GroupRingElement lhs = apply_derivation(delta, power * alpha);
  const GroupRingElement rhs = (power * apply_derivation(delta, alpha)).scaled(Scalar::from_int(alpha.ring(), n));
  return lhs == rhs;
}

}  // namespace drvkit

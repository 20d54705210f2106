#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drvkit/group_ring.hpp"

namespace drvkit {

struct CocycleViolation {
  Element g;
  Element h;
  GroupRingElement lhs;  // values[g h]
  GroupRingElement rhs;  // values[g] tau(h) + sigma(g) values[h]
};

struct CocycleVerdict {
  std::vector<std::string> problems;
  std::vector<CocycleViolation> violations;

  bool valid() const { return problems.empty() && violations.empty(); }
};

/// Twisted Leibniz law on every pair of group elements:
/// values[g h] = values[g] tau(h) + sigma(g) values[h].
/// At most `max_reported` failing pairs are collected.
CocycleVerdict validate_cocycle(std::span<const GroupRingElement> values, const AlgebraEndomorphism& sigma,
                                const AlgebraEndomorphism& tau, std::size_t max_reported = 1);

/// The values delta(g) of a (sigma, tau)-derivation on the group basis.
/// Certification runs validate_cocycle once at construction.
class DerivationTable {
 public:
  DerivationTable(AlgebraEndomorphism sigma, AlgebraEndomorphism tau, std::vector<GroupRingElement> values);

  static DerivationTable zero(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau);

  const GroupPtr& group() const { return sigma_.group(); }
  const Ring& ring() const { return sigma_.ring(); }
  const AlgebraEndomorphism& sigma() const { return sigma_; }
  const AlgebraEndomorphism& tau() const { return tau_; }
  const std::vector<GroupRingElement>& values() const { return values_; }
  const GroupRingElement& value(Element g) const { return values_[g]; }
  bool certified() const { return certified_; }

  DerivationTable operator+(const DerivationTable& rhs) const;
  DerivationTable operator-(const DerivationTable& rhs) const;
  DerivationTable scaled(const Scalar& factor) const;

  /// Table equality, coefficient by coefficient.
  friend bool operator==(const DerivationTable& a, const DerivationTable& b) { return a.values_ == b.values_; }

 private:
  AlgebraEndomorphism sigma_;
  AlgebraEndomorphism tau_;
  std::vector<GroupRingElement> values_;
  bool certified_ = false;
};

/// Linear extension: sum_g r_g delta(g). Throws ValidationError for an
/// uncertified table.
GroupRingElement apply_derivation(const DerivationTable& delta, const GroupRingElement& a);

/// delta_x(g) = x tau(g) - sigma(g) x.
DerivationTable inner_derivation(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                                 const AlgebraEndomorphism& tau);

/// Basis of {x : x tau(a) = sigma(a) x for all a}. Orbit indicator sums for
/// lifts, the nullspace of the |G|^2 x |G| system otherwise.
std::vector<GroupRingElement> twisted_centralizer_basis(const AlgebraEndomorphism& sigma,
                                                        const AlgebraEndomorphism& tau);
/// Always the nullspace route.
std::vector<GroupRingElement> twisted_centralizer_basis_by_nullspace(const AlgebraEndomorphism& sigma,
                                                                     const AlgebraEndomorphism& tau);

/// Basis of all (sigma, tau)-derivations, from the homogeneous system in the
/// |G|^2 coefficients of delta. Requires a field and |G| within
/// limits.enumeration_cap.
std::vector<DerivationTable> derivation_space_basis(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau,
                                                    const Limits& limits = {});

/// |G| minus the dimension of the twisted centralizer.
std::size_t inner_space_dimension(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau);

/// Which innerness hypotheses hold for a (sigma, tau) pair.
struct HypothesisStatus {
  bool sigma_fixes_center = true;
  bool tau_fixes_center = true;
  bool char_divides_order = false;
  bool sigma_bijective = true;
  bool tau_bijective = true;
  bool sigma_is_lift = true;
  bool tau_is_lift = true;

  /// Violations of the hypotheses innerness needs over a field: both maps
  /// fix the center and the characteristic does not divide |G|.
  std::vector<std::string> violations() const;
  bool theorem_applies() const { return violations().empty(); }
};

HypothesisStatus check_hypotheses(const AlgebraEndomorphism& sigma, const AlgebraEndomorphism& tau);

enum class WitnessStatus { Inner, NotInner };

std::string to_string(WitnessStatus status);

struct WitnessReport {
  WitnessStatus status = WitnessStatus::NotInner;
  /// Canonical witness: the solution with every free variable zero.
  std::optional<GroupRingElement> witness;
  std::size_t centralizer_dimension = 0;
  std::optional<std::size_t> derivation_dimension;
  HypothesisStatus hypotheses;
  /// inner_derivation(witness) reproduced the input exactly.
  bool residual_zero = false;

  bool hypotheses_violated() const { return !hypotheses.theorem_applies(); }
};

/// Solves x tau(g) - sigma(g) x = delta(g) for all g. Z tables are solved
/// over Q. Hypothesis violations are recorded but never stop the attempt.
WitnessReport solve_inner_witness(const DerivationTable& delta);

/// Psi(g) = [[sigma(g), values[g]], [0, tau(g)]] over RG; true iff
/// Psi(g) Psi(h) = Psi(g h) for every pair.
bool triangular_embedding_check(std::span<const GroupRingElement> values, const AlgebraEndomorphism& sigma,
                                const AlgebraEndomorphism& tau);

/// Delta(alpha^n) == n alpha^(n-1) Delta(alpha). Throws ValidationError
/// unless alpha is central and n >= 1.
bool central_power_check(const DerivationTable& delta, const GroupRingElement& alpha, unsigned n);

}  // namespace drvkit

#pragma once

#include <optional>
#include <string>

#include "drvkit/derivation.hpp"

namespace drvkit {

/// A rational witness x split as x = (x - u) + u with u = sum_g {x_g} g.
struct IntegralWitnessReport {
  GroupRingElement rational_witness;
  /// u: fractional parts, every coefficient in [0, 1).
  GroupRingElement adjustment;
  /// x - u, flagged Z.
  GroupRingElement integral_witness;
  /// {x_g} is constant on every twisted orbit, i.e. u is twisted-central.
  bool orbit_constancy = false;
};

/// Fractional-part adjustment of a rational witness. sigma and tau must be
/// lifted group homomorphisms.
IntegralWitnessReport fractional_adjust(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                                        const AlgebraEndomorphism& tau);

enum class PipelineStatus { Integral, NotInner, AssertionFailed };

std::string to_string(PipelineStatus status);

struct PipelineResult {
  PipelineStatus status = PipelineStatus::NotInner;
  /// Solve over Q of the lifted derivation.
  WitnessReport rational;
  std::optional<IntegralWitnessReport> integral;
  /// inner_derivation(x - u) equals the input table exactly.
  bool reproduces_derivation = false;
  std::string diagnostic;
};

/// Lifts a Z-valued derivation to Q, solves for a witness, and adjusts it by
/// its fractional parts. Throws ValidationError when a value is not
/// integral, the table is uncertified, or sigma/tau are not lifts.
PipelineResult integral_witness_pipeline(const DerivationTable& delta);

}  // namespace drvkit

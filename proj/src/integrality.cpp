#include "drvkit/integrality.hpp"

#include "drvkit/error.hpp"

namespace drvkit {

IntegralWitnessReport fractional_adjust(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                                        const AlgebraEndomorphism& tau) {
  if (!sigma.is_lift() || !tau.is_lift()) {
    throw ValidationError("fractional adjustment needs sigma and tau to be lifted group homomorphisms");
  }
  if (!x.ring().uses_rationals()) throw ValidationError("fractional adjustment needs rational coefficients");
  const GroupRingElement rational = x.with_ring(Ring::rationals());

  std::vector<Scalar> fractions;
  fractions.reserve(x.size());
  for (const auto& c : rational.coeffs()) fractions.push_back(c.fractional_part());
  GroupRingElement u = GroupRingElement::from_coeffs(x.group(), Ring::rationals(), std::move(fractions));

  bool constant = true;
  for (const auto& block : twisted_orbits(*sigma.group_hom(), *tau.group_hom()).blocks) {
    for (Element g : block) constant = constant && u[g] == u[block.front()];
  }
  GroupRingElement integral = (rational - u).with_ring(Ring::integers());
  return {rational, std::move(u), std::move(integral), constant};
}

std::string to_string(PipelineStatus status) {
  switch (status) {
    case PipelineStatus::Integral:
      return "integral";
    case PipelineStatus::NotInner:
      return "not-inner";
    case PipelineStatus::AssertionFailed:
      return "assertion-failed";
  }
  return "?";
}

PipelineResult integral_witness_pipeline(const DerivationTable& delta) {
  if (!delta.ring().uses_rationals()) throw ValidationError("the integral pipeline needs Z coefficients");
  for (const auto& v : delta.values()) {
    if (!v.is_integral()) throw ValidationError("derivation value " + v.to_string() + " is not in ZG");
  }
  if (!delta.sigma().is_lift() || !delta.tau().is_lift()) {
    throw ValidationError("the integral pipeline needs sigma and tau to be lifted group homomorphisms");
  }

  const Ring q = Ring::rationals();
  const DerivationTable lifted(delta.sigma().with_ring(q), delta.tau().with_ring(q), delta.values());

  PipelineResult result;
  result.rational = solve_inner_witness(lifted);
  if (result.rational.status != WitnessStatus::Inner) {
    result.status = PipelineStatus::NotInner;
    result.diagnostic = "no rational witness exists";
    if (result.rational.hypotheses_violated()) {
      for (const auto& v : result.rational.hypotheses.violations()) result.diagnostic += "; " + v;
    }
    return result;
  }

  IntegralWitnessReport adjusted = fractional_adjust(*result.rational.witness, delta.sigma(), delta.tau());
  result.reproduces_derivation =
      adjusted.integral_witness.is_integral() &&
      inner_derivation(adjusted.integral_witness, delta.sigma(), delta.tau()) == delta;
  if (!adjusted.orbit_constancy || !result.reproduces_derivation) {
    result.status = PipelineStatus::AssertionFailed;
    result.diagnostic = !adjusted.orbit_constancy ? "fractional parts are not constant on the twisted orbits"
                                                  : "adjusted witness does not reproduce the derivation";
  } else {
    result.status = PipelineStatus::Integral;
  }
  result.integral = std::move(adjusted);
  return result;
}

}  // namespace drvkit

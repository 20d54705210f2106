#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "drvkit/derivation.hpp"
#include "drvkit/integrality.hpp"

namespace drvkit {

/// Key order is preserved so that reports serialize byte-for-byte
/// identically for identical inputs.
using Json = nlohmann::ordered_json;

// Groups: {"order": n, "table": [[...]], "labels": [...]}
Json group_to_json(const FiniteGroup& group);
GroupPtr group_from_json(const Json& j, const std::string& name = "raw", const Limits& limits = {});

// Homomorphisms: {"images": [...]}
Json hom_to_json(const GroupHomomorphism& phi);
GroupHomomorphism hom_from_json(const Json& j, const GroupPtr& group);

// Rings: "Q" | "Z" | {"Fp": p}
Json ring_to_json(const Ring& ring);
Ring ring_from_json(const Json& j);

// Elements: {"ring": ..., "coeffs": ["a/b", ...]}. A bare coefficient
// array is also accepted and read over `fallback`.
Json element_to_json(const GroupRingElement& x);
GroupRingElement element_from_json(const Json& j, const GroupPtr& group, const Ring& fallback);

// Endomorphisms: {"kind": "group_hom", "images": [k, ...]} or
// {"kind": "algebra", "images": [element, ...]}; a plain {"images": [k...]}
// reads as a group homomorphism.
Json endomorphism_to_json(const AlgebraEndomorphism& phi);
AlgebraEndomorphism endomorphism_from_json(const Json& j, const GroupPtr& group, const Ring& ring);

// Derivations: {"values": [element, ...]}
Json derivation_to_json(const DerivationTable& delta);
std::vector<GroupRingElement> derivation_values_from_json(const Json& j, const GroupPtr& group, const Ring& ring);

Json partition_to_json(const Partition& partition);
Json hypotheses_to_json(const HypothesisStatus& status);
Json cocycle_verdict_to_json(const CocycleVerdict& verdict);
Json witness_report_to_json(const WitnessReport& report);
Json integral_report_to_json(const IntegralWitnessReport& report);
Json pipeline_to_json(const PipelineResult& result);

/// Canonical text form used for every report: two-space indent, trailing
/// newline.
std::string dump_canonical(const Json& j);

}  // namespace drvkit

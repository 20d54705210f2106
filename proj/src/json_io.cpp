#include "drvkit/json_io.hpp"

#include "drvkit/error.hpp"

namespace drvkit {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw ValidationError("malformed JSON: " + what); }

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing key '") + key + "'");
  return j.at(key);
}

Scalar scalar_from_json(const Json& j, const Ring& ring) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), ring);
  if (j.is_number_integer()) return Scalar::from_int(ring, j.get<long>());
  schema_error("coefficients must be strings \"a/b\" or integers");
}

}  // namespace

Json group_to_json(const FiniteGroup& group) {
  Json j;
  j["order"] = group.order();
  j["table"] = group.table();
  j["labels"] = group.labels();
  return j;
}

GroupPtr group_from_json(const Json& j, const std::string& name, const Limits& limits) {
  const Json& table_json = require(j, "table");
  if (!table_json.is_array()) schema_error("'table' must be an array of arrays");
  std::vector<std::vector<long long>> table;
  for (const auto& row : table_json) {
    if (!row.is_array()) schema_error("'table' must be an array of arrays");
    std::vector<long long> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) schema_error("table entries must be integers");
      r.push_back(v.get<long long>());
    }
    table.push_back(std::move(r));
  }
  if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
    throw ValidationError("'order' is " + std::to_string(j.at("order").get<std::size_t>()) + " but the table has " +
                          std::to_string(table.size()) + " rows");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  std::string group_name = j.contains("name") ? j.at("name").get<std::string>() : name;
  return FiniteGroup::from_table(table, std::move(labels), std::move(group_name), limits);
}

Json hom_to_json(const GroupHomomorphism& phi) {
  Json j;
  j["images"] = phi.images();
  return j;
}

GroupHomomorphism hom_from_json(const Json& j, const GroupPtr& group) {
  const Json& images = require(j, "images");
  std::vector<Element> out;
  for (const auto& v : images) {
    if (!v.is_number_integer() || v.get<long long>() < 0) schema_error("homomorphism images must be element indices");
    out.push_back(v.get<Element>());
  }
  return GroupHomomorphism(group, group, std::move(out));
}

Json ring_to_json(const Ring& ring) {
  if (ring.kind() == RingKind::Prime) return Json{{"Fp", ring.modulus()}};
  return ring.to_string();
}

Ring ring_from_json(const Json& j) {
  if (j.is_string()) return Ring::parse(j.get<std::string>());
  if (j.is_object() && j.contains("Fp") && j.at("Fp").is_number_integer()) {
    return Ring::prime_field(j.at("Fp").get<std::uint64_t>());
  }
  schema_error("ring must be \"Q\", \"Z\" or {\"Fp\": p}");
}

Json element_to_json(const GroupRingElement& x) {
  Json j;
  j["ring"] = ring_to_json(x.ring());
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.to_string());
  j["coeffs"] = std::move(coeffs);
  return j;
}

GroupRingElement element_from_json(const Json& j, const GroupPtr& group, const Ring& fallback) {
  Ring ring = fallback;
  const Json* coeffs = &j;
  if (j.is_object()) {
    if (j.contains("ring")) ring = ring_from_json(j.at("ring"));
    coeffs = &require(j, "coeffs");
  }
  if (!coeffs->is_array()) schema_error("element coefficients must be an array");
  if (coeffs->size() != group->order()) {
    throw ValidationError("element has " + std::to_string(coeffs->size()) + " coefficients, group order is " +
                          std::to_string(group->order()));
  }
  if (!ring.compatible(fallback)) {
    throw ValidationError("element over " + ring.to_string() + " where " + fallback.to_string() + " was expected");
  }
  std::vector<Scalar> values;
  for (const auto& c : *coeffs) values.push_back(scalar_from_json(c, ring));
  GroupRingElement x = GroupRingElement::from_coeffs(group, ring, std::move(values));
  return ring == fallback ? x : x.with_ring(fallback);
}

Json endomorphism_to_json(const AlgebraEndomorphism& phi) {
  Json j;
  if (phi.is_lift()) {
    j["kind"] = "group_hom";
    j["images"] = phi.group_hom()->images();
    return j;
  }
  j["kind"] = "algebra";
  Json images = Json::array();
  for (const auto& img : phi.images()) images.push_back(element_to_json(img));
  j["images"] = std::move(images);
  return j;
}

AlgebraEndomorphism endomorphism_from_json(const Json& j, const GroupPtr& group, const Ring& ring) {
  const std::string kind = j.is_object() && j.contains("kind") ? j.at("kind").get<std::string>() : "group_hom";
  if (kind == "group_hom") return AlgebraEndomorphism::lift(hom_from_json(j, group), ring);
  if (kind != "algebra") schema_error("endomorphism kind must be \"group_hom\" or \"algebra\"");
  const Json& images = require(j, "images");
  if (!images.is_array()) schema_error("'images' must be an array");
  std::vector<GroupRingElement> out;
  for (const auto& img : images) out.push_back(element_from_json(img, group, ring));
  if (out.size() != group->order()) {
    throw ValidationError("expected " + std::to_string(group->order()) + " images, got " + std::to_string(out.size()));
  }
  return AlgebraEndomorphism::from_images(std::move(out));
}

Json derivation_to_json(const DerivationTable& delta) {
  Json values = Json::array();
  for (const auto& v : delta.values()) values.push_back(element_to_json(v));
  Json j;
  j["values"] = std::move(values);
  return j;
}

std::vector<GroupRingElement> derivation_values_from_json(const Json& j, const GroupPtr& group, const Ring& ring) {
  const Json& values = require(j, "values");
  if (!values.is_array()) schema_error("'values' must be an array");
  if (values.size() != group->order()) {
    throw ValidationError("derivation has " + std::to_string(values.size()) + " values, group order is " +
                          std::to_string(group->order()));
  }
  std::vector<GroupRingElement> out;
  for (const auto& v : values) out.push_back(element_from_json(v, group, ring));
  return out;
}

Json partition_to_json(const Partition& partition) { return Json(partition.blocks); }

Json hypotheses_to_json(const HypothesisStatus& status) {
  Json j;
  j["sigma_fixes_center"] = status.sigma_fixes_center;
  j["tau_fixes_center"] = status.tau_fixes_center;
  j["char_divides_order"] = status.char_divides_order;
  j["sigma_bijective"] = status.sigma_bijective;
  j["tau_bijective"] = status.tau_bijective;
  j["sigma_is_group_hom"] = status.sigma_is_lift;
  j["tau_is_group_hom"] = status.tau_is_lift;
  j["theorem_applies"] = status.theorem_applies();
  j["hypotheses_violated"] = status.violations();
  return j;
}

Json cocycle_verdict_to_json(const CocycleVerdict& verdict) {
  Json j;
  j["valid"] = verdict.valid();
  j["problems"] = verdict.problems;
  Json violations = Json::array();
  for (const auto& v : verdict.violations) {
    Json item;
    item["g"] = v.g;
    item["h"] = v.h;
    item["lhs"] = element_to_json(v.lhs);
    item["rhs"] = element_to_json(v.rhs);
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j;
}

Json witness_report_to_json(const WitnessReport& report) {
  Json j;
  j["status"] = to_string(report.status);
  j["witness"] = report.witness ? element_to_json(*report.witness) : Json(nullptr);
  j["residual_zero"] = report.residual_zero;
  j["centralizer_dimension"] = report.centralizer_dimension;
  j["derivation_dimension"] = report.derivation_dimension ? Json(*report.derivation_dimension) : Json(nullptr);
  j["hypotheses_violated"] = report.hypotheses.violations();
  j["hypotheses"] = hypotheses_to_json(report.hypotheses);
  return j;
}

Json integral_report_to_json(const IntegralWitnessReport& report) {
  Json j;
  j["rational_witness"] = element_to_json(report.rational_witness);
  j["adjustment"] = element_to_json(report.adjustment);
  j["integral_witness"] = element_to_json(report.integral_witness);
  j["orbit_constancy"] = report.orbit_constancy;
  return j;
}

Json pipeline_to_json(const PipelineResult& result) {
  Json j;
  j["status"] = to_string(result.status);
  j["rational"] = witness_report_to_json(result.rational);
  j["integral"] = result.integral ? integral_report_to_json(*result.integral) : Json(nullptr);
  j["reproduces_derivation"] = result.reproduces_derivation;
  j["diagnostic"] = result.diagnostic;
  return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace drvkit

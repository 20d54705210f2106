#include "drvkit/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "drvkit/acceptance.hpp"
#include "drvkit/error.hpp"
#include "drvkit/json_io.hpp"
#include "drvkit/sampling.hpp"

namespace drvkit {

namespace {

namespace fs = std::filesystem;
using Endo = AlgebraEndomorphism;

class IoError : public Error {
 public:
  using Error::Error;
};

// Raised after a report has been produced that signals an internal failure.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

// Validation failure carrying a structured payload for the diagnostic report.
class DetailedValidation : public ValidationError {
 public:
  DetailedValidation(const std::string& what, Json detail) : ValidationError(what), detail_(std::move(detail)) {}
  const Json& detail() const { return detail_; }

 private:
  Json detail_;
};

struct Options {
  std::string group = "C1";
  std::string sigma = "id";
  std::string tau = "id";
  std::optional<std::string> ring;
  std::optional<std::string> derivation;
  std::uint64_t seed = 7;
  std::optional<std::string> out;
  std::optional<std::string> golden;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  const std::string text = read_text(path);
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("malformed JSON in '" + path + "'");
  return j;
}

bool looks_like_file(const std::string& arg) {
  return arg.find('/') != std::string::npos || arg.ends_with(".json") || fs::exists(arg);
}

struct Context {
  GroupPtr group;
  Ring ring = Ring::rationals();
  Endo sigma;
  Endo tau;
  Json sigma_descriptor;
  Json tau_descriptor;
};

Endo load_map(const std::string& arg, const GroupPtr& group, const Ring& ring, Json& descriptor) {
  if (arg == "id") {
    descriptor = "id";
    return Endo::identity(group, ring);
  }
  if (arg.starts_with("inner:")) {
    const std::string index = arg.substr(6);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(index.data(), index.data() + index.size(), k);
    if (ec != std::errc() || ptr != index.data() + index.size() || index.empty()) {
      throw ValidationError("'" + arg + "' needs an element index");
    }
    if (k >= group->order()) {
      throw ValidationError("element index " + index + " out of range for order " + std::to_string(group->order()));
    }
    descriptor = arg;
    return Endo::lift(inner_automorphism(group, k), ring);
  }
  if (!looks_like_file(arg)) throw ValidationError("map must be 'id', 'inner:<k>' or a JSON file, got '" + arg + "'");
  Endo phi = endomorphism_from_json(read_json(arg), group, ring);
  const EndomorphismVerdict verdict = validate_endomorphism(phi);
  if (!verdict.violations.empty()) throw ValidationError("invalid endomorphism: " + verdict.violations.front());
  descriptor = endomorphism_to_json(phi);
  return phi;
}

GroupPtr load_group(const std::string& arg, const Limits& limits) {
  if (looks_like_file(arg)) return group_from_json(read_json(arg), fs::path(arg).stem().string(), limits);
  return build_group(arg, limits);
}

Context load_context(const Options& opts, const Ring& default_ring) {
  const Limits limits = Limits::from_environment();
  GroupPtr group = load_group(opts.group, limits);
  const Ring ring = opts.ring ? Ring::parse(*opts.ring) : default_ring;
  Json sd, td;
  Endo sigma = load_map(opts.sigma, group, ring, sd);
  Endo tau = load_map(opts.tau, group, ring, td);
  return Context{group, ring, std::move(sigma), std::move(tau), std::move(sd), std::move(td)};
}

Json context_json(const Context& ctx) {
  Json j;
  j["group"] = Json{{"name", ctx.group->name()}, {"order", ctx.group->order()}};
  j["ring"] = ring_to_json(ctx.ring);
  j["sigma"] = ctx.sigma_descriptor;
  j["tau"] = ctx.tau_descriptor;
  return j;
}

Json report_head(const std::string& command) {
  Json j;
  j["tool"] = "drvkit";
  j["version"] = DRVKIT_VERSION;
  j["command"] = command;
  return j;
}

Json finish(const std::string& command, const Context& ctx, Json result) {
  Json j = report_head(command);
  j["context"] = context_json(ctx);
  j["hypotheses"] = hypotheses_to_json(check_hypotheses(ctx.sigma, ctx.tau));
  j["result"] = std::move(result);
  return j;
}

Json maybe_derivation_dimension(const Context& ctx) {
  if (!ctx.ring.is_field() || ctx.group->order() > Limits{}.enumeration_cap) return nullptr;
  return derivation_space_basis(ctx.sigma, ctx.tau).size();
}

Json cmd_group(const Options& opts) {
  const Context ctx = load_context(opts, Ring::rationals());
  Json result = group_to_json(*ctx.group);
  result["name"] = ctx.group->name();
  result["is_abelian"] = ctx.group->is_abelian();
  return finish("group", ctx, std::move(result));
}

Json map_summary(const Endo& phi) {
  Json j;
  j["group_hom"] = phi.is_lift();
  j["bijective"] = phi.is_bijective();
  j["fixes_center"] = fixes_center(phi);
  j["map"] = endomorphism_to_json(phi);
  return j;
}

Json cmd_check_hom(const Options& opts) {
  const Context ctx = load_context(opts, Ring::rationals());
  Json result;
  result["valid"] = true;
  result["sigma"] = map_summary(ctx.sigma);
  result["tau"] = map_summary(ctx.tau);
  return finish("check-hom", ctx, std::move(result));
}

Json cmd_center(const Options& opts) {
  const Context ctx = load_context(opts, Ring::rationals());
  Json result;
  result["conjugacy_classes"] = partition_to_json(conjugacy_classes(*ctx.group));
  Json basis = Json::array();
  for (const auto& c : class_sum_center_basis(ctx.group, ctx.ring)) basis.push_back(element_to_json(c));
  result["dimension"] = basis.size();
  result["class_sums"] = std::move(basis);
  return finish("center", ctx, std::move(result));
}

Json cmd_orbits(const Options& opts) {
  const Context ctx = load_context(opts, Ring::rationals());
  if (!ctx.sigma.is_lift() || !ctx.tau.is_lift()) {
    throw ValidationError("twisted orbits need sigma and tau induced by group homomorphisms");
  }
  const Partition orbits = twisted_orbits(*ctx.sigma.group_hom(), *ctx.tau.group_hom());
  Json result;
  result["orbit_count"] = orbits.size();
  result["orbits"] = partition_to_json(orbits);
  result["inner_dimension"] = ctx.group->order() - orbits.size();
  return finish("orbits", ctx, std::move(result));
}

Json cmd_basis(const Options& opts) {
  const Context ctx = load_context(opts, Ring::rationals());
  const auto basis = derivation_space_basis(ctx.sigma, ctx.tau);
  Json tables = Json::array();
  for (const auto& delta : basis) tables.push_back(derivation_to_json(delta));
  Json result;
  result["derivation_dimension"] = basis.size();
  result["basis"] = std::move(tables);
  return finish("basis", ctx, std::move(result));
}

Json cmd_dimension(const Options& opts) {
  const Context ctx = load_context(opts, Ring::rationals());
  Json result;
  result["derivation_dimension"] = derivation_space_basis(ctx.sigma, ctx.tau).size();
  result["inner_dimension"] = inner_space_dimension(ctx.sigma, ctx.tau);
  result["centralizer_dimension"] = twisted_centralizer_basis(ctx.sigma, ctx.tau).size();
  if (ctx.sigma.is_lift() && ctx.tau.is_lift()) {
    result["orbit_count"] = twisted_orbits(*ctx.sigma.group_hom(), *ctx.tau.group_hom()).size();
  } else {
    result["orbit_count"] = nullptr;
  }
  return finish("dimension", ctx, std::move(result));
}

// Loads --derivation, or builds a seeded random inner derivation when absent.
DerivationTable load_derivation(const Options& opts, const Context& ctx, Json& provenance) {
  if (opts.derivation) {
    auto values = derivation_values_from_json(read_json(*opts.derivation), ctx.group, ctx.ring);
    DerivationTable delta(ctx.sigma, ctx.tau, values);
    if (!delta.certified()) {
      const CocycleVerdict verdict = validate_cocycle(values, ctx.sigma, ctx.tau);
      throw DetailedValidation("derivation table is not certified", cocycle_verdict_to_json(verdict));
    }
    provenance = Json{{"source", "file"}};
    return delta;
  }
  SeededRng rng(opts.seed);
  const GroupRingElement x = random_element(ctx.group, ctx.ring, rng, -9, 9);
  provenance = Json{{"source", "random-inner"}, {"seed", opts.seed}, {"x", element_to_json(x)}};
  return inner_derivation(x, ctx.sigma, ctx.tau);
}

Json cmd_witness(const Options& opts) {
  const Context ctx = load_context(opts, Ring::rationals());
  Json provenance;
  const DerivationTable delta = load_derivation(opts, ctx, provenance);
  WitnessReport report = solve_inner_witness(delta);
  if (const Json dim = maybe_derivation_dimension(ctx); !dim.is_null()) report.derivation_dimension = dim.get<std::size_t>();
  if (report.status == WitnessStatus::Inner && !report.residual_zero) {
    throw AssertionFailure("witness does not reproduce the derivation");
  }
  Json result = witness_report_to_json(report);
  result["derivation"] = std::move(provenance);
  return finish("witness", ctx, std::move(result));
}

Json cmd_integralize(const Options& opts) {
  const Context ctx = load_context(opts, Ring::integers());
  if (ctx.ring.kind() != RingKind::Integer) throw ValidationError("integralize works over Z, got " + ctx.ring.to_string());
  Json provenance;
  std::optional<DerivationTable> delta;
  if (opts.derivation) {
    delta.emplace(load_derivation(opts, ctx, provenance));
  } else {
    // x0 integral plus a twisted-central c with small denominators, so that
    // the rational witness has genuine fractional parts.
    SeededRng rng(opts.seed);
    const Ring q = Ring::rationals();
    const GroupRingElement x0 = random_element(ctx.group, ctx.ring, rng, -9, 9);
    const std::array<long, 3> dens{2, 3, 5};
    const GroupRingElement c = random_twisted_central(ctx.sigma, ctx.tau, rng, dens);
    const DerivationTable rational = inner_derivation(x0.with_ring(q) + c, ctx.sigma.with_ring(q), ctx.tau.with_ring(q));
    std::vector<GroupRingElement> values;
    for (const auto& v : rational.values()) values.push_back(v.with_ring(ctx.ring));
    delta.emplace(ctx.sigma, ctx.tau, std::move(values));
    provenance = Json{{"source", "random-inner"}, {"seed", opts.seed}, {"x0", element_to_json(x0)}, {"c", element_to_json(c)}};
    provenance["planted"] = integral_report_to_json(fractional_adjust(x0.with_ring(q) + c, ctx.sigma, ctx.tau));
  }
  const PipelineResult pipeline = integral_witness_pipeline(*delta);
  Json result = pipeline_to_json(pipeline);
  result["derivation"] = std::move(provenance);
  Json report = finish("integralize", ctx, std::move(result));
  if (pipeline.status == PipelineStatus::AssertionFailed) {
    throw AssertionFailure(dump_canonical(report));
  }
  return report;
}

int cmd_selftest(const Options& opts, std::ostream& out) {
  AcceptanceOptions acceptance;
  acceptance.seed = opts.seed;
  acceptance.golden_dir = opts.golden;
  bool all = true;
  std::size_t count = 0;
  run_acceptance(acceptance, [&](const CriterionResult& r) {
    out << format_result_line(r, false) << "\n" << std::flush;
    all = all && r.passed;
    ++count;
  });
  out << (all ? "all " + std::to_string(count) + " criteria passed" : "FAILED") << "\n";
  return all ? kExitOk : kExitValidation;
}

void emit(const Options& opts, const std::string& text, std::ostream& out) {
  if (!opts.out) {
    out << text;
    return;
  }
  std::ofstream file(*opts.out, std::ios::binary);
  if (!file || !(file << text)) throw IoError("cannot write '" + *opts.out + "'");
}

Json diagnostic(const std::string& command, const std::string& kind, const std::string& message) {
  Json j = report_head(command);
  j["error"] = Json{{"kind", kind}, {"message", message}};
  return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (sigma, tau)-derivations of finite group rings", "drvkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DRVKIT_VERSION);
  Options opts;

  struct Command {
    const char* name;
    const char* help;
    bool maps;
    bool derivation;
  };
  const std::vector<Command> commands{
      {"group", "Emit a group's Cayley table", false, false},
      {"check-hom", "Validate sigma and tau", true, false},
      {"center", "Conjugacy classes and class-sum basis of the center", true, false},
      {"orbits", "Twisted orbits g -> sigma(h)^-1 g tau(h)", true, false},
      {"basis", "Basis of the derivation space", true, false},
      {"dimension", "Derivation and inner-derivation dimensions", true, false},
      {"witness", "Solve for an inner witness", true, true},
      {"integralize", "Integral witness for a Z-valued derivation", true, true},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--group", opts.group, "Family name (C4, D5, S3, A4, Q8, C2xC4) or JSON file");
    sub->add_option("--ring", opts.ring, "Q, Z or Fp:p");
    sub->add_option("--out", opts.out, "Write the report to a file");
    if (c.maps) {
      sub->add_option("--sigma", opts.sigma, "id, inner:<k> or JSON file");
      sub->add_option("--tau", opts.tau, "id, inner:<k> or JSON file");
    }
    if (c.derivation) {
      sub->add_option("--derivation", opts.derivation, "JSON file with the values delta(g)");
      sub->add_option("--seed", opts.seed, "Seed for the generated derivation");
    }
  }
  CLI::App* selftest = app.add_subcommand("selftest", "Run the acceptance catalog");
  selftest->add_option("--seed", opts.seed, "Seed for the randomized criteria");
  selftest->add_option("--golden", opts.golden, "Directory with manifest.json and golden reports");

  std::vector<std::string> storage{"drvkit"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (e.get_name() == "CallForVersion" ? std::string(DRVKIT_VERSION) + "\n" : app.help());
      return kExitOk;
    }
    err << "drvkit: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "selftest") return cmd_selftest(opts, out);
    Json report;
    if (command == "group") report = cmd_group(opts);
    else if (command == "check-hom") report = cmd_check_hom(opts);
    else if (command == "center") report = cmd_center(opts);
    else if (command == "orbits") report = cmd_orbits(opts);
    else if (command == "basis") report = cmd_basis(opts);
    else if (command == "dimension") report = cmd_dimension(opts);
    else if (command == "witness") report = cmd_witness(opts);
    else report = cmd_integralize(opts);
    emit(opts, dump_canonical(report), out);
    return kExitOk;
  } catch (const IoError& e) {
    err << "drvkit: " << e.what() << "\n";
    return kExitIo;
  } catch (const AssertionFailure& e) {
    err << "drvkit: internal assertion failed\n";
    out << dump_canonical(diagnostic(command, "assertion", e.what()));
    return kExitAssertion;
  } catch (const DetailedValidation& e) {
    err << "drvkit: " << e.what() << "\n";
    Json diag = diagnostic(command, "validation", e.what());
    diag["error"]["detail"] = e.detail();
    out << dump_canonical(diag);
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "drvkit: " << e.what() << "\n";
    out << dump_canonical(diagnostic(command, "validation", e.what()));
    return kExitValidation;
  } catch (const CapExceeded& e) {
    err << "drvkit: " << e.what() << "\n";
    out << dump_canonical(diagnostic(command, "cap-exceeded", e.what()));
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "drvkit: internal error: " << e.what() << "\n";
    out << dump_canonical(diagnostic(command, "assertion", e.what()));
    return kExitAssertion;
  }
}

}  // namespace drvkit

#include "drvkit/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "drvkit/cli.hpp"
#include "drvkit/error.hpp"
#include "drvkit/integrality.hpp"
#include "drvkit/json_io.hpp"
#include "drvkit/linalg.hpp"
#include "drvkit/sampling.hpp"

namespace drvkit {

namespace {

using Endo = AlgebraEndomorphism;

// Counts checks and keeps the first failure message.
class Tally {
 public:
  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_failure_.empty()) first_failure_ = describe();
  }

  std::size_t checks() const { return checks_; }
  bool passed() const { return failures_ == 0; }

  std::string summary(const std::string& prefix) const {
    std::string s = prefix + std::to_string(checks_) + " checks";
    if (failures_ > 0) s += ", " + std::to_string(failures_) + " failed; first: " + first_failure_;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::string where(const GroupPtr& g, const Ring& ring, const GroupHomomorphism& s, const GroupHomomorphism& t) {
  std::string sigma, tau;
  for (Element x : s.images()) sigma += (sigma.empty() ? "" : ",") + std::to_string(x);
  for (Element x : t.images()) tau += (tau.empty() ? "" : ",") + std::to_string(x);
  return g->name() + " over " + ring.to_string() + " sigma=[" + sigma + "] tau=[" + tau + "]";
}

std::vector<Ring> catalog_rings(const GroupPtr& group) {
  std::vector<Ring> rings{Ring::rationals()};
  for (std::uint32_t p : coprime_primes(group->order())) rings.push_back(Ring::prime_field(p));
  return rings;
}

// Fields whose characteristic does not divide |G|.
CriterionResult field_case(std::uint64_t seed) {
  CriterionResult r{"AC1", "Field case: derivation dimension equals inner dimension, all inner", false, false, "", 0, 300};
  Tally tally;
  SeededRng rng(seed);
  std::size_t configurations = 0;
  std::size_t tables = 0;
  for (const auto& name : acceptance_group_catalog()) {
    const GroupPtr group = build_group(name);
    const auto autos = inner_automorphisms(group);
    const bool enumerate = group->order() <= Limits{}.enumeration_cap;
    for (const Ring& ring : catalog_rings(group)) {
      for (const auto& s : autos) {
        for (const auto& t : autos) {
          ++configurations;
          const Endo sigma = Endo::lift(s, ring);
          const Endo tau = Endo::lift(t, ring);
          const std::size_t orbits = twisted_orbits(s, t).size();
          const std::size_t inner = inner_space_dimension(sigma, tau);
          tally.expect(inner == group->order() - orbits,
                       [&] { return "inner dimension != |G| - #orbits for " + where(group, ring, s, t); });
          if (enumerate) {
            const auto basis = derivation_space_basis(sigma, tau);
            tally.expect(basis.size() == inner,
                         [&] { return "derivation dimension " + std::to_string(basis.size()) + " != inner dimension " +
                                      std::to_string(inner) + " for " + where(group, ring, s, t); });
            for (const auto& delta : basis) {
              ++tables;
              const WitnessReport report = solve_inner_witness(delta);
              tally.expect(report.status == WitnessStatus::Inner && report.residual_zero && !report.hypotheses_violated(),
                           [&] { return "basis derivation not inner for " + where(group, ring, s, t); });
            }
          } else {
            const GroupRingElement x0 = random_element(group, ring, rng, -9, 9);
            const DerivationTable delta = inner_derivation(x0, sigma, tau);
            ++tables;
            const WitnessReport report = solve_inner_witness(delta);
            tally.expect(report.status == WitnessStatus::Inner && report.residual_zero &&
                             is_twisted_central(*report.witness - x0, sigma, tau),
                         [&] { return "random inner derivation not recovered for " + where(group, ring, s, t); });
          }
        }
      }
    }
  }
  r.passed = tally.passed();
  r.detail = tally.summary(std::to_string(configurations) + " configurations, " + std::to_string(tables) + " tables, ");
  return r;
}

// F_2[C2]: Maschke fails and an outer derivation exists.
CriterionResult maschke_counterexample() {
  CriterionResult r{"AC2", "Maschke counterexample over F_2[C2]", false, false, "", 0, 1};
  Tally tally;
  const GroupPtr c2 = cyclic_group(2);
  const Ring f2 = Ring::prime_field(2);
  const Endo id = Endo::identity(c2, f2);
  const auto basis = derivation_space_basis(id, id);
  tally.expect(basis.size() == 2, [&] { return "derivation dimension " + std::to_string(basis.size()) + " != 2"; });
  const std::size_t inner = inner_space_dimension(id, id);
  tally.expect(inner == 0, [&] { return "inner dimension " + std::to_string(inner) + " != 0"; });

  std::vector<GroupRingElement> values{GroupRingElement::zero(c2, f2),
                                       GroupRingElement::one(c2, f2) + GroupRingElement::basis(c2, f2, 1)};
  const DerivationTable delta(id, id, values);
  tally.expect(delta.certified(), [] { return "delta(g) = 1 + g is not certified"; });
  const WitnessReport report = solve_inner_witness(delta);
  tally.expect(report.status == WitnessStatus::NotInner, [] { return "delta(g) = 1 + g reported inner"; });
  tally.expect(report.hypotheses.char_divides_order && report.hypotheses_violated(),
               [] { return "characteristic 2 dividing |G| not flagged"; });
  r.passed = tally.passed();
  r.detail = tally.summary("");
  return r;
}

// Z-valued derivations via the fractional-part adjustment.
CriterionResult integral_case(std::uint64_t seed) {
  CriterionResult r{"AC3", "Integral case: integral witnesses via fractional parts", false, false, "", 0, 120};
  Tally tally;
  SeededRng rng(seed + 3);
  const std::array<long, 3> denominators{2, 3, 5};
  const Ring z = Ring::integers();
  const Ring q = Ring::rationals();
  std::size_t trials = 0;
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    const GroupPtr group = build_group(name);
    for (int trial = 0; trial < 100; ++trial) {
      ++trials;
      const auto s = inner_automorphism(group, rng.index(group->order()));
      const auto t = inner_automorphism(group, rng.index(group->order()));
      const Endo sigma = Endo::lift(s, z);
      const Endo tau = Endo::lift(t, z);
      const GroupRingElement x0 = random_element(group, z, rng, -9, 9);
      const GroupRingElement c = random_twisted_central(sigma, tau, rng, denominators);
      const DerivationTable rational_delta = inner_derivation(x0.with_ring(q) + c, sigma.with_ring(q), tau.with_ring(q));
      std::vector<GroupRingElement> values;
      bool integral = true;
      for (const auto& v : rational_delta.values()) {
        integral = integral && v.is_integral();
        values.push_back(v.with_ring(z));
      }
      const auto label = [&] { return std::string(name) + " trial " + std::to_string(trial); };
      tally.expect(integral, [&] { return label() + ": delta_{x0 + c} not Z-valued"; });
      if (!integral) continue;
      const DerivationTable delta(sigma, tau, std::move(values));
      const PipelineResult result = integral_witness_pipeline(delta);
      const bool ok = result.status == PipelineStatus::Integral && result.integral &&
                      result.integral->orbit_constancy && result.integral->integral_witness.is_integral() &&
                      inner_derivation(result.integral->integral_witness, sigma, tau) == delta;
      tally.expect(ok, [&] { return label() + ": pipeline status " + to_string(result.status); });
      // The planted witness x0 + c has genuine fractional parts.
      const IntegralWitnessReport planted = fractional_adjust(x0.with_ring(q) + c, sigma, tau);
      tally.expect(planted.orbit_constancy && inner_derivation(planted.integral_witness, sigma, tau) == delta,
                   [&] { return label() + ": adjusting x0 + c does not give an integral witness"; });
    }
  }
  r.passed = tally.passed();
  r.detail = tally.summary(std::to_string(trials) + " trials, ");
  return r;
}

struct PairSample {
  GroupHomomorphism s;
  GroupHomomorphism t;
};

// Random combination of an enumerated basis, or an inner derivation when
// enumeration is out of reach.
DerivationTable sample_derivation(const Endo& sigma, const Endo& tau, const std::vector<DerivationTable>* basis,
                                  SeededRng& rng) {
  if (basis != nullptr && !basis->empty()) {
    DerivationTable delta = DerivationTable::zero(sigma, tau);
    for (const auto& b : *basis) delta = delta + b.scaled(Scalar::from_int(sigma.ring(), rng.uniform(-3, 3)));
    return delta;
  }
  return inner_derivation(random_element(sigma.group(), sigma.ring(), rng, -5, 5), sigma, tau);
}

CriterionResult property_suites(std::uint64_t seed) {
  CriterionResult r{"AC4", "Property suites over the group catalog",
                    false, false, "", 0, 120};
  Tally tally;
  SeededRng rng(seed + 4);
  const Ring q = Ring::rationals();
  constexpr std::size_t kSamples = 200;

  for (const auto& name : acceptance_group_catalog()) {
    const GroupPtr group = build_group(name);
    const std::size_t n = group->order();
    const auto autos = inner_automorphisms(group);
    const auto class_sums = class_sum_center_basis(group, q);
    const GroupRingElement one = GroupRingElement::one(group, q);
    const bool exhaustive = n <= 8;
    const bool enumerable = n <= Limits{}.enumeration_cap;

    auto check_derivation = [&](const DerivationTable& delta, const GroupRingElement& a, const GroupRingElement& b,
                                bool all_basis_pairs) {
      const Endo& sigma = delta.sigma();
      const Endo& tau = delta.tau();
      tally.expect(apply_derivation(delta, one).is_zero(), [&] { return name + ": delta(1) != 0"; });
      auto leibniz = [&](const GroupRingElement& x, const GroupRingElement& y) {
        return apply_derivation(delta, x * y) ==
               apply_derivation(delta, x) * tau.apply(y) + sigma.apply(x) * apply_derivation(delta, y);
      };
      tally.expect(leibniz(a, b), [&] { return name + ": Leibniz law fails on random elements"; });
      if (all_basis_pairs) {
        bool ok = true;
        for (Element g = 0; g < n && ok; ++g) {
          for (Element h = 0; h < n && ok; ++h) {
            ok = leibniz(GroupRingElement::basis(group, q, g), GroupRingElement::basis(group, q, h));
          }
        }
        tally.expect(ok, [&] { return name + ": Leibniz law fails on group elements"; });
      }
      for (const auto& alpha : class_sums) {
        for (unsigned k = 1; k <= 5; ++k) {
          tally.expect(central_power_check(delta, alpha, k),
                       [&] { return name + ": power rule fails for n = " + std::to_string(k); });
        }
      }
    };

    auto check_inner_pair = [&](const Endo& sigma, const Endo& tau, const GroupRingElement& x,
                                const GroupRingElement& y) {
      const DerivationTable dx = inner_derivation(x, sigma, tau);
      const DerivationTable dy = inner_derivation(y, sigma, tau);
      tally.expect(inner_derivation(x + y, sigma, tau) == dx + dy,
                   [&] { return name + ": delta_{x+y} != delta_x + delta_y"; });
      tally.expect((dx == dy) == is_twisted_central(x - y, sigma, tau),
                   [&] { return name + ": delta_x = delta_y disagrees with twisted centrality of x - y"; });
    };

    if (exhaustive) {
      for (const auto& s : autos) {
        for (const auto& t : autos) {
          const Endo sigma = Endo::lift(s, q);
          const Endo tau = Endo::lift(t, q);
          for (const auto& delta : derivation_space_basis(sigma, tau)) {
            check_derivation(delta, random_element(group, q, rng, -3, 3), random_element(group, q, rng, -3, 3), true);
          }
          const auto centralizer = twisted_centralizer_basis(sigma, tau);
          for (Element g = 0; g < n; ++g) {
            const GroupRingElement x = GroupRingElement::basis(group, q, g);
            for (Element h = 0; h < n; ++h) check_inner_pair(sigma, tau, x, GroupRingElement::basis(group, q, h));
            for (const auto& c : centralizer) check_inner_pair(sigma, tau, x, x + c);
          }
        }
      }
    } else {
      std::vector<std::vector<std::vector<DerivationTable>>> cache(autos.size(),
                                                                   std::vector<std::vector<DerivationTable>>(autos.size()));
      std::vector<std::vector<bool>> cached(autos.size(), std::vector<bool>(autos.size(), false));
      for (std::size_t sample = 0; sample < kSamples; ++sample) {
        const std::size_t si = rng.index(autos.size());
        const std::size_t ti = rng.index(autos.size());
        const Endo sigma = Endo::lift(autos[si], q);
        const Endo tau = Endo::lift(autos[ti], q);
        const std::vector<DerivationTable>* basis = nullptr;
        if (enumerable) {
          if (!cached[si][ti]) {
            cache[si][ti] = derivation_space_basis(sigma, tau);
            cached[si][ti] = true;
          }
          basis = &cache[si][ti];
        }
        const DerivationTable delta = sample_derivation(sigma, tau, basis, rng);
        check_derivation(delta, random_element(group, q, rng, -3, 3), random_element(group, q, rng, -3, 3), false);

        const GroupRingElement x = random_element(group, q, rng, -5, 5);
        if (sample % 2 == 0) {
          const std::array<long, 3> dens{2, 3, 5};
          check_inner_pair(sigma, tau, x, x + random_twisted_central(sigma, tau, rng, dens));
        } else {
          check_inner_pair(sigma, tau, x, random_element(group, q, rng, -5, 5));
        }
      }
    }
  }

  // Triangular embedding against the cocycle law on 500 candidates, every
  // odd-numbered one perturbed in a single coefficient.
  const auto catalog = acceptance_group_catalog();
  std::size_t valid_candidates = 0;
  for (std::size_t k = 0; k < 500; ++k) {
    const GroupPtr group = build_group(catalog[rng.index(catalog.size())]);
    const auto autos = inner_automorphisms(group);
    const Endo sigma = Endo::lift(autos[rng.index(autos.size())], q);
    const Endo tau = Endo::lift(autos[rng.index(autos.size())], q);
    std::vector<GroupRingElement> values = sample_derivation(sigma, tau, nullptr, rng).values();
    if (k % 2 == 1) {
      const Element g = rng.index(group->order());
      const Element m = rng.index(group->order());
      long bump = rng.uniform(1, 4) * (rng.uniform(0, 1) == 0 ? -1 : 1);
      values[g].set(m, values[g][m] + Scalar::from_int(q, bump));
    }
    const bool cocycle = validate_cocycle(values, sigma, tau).valid();
    valid_candidates += cocycle ? 1 : 0;
    tally.expect(triangular_embedding_check(values, sigma, tau) == cocycle,
                 [&] { return group->name() + ": triangular embedding disagrees with the cocycle law"; });
  }

  r.passed = tally.passed();
  r.detail = tally.summary("500 embedding candidates (" + std::to_string(valid_candidates) + " cocycles), ");
  return r;
}

CriterionResult centralizer_cross_check() {
  CriterionResult r{"AC5", "Twisted centralizer: orbit indicators span the nullspace", false, false, "", 0, 60};
  Tally tally;
  std::size_t configurations = 0;
  for (const auto& name : acceptance_group_catalog()) {
    const GroupPtr group = build_group(name);
    const auto autos = inner_automorphisms(group);
    for (const Ring& ring : catalog_rings(group)) {
      for (const auto& s : autos) {
        for (const auto& t : autos) {
          ++configurations;
          const Endo sigma = Endo::lift(s, ring);
          const Endo tau = Endo::lift(t, ring);
          std::vector<Vector> by_orbits, by_nullspace;
          for (const auto& x : twisted_centralizer_basis(sigma, tau)) by_orbits.push_back(x.coeffs());
          for (const auto& x : twisted_centralizer_basis_by_nullspace(sigma, tau)) by_nullspace.push_back(x.coeffs());
          tally.expect(by_orbits.size() == by_nullspace.size() && same_span(ring, by_orbits, by_nullspace),
                       [&] { return "centralizer routes disagree for " + where(group, ring, s, t); });
        }
      }
    }
  }
  r.passed = tally.passed();
  r.detail = tally.summary(std::to_string(configurations) + " configurations, ");
  return r;
}

CriterionResult hypothesis_reporting() {
  CriterionResult r{"AC6", "Hypothesis violation reported, solve still attempted", false, false, "", 0, 1};
  Tally tally;
  const GroupPtr c3 = cyclic_group(3);
  const Ring q = Ring::rationals();
  const Endo sigma = Endo::lift(GroupHomomorphism(c3, c3, {0, 2, 1}), q);
  const Endo tau = Endo::identity(c3, q);
  tally.expect(!fixes_center(sigma), [] { return "fixes_center(g -> g^2) reported true"; });

  std::vector<DerivationTable> tables = derivation_space_basis(sigma, tau);
  tables.push_back(DerivationTable::zero(sigma, tau));
  tables.push_back(inner_derivation(GroupRingElement::basis(c3, q, 1), sigma, tau));
  for (const auto& delta : tables) {
    const WitnessReport report = solve_inner_witness(delta);
    tally.expect(report.hypotheses_violated() && !report.hypotheses.sigma_fixes_center,
                 [] { return "witness report does not carry hypotheses-violated"; });
    tally.expect(report.status == WitnessStatus::NotInner || report.residual_zero,
                 [] { return "solve was not attempted"; });
  }
  const WitnessReport zero_report = solve_inner_witness(DerivationTable::zero(sigma, tau));
  tally.expect(zero_report.status == WitnessStatus::Inner && zero_report.witness && zero_report.witness->is_zero(),
               [] { return "zero derivation not solved despite violated hypotheses"; });
  r.passed = tally.passed();
  r.detail = tally.summary(std::to_string(tables.size()) + " witness reports, ");
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CriterionResult golden_reports(const AcceptanceOptions& options) {
  CriterionResult r{"GOLDEN", "CLI reports match the golden files byte for byte", false, false, "", 0, 0};
  namespace fs = std::filesystem;
  const fs::path dir = options.golden_dir.value_or(DRVKIT_GOLDEN_DIR);
  if (!fs::exists(dir / "manifest.json")) {
    if (options.golden_dir) {
      r.detail = "no manifest.json in " + dir.string();
    } else {
      r.skipped = true;
      r.passed = true;
      r.detail = "golden directory not available";
    }
    return r;
  }
  Tally tally;
  const Json manifest = Json::parse(read_file(dir / "manifest.json"));
  for (const auto& entry : manifest.at("cases")) {
    const std::string name = entry.at("name").get<std::string>();
    std::vector<std::string> args;
    for (const auto& a : entry.at("args")) {
      std::string arg = a.get<std::string>();
      if (auto pos = arg.find("{dir}"); pos != std::string::npos) arg.replace(pos, 5, dir.string());
      args.push_back(std::move(arg));
    }
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    const int expected_code = entry.value("exit", 0);
    tally.expect(code == expected_code, [&] {
      return name + ": exit " + std::to_string(code) + ", expected " + std::to_string(expected_code);
    });
    std::string expected;
    try {
      expected = read_file(dir / entry.at("expected").get<std::string>());
    } catch (const Error&) {
      expected = "<missing>";
    }
    tally.expect(out.str() == expected, [&] { return name + ": report differs from " + entry.at("expected").get<std::string>(); });
  }
  r.passed = tally.passed();
  r.detail = tally.summary(std::to_string(manifest.at("cases").size()) + " cases, ");
  return r;
}

}  // namespace

std::vector<std::string> acceptance_group_catalog() {
  return {"C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3", "D4", "D5", "Q8", "A4", "S4"};
}

std::vector<std::uint32_t> coprime_primes(std::size_t n, std::size_t count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; out.size() < count; ++p) {
    if (is_prime(p) && n % p != 0) out.push_back(p);
  }
  return out;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  using Runner = std::function<CriterionResult()>;
  const std::vector<std::pair<std::string, Runner>> catalog{
      {"AC1", [&] { return field_case(options.seed); }},
      {"AC2", [] { return maschke_counterexample(); }},
      {"AC3", [&] { return integral_case(options.seed); }},
      {"AC4", [&] { return property_suites(options.seed); }},
      {"AC5", [] { return centralizer_cross_check(); }},
      {"AC6", [] { return hypothesis_reporting(); }},
      {"GOLDEN", [&] { return golden_reports(options); }},
  };

  std::vector<CriterionResult> results;
  for (const auto& [id, run] : catalog) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result.id = id;
      result.title = id;
      result.passed = false;
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.budget_seconds > 0 && result.seconds > result.budget_seconds) {
      result.passed = false;
      result.detail += "; exceeded the " + std::to_string(static_cast<int>(result.budget_seconds)) + " s budget";
    }
    if (on_result) on_result(result);
    results.push_back(std::move(result));
  }
  return results;
}

std::string format_result_line(const CriterionResult& result, bool with_timing) {
  std::string status = result.skipped ? "SKIP" : result.passed ? "PASS" : "FAIL";
  std::string id = result.id;
  id.resize(std::max<std::size_t>(id.size(), 6), ' ');
  std::string line = status + "  " + id + "  " + result.title + " -- " + result.detail;
  if (with_timing) {
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << " [" << result.seconds << " s";
    if (result.budget_seconds > 0) t << " / " << result.budget_seconds << " s budget";
    t << "]";
    line += t.str();
  }
  return line;
}

}  // namespace drvkit

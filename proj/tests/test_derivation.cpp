#include <gtest/gtest.h>

#include "drvkit/error.hpp"
#include "drvkit/derivation.hpp"
#include "drvkit/linalg.hpp"
#include "drvkit/sampling.hpp"
#include "oracles.hpp"

using namespace drvkit;

namespace {

const Ring Q = Ring::rationals();
using Endo = AlgebraEndomorphism;

GroupRingElement elem(const GroupPtr& g, const Ring& ring, std::vector<long> coeffs) {
  std::vector<Scalar> v;
  for (long c : coeffs) v.push_back(Scalar::from_int(ring, c));
  return GroupRingElement::from_coeffs(g, ring, std::move(v));
}

}  // namespace

TEST(Cocycle, Examples) {
  const GroupPtr c2 = build_group("C2");
  const auto id = Endo::identity(c2, Q);
  EXPECT_TRUE(DerivationTable::zero(id, id).certified());

  const Ring f2 = Ring::prime_field(2);
  const auto id2 = Endo::identity(c2, f2);
  EXPECT_TRUE(DerivationTable(id2, id2, {elem(c2, f2, {0, 0}), elem(c2, f2, {1, 1})}).certified());

  const std::vector<GroupRingElement> bad{elem(c2, Q, {0, 0}), elem(c2, Q, {0, 1})};
  const auto verdict = validate_cocycle(bad, id, id);
  ASSERT_FALSE(verdict.valid());
  ASSERT_EQ(verdict.violations.size(), 1u);
  EXPECT_EQ(verdict.violations[0].g, 1u);
  EXPECT_EQ(verdict.violations[0].h, 1u);
  EXPECT_TRUE(verdict.violations[0].lhs.is_zero());
  EXPECT_EQ(verdict.violations[0].rhs, elem(c2, Q, {2, 0}));
  EXPECT_FALSE(DerivationTable(id, id, bad).certified());
  EXPECT_THROW(apply_derivation(DerivationTable(id, id, bad), GroupRingElement::one(c2, Q)), ValidationError);
}

TEST(InnerDerivation, Examples) {
  const GroupPtr s3 = build_group("S3");
  const auto id = Endo::identity(s3, Q);
  for (const auto& c : class_sum_center_basis(s3, Q)) {
    EXPECT_EQ(inner_derivation(c, id, id), DerivationTable::zero(id, id));
  }
  const GroupPtr c5 = build_group("C5");
  const auto id5 = Endo::identity(c5, Q);
  EXPECT_EQ(inner_derivation(elem(c5, Q, {1, -2, 3, 0, 7}), id5, id5), DerivationTable::zero(id5, id5));

  // t = (23) at index 1, c = (123) at index 3; tc = (13), ct = (12).
  const auto t = GroupRingElement::basis(s3, Q, 1);
  const auto delta = inner_derivation(t, id, id);
  EXPECT_TRUE(delta.certified());
  EXPECT_EQ(delta.value(3), elem(s3, Q, {0, 0, -1, 0, 0, 1}));
}

TEST(Centralizer, Examples) {
  const GroupPtr s3 = build_group("S3");
  const auto id = Endo::identity(s3, Q);
  std::vector<Vector> a, b;
  for (const auto& x : twisted_centralizer_basis(id, id)) a.push_back(x.coeffs());
  for (const auto& x : class_sum_center_basis(s3, Q)) b.push_back(x.coeffs());
  EXPECT_TRUE(same_span(Q, a, b));

  const GroupPtr c6 = build_group("C6");
  EXPECT_EQ(twisted_centralizer_basis(Endo::identity(c6, Q), Endo::identity(c6, Q)).size(), 6u);

  const auto sigma = Endo::lift(inner_automorphism(s3, 1), Q);
  const auto orbit_route = twisted_centralizer_basis(sigma, id);
  const auto null_route = twisted_centralizer_basis_by_nullspace(sigma, id);
  EXPECT_EQ(orbit_route.size(), 3u);
  std::vector<Vector> x, y;
  for (const auto& e : orbit_route) x.push_back(e.coeffs());
  for (const auto& e : null_route) y.push_back(e.coeffs());
  EXPECT_TRUE(same_span(Q, x, y));
}

TEST(DerivationSpace, Examples) {
  for (std::size_t n : {1, 2, 5, 8}) {
    const GroupPtr c = cyclic_group(n);
    const auto id = Endo::identity(c, Q);
    EXPECT_TRUE(derivation_space_basis(id, id).empty()) << n;
    EXPECT_EQ(inner_space_dimension(id, id), 0u);
  }
  const GroupPtr s3 = build_group("S3");
  const auto id = Endo::identity(s3, Q);
  EXPECT_EQ(derivation_space_basis(id, id).size(), 3u);
  EXPECT_EQ(inner_space_dimension(id, id), 3u);
  const GroupPtr q8 = build_group("Q8");
  EXPECT_EQ(inner_space_dimension(Endo::identity(q8, Q), Endo::identity(q8, Q)), 3u);

  const GroupPtr c2 = build_group("C2");
  const Ring f2 = Ring::prime_field(2);
  const auto id2 = Endo::identity(c2, f2);
  EXPECT_EQ(derivation_space_basis(id2, id2).size(), 2u);
  EXPECT_EQ(inner_space_dimension(id2, id2), 0u);

  EXPECT_THROW(derivation_space_basis(Endo::identity(c2, Ring::integers()), Endo::identity(c2, Ring::integers())),
               ValidationError);
  const GroupPtr s4 = build_group("S4");
  EXPECT_THROW(derivation_space_basis(Endo::identity(s4, Q), Endo::identity(s4, Q)), CapExceeded);
}

// Derivation dimension against a dense oracle, in characteristic 0 and in
// characteristics dividing and not dividing |G|.
TEST(DerivationSpace, AgreesWithDenseOracle) {
  for (const char* name : {"C4", "S3", "Q8", "C2xC2"}) {
    const GroupPtr g = build_group(name);
    const auto table = g->table();
    for (const auto& s : inner_automorphisms(g)) {
      for (const auto& t : inner_automorphisms(g)) {
        EXPECT_EQ(derivation_space_basis(Endo::lift(s, Q), Endo::lift(t, Q)).size(),
                  oracle::derivation_dimension_q(table, s.images(), t.images()))
            << name;
        for (std::uint64_t p : {2, 3, 5}) {
          const Ring fp = Ring::prime_field(p);
          EXPECT_EQ(derivation_space_basis(Endo::lift(s, fp), Endo::lift(t, fp)).size(),
                    oracle::derivation_dimension_p(table, s.images(), t.images(), p))
              << name << " mod " << p;
        }
      }
    }
  }
}

// In characteristic dividing |G| outer derivations appear.
TEST(DerivationSpace, ModularCaseHasOuterDerivations) {
  const GroupPtr s3 = build_group("S3");
  for (std::uint64_t p : {2, 3}) {
    const Ring fp = Ring::prime_field(p);
    const auto id = Endo::identity(s3, fp);
    EXPECT_GT(derivation_space_basis(id, id).size(), inner_space_dimension(id, id)) << p;
  }
}

TEST(Witness, Examples) {
  const GroupPtr s3 = build_group("S3");
  const auto id = Endo::identity(s3, Q);
  const auto zero = solve_inner_witness(DerivationTable::zero(id, id));
  EXPECT_EQ(zero.status, WitnessStatus::Inner);
  ASSERT_TRUE(zero.witness);
  EXPECT_TRUE(zero.witness->is_zero());
  EXPECT_TRUE(zero.residual_zero);
  EXPECT_FALSE(zero.hypotheses_violated());

  const GroupPtr c2 = build_group("C2");
  const Ring f2 = Ring::prime_field(2);
  const auto id2 = Endo::identity(c2, f2);
  const auto outer = solve_inner_witness(DerivationTable(id2, id2, {elem(c2, f2, {0, 0}), elem(c2, f2, {1, 1})}));
  EXPECT_EQ(outer.status, WitnessStatus::NotInner);
  EXPECT_FALSE(outer.witness);
  EXPECT_TRUE(outer.hypotheses.char_divides_order);
  EXPECT_EQ(outer.hypotheses.violations().size(), 1u);
}

TEST(Witness, RandomInnerDerivationOnS4) {
  const GroupPtr s4 = build_group("S4");
  SeededRng rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    const auto sigma = Endo::lift(inner_automorphism(s4, rng.index(24)), Q);
    const auto tau = Endo::lift(inner_automorphism(s4, rng.index(24)), Q);
    const auto x0 = random_element(s4, Q, rng, -9, 9);
    const auto report = solve_inner_witness(inner_derivation(x0, sigma, tau));
    ASSERT_EQ(report.status, WitnessStatus::Inner);
    EXPECT_TRUE(report.residual_zero);
    EXPECT_TRUE(is_twisted_central(*report.witness - x0, sigma, tau));
  }
}

TEST(Hypotheses, Flags) {
  const GroupPtr c3 = build_group("C3");
  const auto sigma = Endo::lift(GroupHomomorphism(c3, c3, {0, 2, 1}), Q);
  const auto id = Endo::identity(c3, Q);
  const auto h = check_hypotheses(sigma, id);
  EXPECT_FALSE(h.sigma_fixes_center);
  EXPECT_TRUE(h.tau_fixes_center);
  EXPECT_FALSE(h.theorem_applies());

  const GroupPtr c4 = build_group("C4");
  const auto square = Endo::lift(GroupHomomorphism(c4, c4, {0, 2, 0, 2}), Q);
  const auto h4 = check_hypotheses(square, Endo::identity(c4, Q));
  EXPECT_FALSE(h4.sigma_bijective);
}

TEST(Embedding, Examples) {
  const GroupPtr c2 = build_group("C2");
  const auto id = Endo::identity(c2, Q);
  const std::vector<GroupRingElement> zero{elem(c2, Q, {0, 0}), elem(c2, Q, {0, 0})};
  EXPECT_TRUE(triangular_embedding_check(zero, id, id));
  const std::vector<GroupRingElement> bad{elem(c2, Q, {0, 0}), elem(c2, Q, {0, 1})};
  EXPECT_FALSE(triangular_embedding_check(bad, id, id));

  const GroupPtr s3 = build_group("S3");
  const auto sid = Endo::identity(s3, Q);
  const auto delta = inner_derivation(GroupRingElement::basis(s3, Q, 1), sid, sid);
  EXPECT_TRUE(triangular_embedding_check(delta.values(), sid, sid));
}

TEST(PowerRule, Examples) {
  const GroupPtr s3 = build_group("S3");
  const auto id = Endo::identity(s3, Q);
  const auto sums = class_sum_center_basis(s3, Q);
  for (const auto& delta : derivation_space_basis(id, id)) {
    for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(central_power_check(delta, GroupRingElement::one(s3, Q), n));
    EXPECT_TRUE(central_power_check(delta, sums[1], 2));
  }
  const auto delta = derivation_space_basis(id, id).front();
  EXPECT_THROW(central_power_check(delta, sums[1], 0), ValidationError);
  EXPECT_THROW(central_power_check(delta, GroupRingElement::basis(s3, Q, 1), 2), ValidationError);
}

TEST(DerivationTable, LinearStructure) {
  const GroupPtr d4 = build_group("D4");
  const auto id = Endo::identity(d4, Q);
  const auto a = inner_derivation(elem(d4, Q, {1, 2, 0, 0, 3, 0, 0, 1}), id, id);
  const auto b = inner_derivation(elem(d4, Q, {0, 0, 1, 5, 0, 0, 2, 0}), id, id);
  EXPECT_TRUE((a + b).certified());
  EXPECT_TRUE((a - b).certified());
  EXPECT_EQ(a.scaled(Scalar::from_int(Q, 2)), a + a);
}

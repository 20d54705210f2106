#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "drvkit/error.hpp"
#include "drvkit/group.hpp"
#include "oracles.hpp"

using namespace drvkit;

namespace {

std::vector<std::size_t> block_sizes(const Partition& p) {
  std::vector<std::size_t> sizes;
  for (const auto& b : p.blocks) sizes.push_back(b.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

oracle::Table plain_table(const FiniteGroup& g) { return g.table(); }

std::set<std::set<std::size_t>> as_sets(const Partition& p) {
  std::set<std::set<std::size_t>> out;
  for (const auto& b : p.blocks) out.insert(std::set<std::size_t>(b.begin(), b.end()));
  return out;
}

}  // namespace

TEST(Families, SmallCyclicGroups) {
  const GroupPtr c1 = cyclic_group(1);
  EXPECT_EQ(c1->order(), 1u);
  EXPECT_EQ(c1->table(), (std::vector<std::vector<Element>>{{0}}));
  EXPECT_EQ(cyclic_group(2)->table(), (std::vector<std::vector<Element>>{{0, 1}, {1, 0}}));
}

TEST(Families, NamesAndOrders) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"C5", 5}, {"D4", 8}, {"D5", 10}, {"S3", 6}, {"S4", 24}, {"A4", 12}, {"Q8", 8}, {"C2xC4", 8}, {"C2xD4", 16}};
  for (const auto& [name, order] : cases) {
    const GroupPtr g = build_group(name);
    EXPECT_EQ(g->order(), order) << name;
    std::vector<std::vector<long long>> raw;
    for (const auto& row : g->table()) raw.emplace_back(row.begin(), row.end());
    EXPECT_TRUE(validate_group(raw).valid()) << name;
  }
  EXPECT_TRUE(build_group("C2xC4")->is_abelian());
  EXPECT_FALSE(build_group("Q8")->is_abelian());
  EXPECT_THROW(build_group("X9"), ValidationError);
  EXPECT_THROW(build_group("D2"), ValidationError);
}

TEST(Families, OrderCap) {
  Limits tight;
  tight.order_cap = 10;
  EXPECT_THROW(build_group("S4", tight), CapExceeded);
  EXPECT_NO_THROW(build_group("D5", tight));
}

TEST(Validation, Examples) {
  EXPECT_TRUE(validate_group({{0, 1}, {1, 0}}).valid());
  const auto dup = validate_group({{0, 1}, {1, 1}});
  ASSERT_FALSE(dup.valid());
  EXPECT_NE(std::find_if(dup.violations.begin(), dup.violations.end(),
                         [](const AxiomViolation& v) { return v.axiom == GroupAxiom::Cancellation; }),
            dup.violations.end());
  const auto zeros = validate_group({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  ASSERT_FALSE(zeros.valid());
  EXPECT_NE(std::find_if(zeros.violations.begin(), zeros.violations.end(),
                         [](const AxiomViolation& v) { return v.axiom == GroupAxiom::Identity; }),
            zeros.violations.end());
  EXPECT_FALSE(validate_group({{0, 1}, {1}}).valid());
  EXPECT_FALSE(validate_group({{0, 2}, {1, 0}}).valid());
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}, {}, "bad"), ValidationError);
}

TEST(Validation, NonAssociativeLatinSquare) {
  // A loop of order 5 that is not a group.
  const std::vector<std::vector<long long>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  const auto v = validate_group(loop);
  ASSERT_FALSE(v.valid());
  EXPECT_EQ(v.violations.front().axiom, GroupAxiom::Associativity);
}

TEST(Conjugacy, Examples) {
  EXPECT_EQ(block_sizes(conjugacy_classes(*build_group("S3"))), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(block_sizes(conjugacy_classes(*build_group("Q8"))), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(conjugacy_classes(*build_group("C4")).size(), 4u);
  EXPECT_EQ(conjugacy_classes(*build_group("S4")).size(), 5u);
  EXPECT_EQ(conjugacy_classes(*build_group("A4")).size(), 4u);
}

TEST(InnerAutomorphisms, Examples) {
  const GroupPtr s3 = build_group("S3");
  EXPECT_TRUE(inner_automorphism(s3, s3->identity()).is_identity());
  const GroupPtr c6 = build_group("C6");
  for (Element s = 0; s < 6; ++s) EXPECT_TRUE(inner_automorphism(c6, s).is_identity());

  // Element 1 of S3 is the transposition "132".
  const auto phi = inner_automorphism(s3, 1);
  EXPECT_TRUE(phi.after(phi).is_identity());
  EXPECT_FALSE(phi.is_identity());
  EXPECT_EQ(phi(1), 1u);
  EXPECT_EQ(phi(2), 5u);
  EXPECT_EQ(phi(5), 2u);
  EXPECT_EQ(inner_automorphisms(s3).size(), 6u);
  EXPECT_EQ(inner_automorphisms(build_group("Q8")).size(), 4u);
}

TEST(Homomorphisms, Validation) {
  const GroupPtr c4 = build_group("C4");
  EXPECT_TRUE(GroupHomomorphism::validate(*c4, *c4, {0, 2, 0, 2}).valid());
  EXPECT_FALSE(GroupHomomorphism::validate(*c4, *c4, {0, 1, 1, 1}).valid());
  EXPECT_FALSE(GroupHomomorphism::validate(*c4, *c4, {0, 1, 2}).valid());
  EXPECT_THROW(GroupHomomorphism(c4, c4, {1, 2, 3, 0}), ValidationError);
  EXPECT_FALSE(GroupHomomorphism(c4, c4, {0, 2, 0, 2}).is_bijective());
}

TEST(TwistedOrbits, Examples) {
  const GroupPtr c4 = build_group("C4");
  const auto id4 = GroupHomomorphism::identity(c4);
  EXPECT_EQ(twisted_orbits(id4, id4).size(), 4u);

  const GroupPtr s3 = build_group("S3");
  const auto id = GroupHomomorphism::identity(s3);
  EXPECT_EQ(as_sets(twisted_orbits(id, id)), as_sets(conjugacy_classes(*s3)));

  // sigma = conjugation by a transposition s: orbits are s C for classes C.
  const Element s = 1;
  const Partition orbits = twisted_orbits(inner_automorphism(s3, s), id);
  EXPECT_EQ(orbits.size(), 3u);
  std::set<std::set<std::size_t>> translates;
  for (const auto& c : conjugacy_classes(*s3).blocks) {
    std::set<std::size_t> t;
    for (Element g : c) t.insert(s3->multiply(s, g));
    translates.insert(t);
  }
  EXPECT_EQ(as_sets(orbits), translates);
}

// Orbits match a brute-force closure for every pair of inner automorphisms.
TEST(TwistedOrbits, AgreeWithOracle) {
  for (const char* name : {"S3", "D4", "Q8", "C2xC4", "A4", "D5"}) {
    const GroupPtr g = build_group(name);
    const auto table = plain_table(*g);
    for (const auto& s : inner_automorphisms(g)) {
      for (const auto& t : inner_automorphisms(g)) {
        ASSERT_EQ(as_sets(twisted_orbits(s, t)), oracle::twisted_orbits(table, s.images(), t.images())) << name;
      }
    }
  }
}

TEST(GroupSpec, ParsesProducts) {
  const auto spec = GroupSpec::parse("C2xC4");
  EXPECT_EQ(spec.family, GroupSpec::Family::DirectProduct);
  EXPECT_EQ(spec.factors.size(), 2u);
  EXPECT_EQ(spec.name(), "C2xC4");
}

#include <gtest/gtest.h>

#include <random>

#include "drvkit/error.hpp"
#include "drvkit/linalg.hpp"
#include "oracles.hpp"

using namespace drvkit;

namespace {

Vector ints(const Ring& ring, std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.push_back(Scalar::from_int(ring, x));
  return v;
}

}  // namespace

TEST(Ring, ParsesDescriptors) {
  EXPECT_EQ(Ring::parse("Q"), Ring::rationals());
  EXPECT_EQ(Ring::parse("Z"), Ring::integers());
  EXPECT_EQ(Ring::parse("Fp:7"), Ring::prime_field(7));
  EXPECT_EQ(Ring::parse("F5").modulus(), 5u);
  EXPECT_EQ(Ring::prime_field(7).to_string(), "Fp:7");
  EXPECT_THROW(Ring::parse("Fp:9"), ValidationError);
  EXPECT_THROW(Ring::parse("R"), ValidationError);
  EXPECT_THROW(Ring::prime_field(2147483659ULL), ValidationError);
  EXPECT_FALSE(Ring::integers().is_field());
  EXPECT_TRUE(Ring::integers().compatible(Ring::rationals()));
}

TEST(Scalar, RationalArithmeticIsExact) {
  const Ring q = Ring::rationals();
  const Scalar a = Scalar::parse("3/4", q);
  const Scalar b = Scalar::parse("-5/6", q);
  EXPECT_EQ((a + b).to_string(), "-1/12");
  EXPECT_EQ((a * b).to_string(), "-5/8");
  EXPECT_EQ((a / b).to_string(), "-9/10");
  EXPECT_EQ(Scalar::parse("6/4", q).to_string(), "3/2");
  EXPECT_THROW(Scalar::parse("1/0", q), ValidationError);
  EXPECT_THROW(Scalar::parse("x", q), ValidationError);
}

TEST(Scalar, FloorAndFractionalPart) {
  const Ring q = Ring::rationals();
  EXPECT_EQ(Scalar::parse("3/2", q).fractional_part().to_string(), "1/2");
  EXPECT_EQ(Scalar::parse("-1/3", q).fractional_part().to_string(), "2/3");
  EXPECT_EQ(Scalar::parse("-1/3", q).floor().to_string(), "-1");
  EXPECT_EQ(Scalar::parse("4", q).fractional_part().to_string(), "0");
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Ring f7 = Ring::prime_field(7);
  const Scalar three = Scalar::from_int(f7, 3);
  EXPECT_EQ((three * three).to_string(), "2");
  EXPECT_EQ(three.inverse().to_string(), "5");
  EXPECT_EQ(Scalar::from_int(f7, -1).to_string(), "6");
  EXPECT_EQ(Scalar::parse("1/3", f7).to_string(), "5");
  EXPECT_THROW(Scalar::zero(f7).inverse(), Error);
  EXPECT_THROW(three + Scalar::one(Ring::rationals()), MismatchError);
}

TEST(Scalar, LargeModulusDoesNotOverflow) {
  const Ring f = Ring::prime_field(2147483647);
  const Scalar big = Scalar::from_int(f, 2147483646);
  EXPECT_EQ((big * big).to_string(), "1");
}

TEST(Linalg, NullspaceExamples) {
  const Ring q = Ring::rationals();
  auto basis = nullspace_basis(Matrix::from_rows(q, {{1, 1}, {2, 2}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], ints(q, {-1, 1}));

  EXPECT_TRUE(nullspace_basis(Matrix::from_rows(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).empty());

  const Ring f3 = Ring::prime_field(3);
  basis = nullspace_basis(Matrix::from_rows(f3, {{1, 2}, {2, 1}}));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], ints(f3, {1, 1}));
}

TEST(Linalg, ParticularSolutionExamples) {
  const Ring q = Ring::rationals();
  auto x = solve_particular(Matrix::from_rows(q, std::vector<std::vector<long>>{{2}}), ints(q, {3}));
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0].to_string(), "3/2");

  const Matrix a = Matrix::from_rows(q, {{1, 1}, {2, 2}});
  EXPECT_FALSE(solve_particular(a, ints(q, {1, 3})));
  x = solve_particular(a, ints(q, {1, 2}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, ints(q, {1, 0}));
}

TEST(Linalg, SparseSystemMergesDuplicates) {
  const Ring q = Ring::rationals();
  SparseSystem s(q, 2);
  s.add_row({{0, Scalar::from_int(q, 1)}, {0, Scalar::from_int(q, -1)}, {1, Scalar::from_int(q, 2)}});
  ASSERT_EQ(s.row(0).size(), 1u);
  EXPECT_EQ(s.row(0)[0].first, 1u);
  EXPECT_EQ(rank(s), 1u);
}

TEST(Linalg, SameSpan) {
  const Ring q = Ring::rationals();
  EXPECT_TRUE(same_span(q, {ints(q, {1, 1, 0}), ints(q, {0, 1, 1})}, {ints(q, {1, 2, 1}), ints(q, {1, 0, -1})}));
  EXPECT_FALSE(same_span(q, {ints(q, {1, 0, 0})}, {ints(q, {0, 1, 0})}));
}

class RandomMatrices : public ::testing::TestWithParam<std::uint64_t> {};

// Rank agrees with a dense oracle, nullspace vectors are annihilated and
// rank + nullity = cols.
TEST_P(RandomMatrices, AgreeWithDenseOracle) {
  const std::uint64_t p = GetParam();
  const Ring ring = p == 0 ? Ring::rationals() : Ring::prime_field(p);
  std::mt19937_64 gen(p + 11);
  std::uniform_int_distribution<long> entry(-3, 3);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dim(gen), cols = dim(gen);
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
    for (auto& r : a) {
      for (auto& v : r) v = gen() % 3 == 0 ? 0 : entry(gen);
    }
    const Matrix m = Matrix::from_rows(ring, a);
    std::size_t expected;
    if (p == 0) {
      std::vector<std::vector<mpq_class>> dense;
      for (const auto& r : a) dense.emplace_back(r.begin(), r.end());
      expected = oracle::rank_q(dense);
    } else {
      std::vector<std::vector<std::uint64_t>> dense;
      for (const auto& r : a) {
        std::vector<std::uint64_t> row;
        for (long v : r) row.push_back(static_cast<std::uint64_t>((v % static_cast<long>(p) + static_cast<long>(p)) % static_cast<long>(p)));
        dense.push_back(row);
      }
      expected = oracle::rank_p(dense, p);
    }
    ASSERT_EQ(rank(m), expected);
    const auto basis = nullspace_basis(m);
    ASSERT_EQ(basis.size() + expected, static_cast<std::size_t>(cols));
    for (const auto& v : basis) {
      for (const auto& x : m.apply(v)) ASSERT_TRUE(x.is_zero());
    }
    Vector b;
    for (int r = 0; r < rows; ++r) b.push_back(Scalar::from_int(ring, entry(gen)));
    if (auto x = solve_particular(m, b)) ASSERT_EQ(m.apply(*x), b);
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, RandomMatrices, ::testing::Values(0, 2, 3, 7, 101));

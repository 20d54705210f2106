#include <gtest/gtest.h>

#include <algorithm>

#include "drvkit/error.hpp"
#include "drvkit/group_ring.hpp"

using namespace drvkit;

namespace {

const Ring Q = Ring::rationals();

GroupRingElement elem(const GroupPtr& g, const Ring& ring, std::vector<long> coeffs) {
  std::vector<Scalar> v;
  for (long c : coeffs) v.push_back(Scalar::from_int(ring, c));
  return GroupRingElement::from_coeffs(g, ring, std::move(v));
}

// S3 in lexicographic one-line order: e, (23), (12), (123), (132), (13).
constexpr Element kTransposition = 1;
constexpr Element kThreeCycle = 3;

}  // namespace

TEST(Multiply, Examples) {
  const GroupPtr c2 = build_group("C2");
  const auto one = GroupRingElement::one(c2, Q);
  const auto g = GroupRingElement::basis(c2, Q, 1);
  EXPECT_TRUE(((one + g) * (one - g)).is_zero());

  const Ring f2 = Ring::prime_field(2);
  const auto s = GroupRingElement::one(c2, f2) + GroupRingElement::basis(c2, f2, 1);
  EXPECT_TRUE((s * s).is_zero());

  const GroupPtr s3 = build_group("S3");
  const auto a = elem(s3, Q, {1, -2, 0, 3, 0, 5});
  EXPECT_EQ(GroupRingElement::one(s3, Q) * a, a);
  EXPECT_EQ(a * GroupRingElement::one(s3, Q), a);
}

TEST(Multiply, AssociativeAndDistributive) {
  const GroupPtr d4 = build_group("D4");
  const auto a = elem(d4, Q, {1, 0, -2, 3, 0, 1, 0, 4});
  const auto b = elem(d4, Q, {0, 5, 1, 0, -1, 0, 2, 0});
  const auto c = elem(d4, Q, {2, 1, 0, 0, 0, -3, 1, 1});
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_NE(a * b, b * a);
}

TEST(Multiply, MismatchedGroupsThrow) {
  EXPECT_THROW(GroupRingElement::one(build_group("C2"), Q) * GroupRingElement::one(build_group("C3"), Q), MismatchError);
  EXPECT_THROW(GroupRingElement::one(build_group("C2"), Q) * GroupRingElement::one(build_group("C2"), Ring::prime_field(3)),
               MismatchError);
}

TEST(Center, ClassSums) {
  EXPECT_EQ(class_sum_center_basis(build_group("C3"), Q).size(), 3u);
  const GroupPtr s3 = build_group("S3");
  const auto sums = class_sum_center_basis(s3, Q);
  ASSERT_EQ(sums.size(), 3u);
  EXPECT_EQ(sums[0], GroupRingElement::one(s3, Q));
  EXPECT_EQ(sums[1], elem(s3, Q, {0, 1, 1, 0, 0, 1}));
  EXPECT_EQ(sums[2], elem(s3, Q, {0, 0, 0, 1, 1, 0}));
  for (const auto& c : sums) EXPECT_TRUE(is_central(c));

  std::vector<std::size_t> sizes;
  for (const auto& c : class_sum_center_basis(build_group("Q8"), Q)) {
    sizes.push_back(std::count_if(c.coeffs().begin(), c.coeffs().end(), [](const Scalar& x) { return !x.is_zero(); }));
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Endomorphisms, LiftsAndValidation) {
  const GroupPtr c4 = build_group("C4");
  const auto square = AlgebraEndomorphism::lift(GroupHomomorphism(c4, c4, {0, 2, 0, 2}), Q);
  EXPECT_EQ(square.apply(GroupRingElement::basis(c4, Q, 1)), GroupRingElement::basis(c4, Q, 2));
  EXPECT_FALSE(square.is_bijective());
  EXPECT_TRUE(validate_endomorphism(square).valid());
  EXPECT_TRUE(validate_endomorphism(AlgebraEndomorphism::identity(c4, Q)).valid());

  const GroupPtr c2 = build_group("C2");
  std::vector<GroupRingElement> bad{GroupRingElement::one(c2, Q), GroupRingElement::zero(c2, Q)};
  const auto verdict = validate_endomorphism(bad);
  EXPECT_FALSE(verdict.valid());
  ASSERT_TRUE(verdict.offending_pair);
  EXPECT_EQ(*verdict.offending_pair, (std::pair<Element, Element>{1, 1}));

  // g -> 1: the augmentation-style endomorphism.
  std::vector<GroupRingElement> augmentation{GroupRingElement::one(c2, Q), GroupRingElement::one(c2, Q)};
  EXPECT_TRUE(validate_endomorphism(augmentation).valid());
  const auto aug = AlgebraEndomorphism::from_images(augmentation);
  EXPECT_FALSE(aug.is_bijective());
}

TEST(Endomorphisms, FromImagesDetectsLifts) {
  const GroupPtr s3 = build_group("S3");
  std::vector<GroupRingElement> images;
  const auto phi = inner_automorphism(s3, kTransposition);
  for (Element g = 0; g < 6; ++g) images.push_back(GroupRingElement::basis(s3, Q, phi(g)));
  const auto lifted = AlgebraEndomorphism::from_images(images);
  EXPECT_TRUE(lifted.is_lift());
  EXPECT_EQ(*lifted.group_hom(), phi);
}

TEST(FixesCenter, Examples) {
  const GroupPtr s3 = build_group("S3");
  EXPECT_TRUE(fixes_center(AlgebraEndomorphism::identity(s3, Q)));
  EXPECT_TRUE(fixes_center(AlgebraEndomorphism::lift(inner_automorphism(s3, kTransposition), Q)));
  const GroupPtr c3 = build_group("C3");
  EXPECT_FALSE(fixes_center(AlgebraEndomorphism::lift(GroupHomomorphism(c3, c3, {0, 2, 1}), Q)));
}

TEST(TwistedCentral, Examples) {
  const GroupPtr s3 = build_group("S3");
  const auto id = AlgebraEndomorphism::identity(s3, Q);
  for (const auto& c : class_sum_center_basis(s3, Q)) EXPECT_TRUE(is_twisted_central(c, id, id));
  const auto t = GroupRingElement::basis(s3, Q, kTransposition);
  EXPECT_FALSE(is_twisted_central(t, id, id));
  EXPECT_FALSE(is_twisted_central_direct(t, id, id));

  const auto s = inner_automorphism(s3, kTransposition);
  const auto sigma = AlgebraEndomorphism::lift(s, Q);
  for (const auto& orbit : twisted_orbits(s, GroupHomomorphism::identity(s3)).blocks) {
    const auto x = GroupRingElement::indicator(s3, Q, orbit);
    EXPECT_TRUE(is_twisted_central_by_orbits(x, sigma, id));
    EXPECT_TRUE(is_twisted_central_direct(x, sigma, id));
  }
  EXPECT_EQ(is_twisted_central_direct(GroupRingElement::basis(s3, Q, kThreeCycle), sigma, id),
            is_twisted_central_by_orbits(GroupRingElement::basis(s3, Q, kThreeCycle), sigma, id));
}

TEST(Elements, IntegralityAndRendering) {
  const GroupPtr c2 = build_group("C2");
  auto x = GroupRingElement::basis(c2, Q, 0, Scalar::parse("3/2", Q));
  EXPECT_FALSE(x.is_integral());
  EXPECT_EQ(x.to_string(), "3/2*e");
  EXPECT_TRUE(x.scaled(Scalar::from_int(Q, 2)).is_integral());
  const Ring z = Ring::integers();
  EXPECT_EQ(GroupRingElement::one(c2, z).scaled(Scalar::parse("1/2", Q)).ring(), Q);
}

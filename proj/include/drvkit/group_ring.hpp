#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drvkit/group.hpp"
#include "drvkit/scalar.hpp"

namespace drvkit {

/// Element sum_g c_g g of the group ring RG, stored densely by element index.
class GroupRingElement {
 public:
  GroupRingElement(GroupPtr group, Ring ring);

  static GroupRingElement zero(const GroupPtr& group, const Ring& ring) { return {group, ring}; }
  static GroupRingElement one(const GroupPtr& group, const Ring& ring);
  /// coeff * g.
  static GroupRingElement basis(const GroupPtr& group, const Ring& ring, Element g);
  static GroupRingElement basis(const GroupPtr& group, const Ring& ring, Element g, Scalar coeff);
  static GroupRingElement from_coeffs(const GroupPtr& group, const Ring& ring, std::vector<Scalar> coeffs);
  /// Sum of the given elements with coefficient 1.
  static GroupRingElement indicator(const GroupPtr& group, const Ring& ring, std::span<const Element> support);

  const GroupPtr& group() const { return group_; }
  const Ring& ring() const { return ring_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](Element g) const { return coeffs_[g]; }
  void set(Element g, Scalar value);

  bool is_zero() const;
  /// Every coefficient has denominator 1.
  bool is_integral() const;
  /// The element g when this is c * g with c != 0.
  std::optional<Element> single_support() const;

  /// Same coefficients under another compatible ring descriptor (Z <-> Q).
  GroupRingElement with_ring(const Ring& ring) const;

  GroupRingElement operator-() const;
  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement scaled(const Scalar& factor) const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(const Scalar& c, const GroupRingElement& a) { return a.scaled(c); }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);

  /// "3/2*e + -1*g" style rendering using the group's labels.
  std::string to_string() const;

 private:
  GroupPtr group_;
  Ring ring_;
  std::vector<Scalar> coeffs_;
};

/// Convolution through the Cayley table. Throws MismatchError across
/// groups or incompatible rings.
GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

/// a * g and g * a for a group element g: permutations of coefficients.
GroupRingElement multiply_right(const GroupRingElement& a, Element g);
GroupRingElement multiply_left(Element g, const GroupRingElement& a);

/// One class sum per conjugacy class, ordered by least class member.
std::vector<GroupRingElement> class_sum_center_basis(const GroupPtr& group, const Ring& ring);

/// An R-linear map RG -> RG given by the images of the group elements.
/// Images of group-homomorphism lifts are kept alongside the homomorphism.
class AlgebraEndomorphism {
 public:
  static AlgebraEndomorphism lift(const GroupHomomorphism& phi, const Ring& ring);
  static AlgebraEndomorphism identity(const GroupPtr& group, const Ring& ring);
  /// Unchecked; use validate_endomorphism for the multiplicativity verdict.
  /// Images that are all single group elements with coefficient 1 and form
  /// a homomorphism are recognized as a lift.
  static AlgebraEndomorphism from_images(std::vector<GroupRingElement> images);

  const GroupPtr& group() const { return group_; }
  const Ring& ring() const { return ring_; }
  const GroupRingElement& image(Element g) const { return images_[g]; }
  const std::vector<GroupRingElement>& images() const { return images_; }
  const std::optional<GroupHomomorphism>& group_hom() const { return hom_; }
  bool is_lift() const { return hom_.has_value(); }

  GroupRingElement apply(const GroupRingElement& a) const;
  /// Injective as a linear map (bijective for lifts of automorphisms).
  bool is_bijective() const;

  /// Same map under another compatible ring descriptor.
  AlgebraEndomorphism with_ring(const Ring& ring) const;

 private:
  AlgebraEndomorphism(GroupPtr group, Ring ring, std::vector<GroupRingElement> images,
                      std::optional<GroupHomomorphism> hom);

  GroupPtr group_;
  Ring ring_;
  std::vector<GroupRingElement> images_;
  std::optional<GroupHomomorphism> hom_;
};

struct EndomorphismVerdict {
  std::vector<std::string> violations;
  /// First failing pair (g, h) for the multiplicativity law.
  std::optional<std::pair<Element, Element>> offending_pair;

  bool valid() const { return violations.empty(); }
};

/// Checks phi(e) = 1 and phi(g) phi(h) = phi(gh) for all pairs.
EndomorphismVerdict validate_endomorphism(std::span<const GroupRingElement> images);
EndomorphismVerdict validate_endomorphism(const AlgebraEndomorphism& phi);

/// phi(C) = C for every class sum C.
bool fixes_center(const AlgebraEndomorphism& phi);

/// x tau(h) = sigma(h) x for all h. Uses the orbit criterion when both maps
/// are lifts and the direct check otherwise.
bool is_twisted_central(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                        const AlgebraEndomorphism& tau);
bool is_twisted_central_direct(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                               const AlgebraEndomorphism& tau);
/// Coefficients constant on every twisted orbit. Requires lifts.
bool is_twisted_central_by_orbits(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                                  const AlgebraEndomorphism& tau);

/// Ordinary center membership.
bool is_central(const GroupRingElement& x);

}  // namespace drvkit

#include "drvkit/group_ring.hpp"

#include "drvkit/error.hpp"
#include "drvkit/linalg.hpp"

namespace drvkit {

namespace {

bool scalar_in_ring(const Scalar& s, const Ring& ring) {
  if (s.is_rational()) return ring.uses_rationals();
  return ring.kind() == RingKind::Prime && s.mod_p().modulus == ring.modulus();
}

// Z only survives when both operands are Z.
Ring combine(const Ring& a, const Ring& b) {
  if (!a.compatible(b)) {
    throw MismatchError("group ring elements over " + a.to_string() + " and " + b.to_string());
  }
  return a == b ? a : a.fraction_field();
}

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (!same_group(a, b)) throw MismatchError("group ring elements over different groups");
}

}  // namespace

GroupRingElement::GroupRingElement(GroupPtr group, Ring ring)
    : group_(std::move(group)), ring_(ring), coeffs_(group_->order(), Scalar::zero(ring)) {}

GroupRingElement GroupRingElement::one(const GroupPtr& group, const Ring& ring) {
  return basis(group, ring, group->identity());
}

GroupRingElement GroupRingElement::basis(const GroupPtr& group, const Ring& ring, Element g) {
  return basis(group, ring, g, Scalar::one(ring));
}

GroupRingElement GroupRingElement::basis(const GroupPtr& group, const Ring& ring, Element g, Scalar coeff) {
  GroupRingElement x(group, ring);
  x.set(g, std::move(coeff));
  return x;
}

GroupRingElement GroupRingElement::from_coeffs(const GroupPtr& group, const Ring& ring,
                                               std::vector<Scalar> coeffs) {
  if (coeffs.size() != group->order()) {
    throw MismatchError("expected " + std::to_string(group->order()) + " coefficients, got " +
                        std::to_string(coeffs.size()));
  }
  GroupRingElement x(group, ring);
  for (Element g = 0; g < coeffs.size(); ++g) x.set(g, std::move(coeffs[g]));
  return x;
}

GroupRingElement GroupRingElement::indicator(const GroupPtr& group, const Ring& ring,
                                             std::span<const Element> support) {
  GroupRingElement x(group, ring);
  for (Element g : support) x.set(g, Scalar::one(ring));
  return x;
}

void GroupRingElement::set(Element g, Scalar value) {
  if (g >= coeffs_.size()) throw MismatchError("element index out of range");
  if (!scalar_in_ring(value, ring_)) throw MismatchError("coefficient outside the ring " + ring_.to_string());
  coeffs_[g] = std::move(value);
}

bool GroupRingElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool GroupRingElement::is_integral() const {
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

std::optional<Element> GroupRingElement::single_support() const {
  std::optional<Element> found;
  for (Element g = 0; g < coeffs_.size(); ++g) {
    if (coeffs_[g].is_zero()) continue;
    if (found) return std::nullopt;
    found = g;
  }
  return found;
}

GroupRingElement GroupRingElement::with_ring(const Ring& ring) const {
  if (!ring_.compatible(ring)) throw MismatchError("cannot reinterpret " + ring_.to_string() + " as " + ring.to_string());
  GroupRingElement out = *this;
  out.ring_ = ring;
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  require_same_group(group_, rhs.group_);
  ring_ = combine(ring_, rhs.ring_);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] += rhs.coeffs_[g];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  require_same_group(group_, rhs.group_);
  ring_ = combine(ring_, rhs.ring_);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] -= rhs.coeffs_[g];
  return *this;
}

GroupRingElement GroupRingElement::scaled(const Scalar& factor) const {
  if (!scalar_in_ring(factor, ring_)) throw MismatchError("scalar outside the ring " + ring_.to_string());
  GroupRingElement out = *this;
  if (ring_.kind() == RingKind::Integer && !factor.is_integer()) out.ring_ = Ring::rationals();
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return same_group(a.group_, b.group_) && a.ring_.compatible(b.ring_) && a.coeffs_ == b.coeffs_;
}

std::string GroupRingElement::to_string() const {
  std::string out;
  for (Element g = 0; g < coeffs_.size(); ++g) {
    if (coeffs_[g].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[g].to_string() + "*" + group_->label(g);
  }
  return out.empty() ? "0" : out;
}

GroupRingElement multiply_right(const GroupRingElement& a, Element g) {
  const FiniteGroup& group = *a.group();
  GroupRingElement out(a.group(), a.ring());
  for (Element i = 0; i < group.order(); ++i) {
    if (!a[i].is_zero()) out.set(group.multiply(i, g), a[i]);
  }
  return out;
}

GroupRingElement multiply_left(Element g, const GroupRingElement& a) {
  const FiniteGroup& group = *a.group();
  GroupRingElement out(a.group(), a.ring());
  for (Element i = 0; i < group.order(); ++i) {
    if (!a[i].is_zero()) out.set(group.multiply(g, i), a[i]);
  }
  return out;
}

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a.group(), b.group());
  const Ring ring = combine(a.ring(), b.ring());
  if (auto g = b.single_support()) return multiply_right(a, *g).with_ring(ring).scaled(b[*g]);
  if (auto g = a.single_support()) return multiply_left(*g, b).with_ring(ring).scaled(a[*g]);

  const FiniteGroup& group = *a.group();
  const std::size_t n = group.order();
  std::vector<Scalar> out(n, Scalar::zero(ring));
  std::vector<Element> support_b;
  for (Element j = 0; j < n; ++j) {
    if (!b[j].is_zero()) support_b.push_back(j);
  }
  for (Element i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (Element j : support_b) out[group.multiply(i, j)].add_product(a[i], b[j]);
  }
  return GroupRingElement::from_coeffs(a.group(), ring, std::move(out));
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return ring_multiply(a, b); }

std::vector<GroupRingElement> class_sum_center_basis(const GroupPtr& group, const Ring& ring) {
  std::vector<GroupRingElement> basis;
  for (const auto& block : conjugacy_classes(*group).blocks) {
    basis.push_back(GroupRingElement::indicator(group, ring, block));
  }
  return basis;
}

AlgebraEndomorphism::AlgebraEndomorphism(GroupPtr group, Ring ring, std::vector<GroupRingElement> images,
                                         std::optional<GroupHomomorphism> hom)
    : group_(std::move(group)), ring_(ring), images_(std::move(images)), hom_(std::move(hom)) {}

AlgebraEndomorphism AlgebraEndomorphism::lift(const GroupHomomorphism& phi, const Ring& ring) {
  if (!phi.is_endomorphism()) throw MismatchError("only endomorphisms of G lift to RG");
  std::vector<GroupRingElement> images;
  images.reserve(phi.images().size());
  for (Element img : phi.images()) images.push_back(GroupRingElement::basis(phi.source(), ring, img));
  return AlgebraEndomorphism(phi.source(), ring, std::move(images), phi);
}

AlgebraEndomorphism AlgebraEndomorphism::identity(const GroupPtr& group, const Ring& ring) {
  return lift(GroupHomomorphism::identity(group), ring);
}

AlgebraEndomorphism AlgebraEndomorphism::from_images(std::vector<GroupRingElement> images) {
  if (images.empty()) throw ValidationError("endomorphism needs one image per group element");
  GroupPtr group = images.front().group();
  Ring ring = images.front().ring();
  if (images.size() != group->order()) {
    throw ValidationError("expected " + std::to_string(group->order()) + " images, got " +
                          std::to_string(images.size()));
  }
  std::vector<Element> hom_images;
  for (const auto& img : images) {
    require_same_group(group, img.group());
    ring = combine(ring, img.ring());
    auto g = img.single_support();
    if (g && img[*g].is_one()) hom_images.push_back(*g);
  }
  std::optional<GroupHomomorphism> hom;
  if (hom_images.size() == images.size() && GroupHomomorphism::validate(*group, *group, hom_images).valid()) {
    hom.emplace(group, group, hom_images);
  }
  return AlgebraEndomorphism(group, ring, std::move(images), std::move(hom));
}

GroupRingElement AlgebraEndomorphism::apply(const GroupRingElement& a) const {
  require_same_group(group_, a.group());
  const Ring ring = combine(ring_, a.ring());
  GroupRingElement out(group_, ring);
  if (hom_) {
    std::vector<Scalar> coeffs(group_->order(), Scalar::zero(ring));
    for (Element g = 0; g < group_->order(); ++g) {
      if (!a[g].is_zero()) coeffs[(*hom_)(g)] += a[g];
    }
    return GroupRingElement::from_coeffs(group_, ring, std::move(coeffs));
  }
  for (Element g = 0; g < group_->order(); ++g) {
    if (!a[g].is_zero()) out += images_[g].scaled(a[g]);
  }
  return out;
}

bool AlgebraEndomorphism::is_bijective() const {
  if (hom_) return hom_->is_bijective();
  std::vector<Vector> rows;
  for (const auto& img : images_) rows.push_back(img.coeffs());
  return rank_of(ring_, rows) == group_->order();
}

AlgebraEndomorphism AlgebraEndomorphism::with_ring(const Ring& ring) const {
  std::vector<GroupRingElement> images;
  for (const auto& img : images_) images.push_back(img.with_ring(ring));
  return AlgebraEndomorphism(group_, ring, std::move(images), hom_);
}

EndomorphismVerdict validate_endomorphism(std::span<const GroupRingElement> images) {
  EndomorphismVerdict verdict;
  if (images.empty()) {
    verdict.violations.push_back("no images given");
    return verdict;
  }
  const GroupPtr& group = images.front().group();
  if (images.size() != group->order()) {
    verdict.violations.push_back("expected " + std::to_string(group->order()) + " images, got " +
                                 std::to_string(images.size()));
    return verdict;
  }
  for (const auto& img : images) {
    if (!same_group(group, img.group()) || !img.ring().compatible(images.front().ring())) {
      verdict.violations.push_back("images live in different group rings");
      return verdict;
    }
  }
  const Ring& ring = images.front().ring();
  if (images[group->identity()] != GroupRingElement::one(group, ring)) {
    verdict.violations.push_back("image of the identity is " + images[group->identity()].to_string() +
                                 ", not 1");
  }
  for (Element g = 0; g < group->order(); ++g) {
    for (Element h = 0; h < group->order(); ++h) {
      if (images[g] * images[h] != images[group->multiply(g, h)]) {
        verdict.violations.push_back("phi(" + group->label(g) + ") * phi(" + group->label(h) + ") != phi(" +
                                     group->label(group->multiply(g, h)) + ")");
        verdict.offending_pair = {g, h};
        return verdict;
      }
    }
  }
  return verdict;
}

EndomorphismVerdict validate_endomorphism(const AlgebraEndomorphism& phi) {
  return validate_endomorphism(phi.images());
}

bool fixes_center(const AlgebraEndomorphism& phi) {
  for (const auto& c : class_sum_center_basis(phi.group(), phi.ring())) {
    if (phi.apply(c) != c) return false;
  }
  return true;
}

bool is_twisted_central_direct(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                               const AlgebraEndomorphism& tau) {
  require_same_group(x.group(), sigma.group());
  require_same_group(x.group(), tau.group());
  for (Element h = 0; h < x.group()->order(); ++h) {
    if (x * tau.image(h) != sigma.image(h) * x) return false;
  }
  return true;
}

bool is_twisted_central_by_orbits(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                                  const AlgebraEndomorphism& tau) {
  if (!sigma.is_lift() || !tau.is_lift()) {
    throw ValidationError("the orbit criterion needs both maps to be lifted group homomorphisms");
  }
  require_same_group(x.group(), sigma.group());
  for (const auto& block : twisted_orbits(*sigma.group_hom(), *tau.group_hom()).blocks) {
    for (Element g : block) {
      if (x[g] != x[block.front()]) return false;
    }
  }
  return true;
}

bool is_twisted_central(const GroupRingElement& x, const AlgebraEndomorphism& sigma,
                        const AlgebraEndomorphism& tau) {
  if (sigma.is_lift() && tau.is_lift()) return is_twisted_central_by_orbits(x, sigma, tau);
  return is_twisted_central_direct(x, sigma, tau);
}

bool is_central(const GroupRingElement& x) {
  const auto id = AlgebraEndomorphism::identity(x.group(), x.ring());
  return is_twisted_central(x, id, id);
}

}  // namespace drvkit

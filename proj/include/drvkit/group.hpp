#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace drvkit {

/// Dense index of a group element, 0..order-1.
using Element = std::size_t;

/// Size limits for group construction and derivation-space enumeration.
struct Limits {
  std::size_t order_cap = 64;
  std::size_t enumeration_cap = 16;

  /// Defaults, with order_cap taken from DRVKIT_CAP when it is set.
  static Limits from_environment();
};

enum class GroupAxiom { Shape, Closure, Identity, Cancellation, Inverse, Associativity };

std::string to_string(GroupAxiom axiom);

struct AxiomViolation {
  GroupAxiom axiom;
  std::vector<long long> indices;
  std::string message;
};

/// Outcome of checking a raw Cayley table. Only the first violation of
/// each axiom is recorded.
struct GroupValidation {
  std::vector<AxiomViolation> violations;
  std::optional<std::size_t> identity;

  bool valid() const { return violations.empty(); }
};

GroupValidation validate_group(const std::vector<std::vector<long long>>& table);

/// A finite group given by its Cayley table. Immutable; shared by pointer
/// between every value that refers to it.
class FiniteGroup {
 public:
  /// Validates the table and throws ValidationError describing the first
  /// violated axiom, or CapExceeded if the order is above the cap.
  static std::shared_ptr<const FiniteGroup> from_table(const std::vector<std::vector<long long>>& table,
                                                       std::vector<std::string> labels = {},
                                                       std::string name = "raw",
                                                       const Limits& limits = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element inverse(Element g) const { return inverse_[g]; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  const std::string& label(Element g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }

  std::vector<std::vector<Element>> table() const;
  bool is_abelian() const;
  /// Element order of g.
  std::size_t element_order(Element g) const;

  /// Identical Cayley tables (labels and names ignored).
  bool same_table(const FiniteGroup& other) const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Same group object or identical tables.
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// Family descriptor accepted by build_group. Text form: "C<n>", "D<n>",
/// "S<n>", "A<n>", "Q8", and products joined by 'x' such as "C2xC4".
struct GroupSpec {
  enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Quaternion8, DirectProduct, Raw };

  Family family = Family::Cyclic;
  std::size_t n = 1;
  std::vector<GroupSpec> factors;
  std::vector<std::vector<long long>> table;

  static GroupSpec parse(std::string_view name);
  std::string name() const;
};

/// Element orderings:
///  - C<n>: index k is g^k.
///  - D<n>: index k < n is r^k, index n + k is s r^k (s r s = r^-1).
///  - S<n>, A<n>: permutations of {1..n} in lexicographic order of one-line
///    notation (A<n> keeps the even ones); (a b)(i) = a(b(i)).
///  - Q8: 1, -1, i, -i, j, -j, k, -k.
///  - A x B: index a * |B| + b.
GroupPtr build_group(const GroupSpec& spec, const Limits& limits = {});
GroupPtr build_group(std::string_view name, const Limits& limits = {});

GroupPtr cyclic_group(std::size_t n, const Limits& limits = {});
GroupPtr dihedral_group(std::size_t n, const Limits& limits = {});
GroupPtr symmetric_group(std::size_t n, const Limits& limits = {});
GroupPtr alternating_group(std::size_t n, const Limits& limits = {});
GroupPtr quaternion_group();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Limits& limits = {});

struct HomValidation {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/// A map of element indices that respects the multiplication tables.
class GroupHomomorphism {
 public:
  /// Throws ValidationError if the images do not define a homomorphism.
  GroupHomomorphism(GroupPtr source, GroupPtr target, std::vector<Element> images);

  static GroupHomomorphism identity(const GroupPtr& group);
  static HomValidation validate(const FiniteGroup& source, const FiniteGroup& target,
                                const std::vector<Element>& images);

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Element>& images() const { return images_; }
  Element operator()(Element g) const { return images_[g]; }

  bool is_endomorphism() const { return same_group(source_, target_); }
  bool is_bijective() const;
  bool is_identity() const;

  /// (this after first)(g) = this(first(g)).
  GroupHomomorphism after(const GroupHomomorphism& first) const;

  friend bool operator==(const GroupHomomorphism& a, const GroupHomomorphism& b) {
    return same_group(a.source_, b.source_) && same_group(a.target_, b.target_) && a.images_ == b.images_;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> images_;
};

/// g -> s g s^-1.
GroupHomomorphism inner_automorphism(const GroupPtr& group, Element s);

/// Distinct inner automorphisms, in order of the least s producing each.
std::vector<GroupHomomorphism> inner_automorphisms(const GroupPtr& group);

/// Partition of the element indices. Blocks are sorted internally and
/// listed by least member.
struct Partition {
  std::vector<std::vector<Element>> blocks;
  std::vector<std::size_t> block_of;

  std::size_t size() const { return blocks.size(); }
};

/// Orbits of g -> h^-1 g h.
Partition conjugacy_classes(const FiniteGroup& group);

/// Orbits of g -> sigma(h)^-1 g tau(h) over all h, by breadth-first closure.
/// sigma and tau must be endomorphisms of the same group.
Partition twisted_orbits(const GroupHomomorphism& sigma, const GroupHomomorphism& tau);

}  // namespace drvkit

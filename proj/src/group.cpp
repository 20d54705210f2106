#include "drvkit/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>

#include "drvkit/error.hpp"

namespace drvkit {

namespace {

using RawTable = std::vector<std::vector<long long>>;

std::string cell(long long i, long long j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

void check_cap(std::size_t order, const Limits& limits, std::string_view what) {
  if (order > limits.order_cap) {
    throw CapExceeded(std::string(what) + " has order " + std::to_string(order) +
                      ", above the cap of " + std::to_string(limits.order_cap));
  }
}

template <typename Step>
Partition orbit_partition(std::size_t n, Step&& step) {
  Partition result;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  result.block_of.assign(n, kUnassigned);
  for (Element start = 0; start < n; ++start) {
    if (result.block_of[start] != kUnassigned) continue;
    const std::size_t id = result.blocks.size();
    std::vector<Element> block{start};
    result.block_of[start] = id;
    std::queue<Element> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const Element g = frontier.front();
      frontier.pop();
      for (Element h = 0; h < n; ++h) {
        const Element next = step(g, h);
        if (result.block_of[next] == kUnassigned) {
          result.block_of[next] = id;
          block.push_back(next);
          frontier.push(next);
        }
      }
    }
    std::sort(block.begin(), block.end());
    result.blocks.push_back(std::move(block));
  }
  return result;
}

std::vector<std::vector<int>> permutations(std::size_t n, bool even_only) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      std::size_t inversions = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
      }
      if (inversions % 2 != 0) continue;
    }
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

GroupPtr permutation_group(const std::vector<std::vector<int>>& perms, std::string name,
                           const Limits& limits) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  const std::size_t m = perms.size();
  const std::size_t n = perms.front().size();
  RawTable table(m, std::vector<long long>(m));
  std::vector<int> product(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < n; ++i) product[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      table[a][b] = static_cast<long long>(index.at(product));
    }
  }
  std::vector<std::string> labels;
  for (const auto& p : perms) {
    std::string label;
    for (int v : p) label += std::to_string(v + 1);
    labels.push_back(label);
  }
  return FiniteGroup::from_table(table, std::move(labels), std::move(name), limits);
}

std::size_t parse_count(std::string_view digits, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ValidationError("unknown group name '" + std::string(whole) + "'");
  }
  return value;
}

std::size_t spec_order(const GroupSpec& spec) {
  using F = GroupSpec::Family;
  switch (spec.family) {
    case F::Cyclic:
      return spec.n;
    case F::Dihedral:
      return 2 * spec.n;
    case F::Symmetric:
      return factorial(spec.n);
    case F::Alternating:
      return spec.n < 2 ? 1 : factorial(spec.n) / 2;
    case F::Quaternion8:
      return 8;
    case F::DirectProduct: {
      std::size_t order = 1;
      for (const auto& f : spec.factors) order *= spec_order(f);
      return order;
    }
    case F::Raw:
      return spec.table.size();
  }
  return 0;
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  if (const char* cap = std::getenv("DRVKIT_CAP")) {
    std::string_view text(cap);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) limits.order_cap = value;
  }
  return limits;
}

std::string to_string(GroupAxiom axiom) {
  switch (axiom) {
    case GroupAxiom::Shape:
      return "shape";
    case GroupAxiom::Closure:
      return "closure";
    case GroupAxiom::Identity:
      return "identity";
    case GroupAxiom::Cancellation:
      return "cancellation";
    case GroupAxiom::Inverse:
      return "inverse";
    case GroupAxiom::Associativity:
      return "associativity";
  }
  return "unknown";
}

GroupValidation validate_group(const RawTable& table) {
  GroupValidation result;
  const std::size_t n = table.size();
  auto fail = [&](GroupAxiom axiom, std::vector<long long> indices, std::string message) {
    result.violations.push_back({axiom, std::move(indices), std::move(message)});
  };

  if (n == 0) {
    fail(GroupAxiom::Shape, {}, "table is empty");
    return result;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      fail(GroupAxiom::Shape, {static_cast<long long>(i)},
           "row " + std::to_string(i) + " has length " + std::to_string(table[i].size()) +
               ", expected " + std::to_string(n));
      return result;
    }
  }
  const auto size = static_cast<long long>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long long v = table[i][j];
      if (v < 0 || v >= size) {
        fail(GroupAxiom::Closure, {static_cast<long long>(i), static_cast<long long>(j)},
             "entry at " + cell(i, j) + " is " + std::to_string(v) + ", outside 0.." +
                 std::to_string(n - 1));
        return result;
      }
    }
  }

  for (std::size_t e = 0; e < n && !result.identity; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      ok = table[e][j] == static_cast<long long>(j) && table[j][e] == static_cast<long long>(j);
    }
    if (ok) result.identity = e;
  }
  if (!result.identity) fail(GroupAxiom::Identity, {}, "no element acts as a two-sided identity");

  bool cancellation_reported = false;
  for (std::size_t i = 0; i < n && !cancellation_reported; ++i) {
    std::vector<bool> seen_row(n, false);
    std::vector<bool> seen_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      const auto r = static_cast<std::size_t>(table[i][j]);
      if (seen_row[r]) {
        fail(GroupAxiom::Cancellation, {static_cast<long long>(i), static_cast<long long>(j)},
             "row " + std::to_string(i) + " is not a permutation (entry " + std::to_string(r) +
                 " repeats at column " + std::to_string(j) + ")");
        cancellation_reported = true;
        break;
      }
      seen_row[r] = true;
      const auto c = static_cast<std::size_t>(table[j][i]);
      if (seen_col[c]) {
        fail(GroupAxiom::Cancellation, {static_cast<long long>(j), static_cast<long long>(i)},
             "column " + std::to_string(i) + " is not a permutation (entry " + std::to_string(c) +
                 " repeats at row " + std::to_string(j) + ")");
        cancellation_reported = true;
        break;
      }
      seen_col[c] = true;
    }
  }

  if (result.identity) {
    const auto e = static_cast<long long>(*result.identity);
    for (std::size_t i = 0; i < n; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < n && !found; ++j) found = table[i][j] == e && table[j][i] == e;
      if (!found) {
        fail(GroupAxiom::Inverse, {static_cast<long long>(i)},
             "element " + std::to_string(i) + " has no two-sided inverse");
        break;
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = static_cast<std::size_t>(table[i][j]);
      for (std::size_t k = 0; k < n; ++k) {
        const auto jk = static_cast<std::size_t>(table[j][k]);
        if (table[ij][k] != table[i][jk]) {
          fail(GroupAxiom::Associativity,
               {static_cast<long long>(i), static_cast<long long>(j), static_cast<long long>(k)},
               "(g" + std::to_string(i) + " g" + std::to_string(j) + ") g" + std::to_string(k) +
                   " != g" + std::to_string(i) + " (g" + std::to_string(j) + " g" +
                   std::to_string(k) + ")");
          return result;
        }
      }
    }
  }
  return result;
}

GroupPtr FiniteGroup::from_table(const RawTable& table, std::vector<std::string> labels,
                                 std::string name, const Limits& limits) {
  check_cap(table.size(), limits, "group '" + name + "'");
  GroupValidation verdict = validate_group(table);
  if (!verdict.valid()) {
    const auto& first = verdict.violations.front();
    throw ValidationError("invalid Cayley table (" + to_string(first.axiom) + "): " + first.message);
  }
  const std::size_t n = table.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != n) {
    throw ValidationError("expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->order_ = n;
  group->identity_ = *verdict.identity;
  group->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) group->table_[i * n + j] = static_cast<Element>(table[i][j]);
  }
  group->inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (group->table_[i * n + j] == group->identity_) group->inverse_[i] = j;
    }
  }
  group->labels_ = std::move(labels);
  group->name_ = std::move(name);
  return group;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t i = 0; i < order_; ++i) {
    out[i].assign(table_.begin() + static_cast<std::ptrdiff_t>(i * order_),
                  table_.begin() + static_cast<std::ptrdiff_t>((i + 1) * order_));
  }
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Element g) const {
  std::size_t k = 1;
  for (Element x = g; x != identity_; x = multiply(x, g)) ++k;
  return k;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return order_ == other.order_ && table_ == other.table_;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

GroupSpec GroupSpec::parse(std::string_view name) {
  if (name.find('x') != std::string_view::npos) {
    GroupSpec spec;
    spec.family = Family::DirectProduct;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = name.find('x', start);
      spec.factors.push_back(parse(name.substr(start, pos - start)));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return spec;
  }
  if (name == "Q8") return GroupSpec{Family::Quaternion8, 8, {}, {}};
  if (name.size() < 2) throw ValidationError("unknown group name '" + std::string(name) + "'");
  GroupSpec spec;
  spec.n = parse_count(name.substr(1), name);
  switch (name.front()) {
    case 'C':
      spec.family = Family::Cyclic;
      break;
    case 'D':
      spec.family = Family::Dihedral;
      break;
    case 'S':
      spec.family = Family::Symmetric;
      break;
    case 'A':
      spec.family = Family::Alternating;
      break;
    default:
      throw ValidationError("unknown group name '" + std::string(name) + "'");
  }
  return spec;
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::Cyclic:
      return "C" + std::to_string(n);
    case Family::Dihedral:
      return "D" + std::to_string(n);
    case Family::Symmetric:
      return "S" + std::to_string(n);
    case Family::Alternating:
      return "A" + std::to_string(n);
    case Family::Quaternion8:
      return "Q8";
    case Family::DirectProduct: {
      std::string out;
      for (const auto& f : factors) out += (out.empty() ? "" : "x") + f.name();
      return out;
    }
    case Family::Raw:
      return "raw";
  }
  return "?";
}

GroupPtr build_group(const GroupSpec& spec, const Limits& limits) {
  using F = GroupSpec::Family;
  if (spec.family != F::Raw) check_cap(spec_order(spec), limits, spec.name());
  switch (spec.family) {
    case F::Cyclic:
      return cyclic_group(spec.n, limits);
    case F::Dihedral:
      return dihedral_group(spec.n, limits);
    case F::Symmetric:
      return symmetric_group(spec.n, limits);
    case F::Alternating:
      return alternating_group(spec.n, limits);
    case F::Quaternion8:
      return quaternion_group();
    case F::DirectProduct: {
      if (spec.factors.empty()) throw ValidationError("direct product needs at least one factor");
      GroupPtr g = build_group(spec.factors.front(), limits);
      for (std::size_t i = 1; i < spec.factors.size(); ++i) {
        g = direct_product(g, build_group(spec.factors[i], limits), limits);
      }
      return g;
    }
    case F::Raw:
      return FiniteGroup::from_table(spec.table, {}, "raw", limits);
  }
  throw ValidationError("unknown group family");
}

GroupPtr build_group(std::string_view name, const Limits& limits) {
  return build_group(GroupSpec::parse(name), limits);
}

GroupPtr cyclic_group(std::size_t n, const Limits& limits) {
  if (n < 1) throw ValidationError("cyclic group needs n >= 1");
  check_cap(n, limits, "C" + std::to_string(n));
  RawTable table(n, std::vector<long long>(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = static_cast<long long>((i + j) % n);
    labels.push_back(i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i));
  }
  return FiniteGroup::from_table(table, std::move(labels), "C" + std::to_string(n), limits);
}

GroupPtr dihedral_group(std::size_t n, const Limits& limits) {
  if (n < 3) throw ValidationError("dihedral group needs n >= 3");
  check_cap(2 * n, limits, "D" + std::to_string(n));
  const std::size_t m = 2 * n;
  RawTable table(m, std::vector<long long>(m));
  // s^f1 r^k1 * s^f2 r^k2 = s^(f1+f2) r^((-1)^f2 k1 + k2)
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const std::size_t f1 = a / n, k1 = a % n, f2 = b / n, k2 = b % n;
      const std::size_t k = ((f2 == 1 ? n - k1 : k1) + k2) % n;
      table[a][b] = static_cast<long long>(((f1 + f2) % 2) * n + k);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t f = 0; f < 2; ++f) {
    for (std::size_t k = 0; k < n; ++k) {
      std::string r = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
      labels.push_back(f == 0 ? (k == 0 ? "e" : r) : "s" + r);
    }
  }
  return FiniteGroup::from_table(table, std::move(labels), "D" + std::to_string(n), limits);
}

GroupPtr symmetric_group(std::size_t n, const Limits& limits) {
  if (n < 1 || n > 5) throw ValidationError("symmetric group needs 1 <= n <= 5");
  check_cap(factorial(n), limits, "S" + std::to_string(n));
  return permutation_group(permutations(n, false), "S" + std::to_string(n), limits);
}

GroupPtr alternating_group(std::size_t n, const Limits& limits) {
  if (n < 1 || n > 5) throw ValidationError("alternating group needs 1 <= n <= 5");
  check_cap(n < 2 ? 1 : factorial(n) / 2, limits, "A" + std::to_string(n));
  return permutation_group(permutations(n, true), "A" + std::to_string(n), limits);
}

GroupPtr quaternion_group() {
  // Units 1, i, j, k as 0..3; unit_product[a][b] = {sign, unit}.
  constexpr std::array<std::array<std::array<int, 2>, 4>, 4> unit_product{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  RawTable table(8, std::vector<long long>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const int sign_a = a % 2 == 0 ? 1 : -1;
      const int sign_b = b % 2 == 0 ? 1 : -1;
      const auto& [sign_u, unit] = unit_product[a / 2][b / 2];
      const int sign = sign_a * sign_b * sign_u;
      table[a][b] = 2 * unit + (sign < 0 ? 1 : 0);
    }
  }
  return FiniteGroup::from_table(table, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Limits& limits) {
  const std::size_t na = a->order(), nb = b->order();
  const std::string name = a->name() + "x" + b->name();
  check_cap(na * nb, limits, name);
  RawTable table(na * nb, std::vector<long long>(na * nb));
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < na * nb; ++x) {
    for (std::size_t y = 0; y < na * nb; ++y) {
      table[x][y] = static_cast<long long>(a->multiply(x / nb, y / nb) * nb + b->multiply(x % nb, y % nb));
    }
    labels.push_back("(" + a->label(x / nb) + "," + b->label(x % nb) + ")");
  }
  return FiniteGroup::from_table(table, std::move(labels), name, limits);
}

GroupHomomorphism::GroupHomomorphism(GroupPtr source, GroupPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  HomValidation verdict = validate(*source_, *target_, images_);
  if (!verdict.valid()) throw ValidationError("invalid homomorphism: " + verdict.violations.front());
}

GroupHomomorphism GroupHomomorphism::identity(const GroupPtr& group) {
  std::vector<Element> images(group->order());
  std::iota(images.begin(), images.end(), Element{0});
  return GroupHomomorphism(group, group, std::move(images));
}

HomValidation GroupHomomorphism::validate(const FiniteGroup& source, const FiniteGroup& target,
                                          const std::vector<Element>& images) {
  HomValidation result;
  if (images.size() != source.order()) {
    result.violations.push_back("expected " + std::to_string(source.order()) + " images, got " +
                                std::to_string(images.size()));
    return result;
  }
  for (std::size_t g = 0; g < images.size(); ++g) {
    if (images[g] >= target.order()) {
      result.violations.push_back("image of " + std::to_string(g) + " is " + std::to_string(images[g]) +
                                  ", not an element of the target");
      return result;
    }
  }
  if (images[source.identity()] != target.identity()) {
    result.violations.push_back("identity maps to " + std::to_string(images[source.identity()]) +
                                ", not the identity");
  }
  for (Element g = 0; g < source.order(); ++g) {
    for (Element h = 0; h < source.order(); ++h) {
      if (images[source.multiply(g, h)] != target.multiply(images[g], images[h])) {
        result.violations.push_back("phi(" + std::to_string(g) + " * " + std::to_string(h) +
                                    ") != phi(" + std::to_string(g) + ") * phi(" + std::to_string(h) + ")");
        return result;
      }
    }
  }
  return result;
}

bool GroupHomomorphism::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  std::vector<bool> hit(target_->order(), false);
  for (Element img : images_) {
    if (hit[img]) return false;
    hit[img] = true;
  }
  return true;
}

bool GroupHomomorphism::is_identity() const {
  if (!is_endomorphism()) return false;
  for (Element g = 0; g < images_.size(); ++g) {
    if (images_[g] != g) return false;
  }
  return true;
}

GroupHomomorphism GroupHomomorphism::after(const GroupHomomorphism& first) const {
  if (!same_group(first.target_, source_)) throw MismatchError("composing homomorphisms with mismatched groups");
  std::vector<Element> images(first.source_->order());
  for (Element g = 0; g < images.size(); ++g) images[g] = images_[first(g)];
  return GroupHomomorphism(first.source_, target_, std::move(images));
}

GroupHomomorphism inner_automorphism(const GroupPtr& group, Element s) {
  if (s >= group->order()) {
    throw ValidationError("element index " + std::to_string(s) + " out of range for " + group->name());
  }
  const Element s_inv = group->inverse(s);
  std::vector<Element> images(group->order());
  for (Element g = 0; g < group->order(); ++g) images[g] = group->multiply(group->multiply(s, g), s_inv);
  return GroupHomomorphism(group, group, std::move(images));
}

std::vector<GroupHomomorphism> inner_automorphisms(const GroupPtr& group) {
  std::vector<GroupHomomorphism> out;
  for (Element s = 0; s < group->order(); ++s) {
    GroupHomomorphism phi = inner_automorphism(group, s);
    if (std::find(out.begin(), out.end(), phi) == out.end()) out.push_back(std::move(phi));
  }
  return out;
}

Partition conjugacy_classes(const FiniteGroup& group) {
  return orbit_partition(group.order(), [&](Element g, Element h) {
    return group.multiply(group.multiply(group.inverse(h), g), h);
  });
}

Partition twisted_orbits(const GroupHomomorphism& sigma, const GroupHomomorphism& tau) {
  if (!sigma.is_endomorphism() || !tau.is_endomorphism() || !same_group(sigma.source(), tau.source())) {
    throw MismatchError("twisted orbits need two endomorphisms of one group");
  }
  const FiniteGroup& group = *sigma.source();
  return orbit_partition(group.order(), [&](Element g, Element h) {
    return group.multiply(group.multiply(group.inverse(sigma(h)), g), tau(h));
  });
}

}  // namespace drvkit

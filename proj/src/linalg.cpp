#include "drvkit/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "drvkit/error.hpp"

namespace drvkit {

namespace {

template <typename Value>
using Row = std::vector<std::pair<std::size_t, Value>>;

template <typename Value>
const Value* find_entry(const Row<Value>& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

// Fraction-free kernel over Q. Rows are integer vectors with content 1 and
// a positive leading entry; eliminating column c from `target` replaces it
// by (b/g) * target - (a/g) * pivot with a, b the two entries at c.
class IntegerKernel {
 public:
  using Value = mpz_class;

  Row<Value> convert(const std::vector<SparseSystem::Entry>& entries, const Scalar* rhs,
                     std::size_t rhs_col) const {
    mpz_class lcm = 1;
    for (const auto& [c, s] : entries) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), s.rational().get_den_mpz_t());
    if (rhs != nullptr && !rhs->is_zero()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), rhs->rational().get_den_mpz_t());
    }
    Row<Value> row;
    row.reserve(entries.size() + 1);
    auto push = [&](std::size_t c, const Scalar& s) {
      const mpq_class& q = s.rational();
      mpz_class v = lcm / q.get_den();
      v *= q.get_num();
      row.emplace_back(c, std::move(v));
    };
    for (const auto& [c, s] : entries) push(c, s);
    if (rhs != nullptr && !rhs->is_zero()) push(rhs_col, *rhs);
    normalize(row);
    return row;
  }

  void normalize(Row<Value>& row) const {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& e : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
      if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1) {
      for (auto& e : row) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
    }
  }

  void eliminate(Row<Value>& target, const Row<Value>& pivot, std::size_t col) const {
    const mpz_class* a_ptr = find_entry(target, col);
    if (a_ptr == nullptr) return;
    const mpz_class& b = pivot.front().second;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a_ptr->get_mpz_t(), b.get_mpz_t());
    mpz_class scale_target = b / g;
    mpz_class scale_pivot = *a_ptr / g;

    Row<Value> out;
    out.reserve(target.size() + pivot.size());
    auto t = target.begin();
    auto p = pivot.begin();
    mpz_class v;
    while (t != target.end() || p != pivot.end()) {
      if (p == pivot.end() || (t != target.end() && t->first < p->first)) {
        v = t->second * scale_target;
        out.emplace_back(t->first, v);
        ++t;
      } else if (t == target.end() || p->first < t->first) {
        v = -(p->second * scale_pivot);
        out.emplace_back(p->first, v);
        ++p;
      } else {
        mpz_mul(v.get_mpz_t(), t->second.get_mpz_t(), scale_target.get_mpz_t());
        mpz_submul(v.get_mpz_t(), p->second.get_mpz_t(), scale_pivot.get_mpz_t());
        if (sgn(v) != 0) out.emplace_back(t->first, v);
        ++t;
        ++p;
      }
    }
    target = std::move(out);
    normalize(target);
  }

  Scalar ratio(const Value& value, const Value& lead) const { return Scalar(mpq_class(value, lead)); }
};

class ModularKernel {
 public:
  using Value = std::uint32_t;

  explicit ModularKernel(std::uint32_t p) : p_(p) {}

  Row<Value> convert(const std::vector<SparseSystem::Entry>& entries, const Scalar* rhs,
                     std::size_t rhs_col) const {
    Row<Value> row;
    row.reserve(entries.size() + 1);
    for (const auto& [c, s] : entries) row.emplace_back(c, s.mod_p().residue);
    if (rhs != nullptr && !rhs->is_zero()) row.emplace_back(rhs_col, rhs->mod_p().residue);
    normalize(row);
    return row;
  }

  void normalize(Row<Value>& row) const {
    if (row.empty() || row.front().second == 1) return;
    std::uint32_t inv = inverse(row.front().second);
    for (auto& e : row) e.second = mul(e.second, inv);
  }

  void eliminate(Row<Value>& target, const Row<Value>& pivot, std::size_t col) const {
    const Value* a_ptr = find_entry(target, col);
    if (a_ptr == nullptr) return;
    const std::uint32_t factor = p_ - *a_ptr;  // -a; pivot lead is 1
    Row<Value> out;
    out.reserve(target.size() + pivot.size());
    auto t = target.begin();
    auto p = pivot.begin();
    while (t != target.end() || p != pivot.end()) {
      if (p == pivot.end() || (t != target.end() && t->first < p->first)) {
        out.push_back(*t++);
      } else if (t == target.end() || p->first < t->first) {
        out.emplace_back(p->first, mul(p->second, factor));
        ++p;
      } else {
        std::uint32_t v = add(t->second, mul(p->second, factor));
        if (v != 0) out.emplace_back(t->first, v);
        ++t;
        ++p;
      }
    }
    target = std::move(out);
    normalize(target);
  }

  Scalar ratio(Value value, Value lead) const {
    return Scalar(ModP{mul(value, inverse(lead)), p_});
  }

 private:
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t inverse(std::uint32_t a) const {
    std::uint32_t result = 1;
    std::uint32_t base = a;
    std::uint32_t exp = p_ - 2;
    while (exp > 0) {
      if (exp & 1) result = mul(result, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return result;
  }

  std::uint32_t p_;
};

template <typename Kernel>
Echelon reduce_with(const Kernel& kernel, const SparseSystem& system, bool augmented) {
  using Value = typename Kernel::Value;
  const std::size_t cols = system.cols();
  const std::size_t width = cols + (augmented ? 1 : 0);

  std::vector<Row<Value>> pivot_rows;
  std::vector<std::ptrdiff_t> pivot_of_col(width, -1);

  // Forward pass: reduce each incoming row against the pivots found so far.
  for (std::size_t r = 0; r < system.rows(); ++r) {
    Row<Value> row = kernel.convert(system.row(r), augmented ? &system.rhs(r) : nullptr, cols);
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      const std::ptrdiff_t pivot = pivot_of_col[lead];
      if (pivot < 0) {
        pivot_of_col[lead] = static_cast<std::ptrdiff_t>(pivot_rows.size());
        pivot_rows.push_back(std::move(row));
        break;
      }
      kernel.eliminate(row, pivot_rows[pivot], lead);
    }
  }

  // Order rows by pivot column, then clear every pivot column above its pivot.
  std::vector<std::size_t> order;
  for (std::size_t c = 0; c < width; ++c) {
    if (pivot_of_col[c] >= 0) order.push_back(static_cast<std::size_t>(pivot_of_col[c]));
  }
  std::vector<Row<Value>> rows;
  rows.reserve(order.size());
  for (std::size_t idx : order) rows.push_back(std::move(pivot_rows[idx]));

  for (std::size_t i = rows.size(); i-- > 0;) {
    const std::size_t col = rows[i].front().first;
    for (std::size_t j = 0; j < i; ++j) kernel.eliminate(rows[j], rows[i], col);
  }

  Echelon result;
  result.cols = cols;
  result.rows.reserve(rows.size());
  for (const auto& row : rows) {
    const std::size_t col = row.front().first;
    result.pivots.push_back(col);
    if (col == cols) result.inconsistent = true;
    std::vector<SparseSystem::Entry> out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) out.emplace_back(c, kernel.ratio(v, row.front().second));
    result.rows.push_back(std::move(out));
  }
  return result;
}

}  // namespace

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(ring)) {}

Matrix Matrix::from_rows(Ring ring, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MismatchError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Scalar::from_int(ring, rows[r][c]));
  }
  return m;
}

Matrix Matrix::from_rows(Ring ring, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw MismatchError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (value.is_rational() != ring_.uses_rationals() ||
      (!value.is_rational() && value.mod_p().modulus != ring_.modulus())) {
    throw MismatchError("matrix entry outside the ring " + ring_.to_string());
  }
  entries_[r * cols_ + c] = std::move(value);
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw MismatchError("matrix-vector dimension mismatch");
  Vector out(rows_, Scalar::zero(ring_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r].add_product(at(r, c), v[c]);
  }
  return out;
}

SparseSystem SparseSystem::from_matrix(const Matrix& a) {
  SparseSystem system(a.ring(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<Entry> entries;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a.at(r, c).is_zero()) entries.emplace_back(c, a.at(r, c));
    }
    system.add_row(std::move(entries));
  }
  return system;
}

void SparseSystem::add_row(std::vector<Entry> entries, Scalar rhs) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& x, const Entry& y) { return x.first < y.first; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (auto& e : entries) {
    if (e.first >= cols_) throw MismatchError("sparse entry column out of range");
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
  rows_.push_back(std::move(merged));
  rhs_.push_back(std::move(rhs));
}

Echelon reduce(const SparseSystem& system, bool augmented) {
  if (system.ring().kind() == RingKind::Prime) {
    return reduce_with(ModularKernel(system.ring().modulus()), system, augmented);
  }
  return reduce_with(IntegerKernel{}, system, augmented);
}

std::vector<Vector> nullspace_basis(const SparseSystem& system) {
  const Echelon ech = reduce(system, false);
  const std::size_t n = system.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  std::vector<std::ptrdiff_t> free_index(n, -1);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      free_index[c] = static_cast<std::ptrdiff_t>(free_cols.size());
      free_cols.push_back(c);
    }
  }

  const Ring& ring = system.ring();
  std::vector<Vector> basis(free_cols.size(), Vector(n, Scalar::zero(ring)));
  for (std::size_t k = 0; k < free_cols.size(); ++k) basis[k][free_cols[k]] = Scalar::one(ring);
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    const std::size_t pc = ech.pivots[r];
    for (const auto& [c, v] : ech.rows[r]) {
      if (c == pc) continue;
      basis[static_cast<std::size_t>(free_index[c])][pc] = -v;
    }
  }
  return basis;
}

std::vector<Vector> nullspace_basis(const Matrix& a) {
  return nullspace_basis(SparseSystem::from_matrix(a));
}

std::optional<Vector> solve_particular(const SparseSystem& system) {
  const Echelon ech = reduce(system, true);
  if (ech.inconsistent) return std::nullopt;
  const std::size_t n = system.cols();
  Vector solution(n, Scalar::zero(system.ring()));
  for (std::size_t r = 0; r < ech.rows.size(); ++r) {
    const auto& last = ech.rows[r].back();
    if (last.first == n) solution[ech.pivots[r]] = last.second;
  }
  return solution;
}

std::optional<Vector> solve_particular(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw MismatchError("right-hand side length does not match row count");
  SparseSystem system(a.ring(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (b[r].is_rational() != a.ring().uses_rationals() ||
        (!b[r].is_rational() && b[r].mod_p().modulus != a.ring().modulus())) {
      throw MismatchError("right-hand side outside the ring " + a.ring().to_string());
    }
    std::vector<SparseSystem::Entry> entries;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!a.at(r, c).is_zero()) entries.emplace_back(c, a.at(r, c));
    }
    system.add_row(std::move(entries), b[r]);
  }
  return solve_particular(system);
}

std::size_t rank(const SparseSystem& system) { return reduce(system, false).rank(); }

std::size_t rank(const Matrix& a) { return rank(SparseSystem::from_matrix(a)); }

std::size_t rank_of(const Ring& ring, const std::vector<Vector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(ring, vectors));
}

bool same_span(const Ring& ring, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  const std::size_t ra = rank_of(ring, a);
  const std::size_t rb = rank_of(ring, b);
  if (ra != rb) return false;
  std::vector<Vector> stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  return rank_of(ring, stacked) == ra;
}

}  // namespace drvkit

#include "drvkit/scalar.hpp"

#include <charconv>
#include <limits>

#include "drvkit/error.hpp"

namespace drvkit {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

std::uint32_t reduce(long long value, std::uint32_t p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

[[noreturn]] void kind_mismatch() {
  throw MismatchError("scalar arithmetic across rational and modular values");
}

void check_same_modulus(const ModP& a, const ModP& b) {
  if (a.modulus != b.modulus) {
    throw MismatchError("scalar arithmetic across F_" + std::to_string(a.modulus) + " and F_" +
                        std::to_string(b.modulus));
  }
}

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_decimal_integer(s)) {
    throw ValidationError("malformed coefficient '" + std::string(whole) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (p >= kMaxModulus || !is_prime(p)) {
    throw ValidationError("F_p requires a prime p < 2^31, got " + std::to_string(p));
  }
  return Ring(RingKind::Prime, static_cast<std::uint32_t>(p));
}

Ring Ring::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text == "Z") return integers();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("GF")) {
    digits = text.substr(2);
  } else if (text.starts_with("F")) {
    digits = text.substr(1);
  } else {
    throw ValidationError("unknown ring '" + std::string(text) + "' (expected Q, Z or Fp:<p>)");
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw ValidationError("unknown ring '" + std::string(text) + "' (expected Q, Z or Fp:<p>)");
  }
  return prime_field(p);
}

bool Ring::compatible(const Ring& other) const {
  if (uses_rationals() && other.uses_rationals()) return true;
  return kind_ == RingKind::Prime && other.kind_ == RingKind::Prime && modulus_ == other.modulus_;
}

Ring Ring::fraction_field() const {
  return kind_ == RingKind::Integer ? rationals() : *this;
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::Rational:
      return "Q";
    case RingKind::Integer:
      return "Z";
    case RingKind::Prime:
      return "Fp:" + std::to_string(modulus_);
  }
  return "?";
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::zero(const Ring& ring) {
  if (ring.kind() == RingKind::Prime) return Scalar(ModP{0, ring.modulus()});
  return Scalar();
}

Scalar Scalar::one(const Ring& ring) { return from_int(ring, 1); }

Scalar Scalar::from_int(const Ring& ring, long value) {
  if (ring.kind() == RingKind::Prime) return Scalar(ModP{reduce(value, ring.modulus()), ring.modulus()});
  return Scalar(mpq_class(value));
}

Scalar Scalar::from_fraction(const Ring& ring, long num, long den) {
  if (den == 0) throw ValidationError("zero denominator");
  return from_int(ring, num) / from_int(ring, den);
}

Scalar Scalar::parse(std::string_view text, const Ring& ring) {
  auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  if (ring.kind() == RingKind::Prime) {
    mpz_class p = ring.modulus();
    mpz_class n = num % p;
    if (n < 0) n += p;
    mpz_class d = den % p;
    if (d < 0) d += p;
    Scalar a(ModP{static_cast<std::uint32_t>(n.get_ui()), ring.modulus()});
    Scalar b(ModP{static_cast<std::uint32_t>(d.get_ui()), ring.modulus()});
    return a / b;
  }
  return Scalar(mpq_class(num, den));
}

const mpq_class& Scalar::rational() const {
  if (!is_rational()) throw MismatchError("expected a rational scalar");
  return std::get<mpq_class>(value_);
}

ModP Scalar::mod_p() const {
  if (is_rational()) throw MismatchError("expected a modular scalar");
  return std::get<ModP>(value_);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<ModP>(value_).residue == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  const auto& m = std::get<ModP>(value_);
  return m.residue == 1 % m.modulus;
}

bool Scalar::is_integer() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_den() == 1;
  return true;
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  auto m = std::get<ModP>(value_);
  m.residue = m.residue == 0 ? 0 : m.modulus - m.residue;
  return Scalar(m);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    auto* r = std::get_if<mpq_class>(&rhs.value_);
    if (r == nullptr) kind_mismatch();
    *q += *r;
    return *this;
  }
  auto* r = std::get_if<ModP>(&rhs.value_);
  if (r == nullptr) kind_mismatch();
  auto& m = std::get<ModP>(value_);
  check_same_modulus(m, *r);
  std::uint64_t s = static_cast<std::uint64_t>(m.residue) + r->residue;
  m.residue = static_cast<std::uint32_t>(s >= m.modulus ? s - m.modulus : s);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    auto* r = std::get_if<mpq_class>(&rhs.value_);
    if (r == nullptr) kind_mismatch();
    *q -= *r;
    return *this;
  }
  return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    auto* r = std::get_if<mpq_class>(&rhs.value_);
    if (r == nullptr) kind_mismatch();
    *q *= *r;
    return *this;
  }
  auto* r = std::get_if<ModP>(&rhs.value_);
  if (r == nullptr) kind_mismatch();
  auto& m = std::get<ModP>(value_);
  check_same_modulus(m, *r);
  m.residue = mul_mod(m.residue, r->residue, m.modulus);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    auto* x = std::get_if<mpq_class>(&a.value_);
    auto* y = std::get_if<mpq_class>(&b.value_);
    if (x == nullptr || y == nullptr) kind_mismatch();
    if (sgn(*x) == 0 || sgn(*y) == 0) return;
    if (x->get_den() == 1 && y->get_den() == 1 && q->get_den() == 1) {
      mpz_addmul(q->get_num_mpz_t(), x->get_num_mpz_t(), y->get_num_mpz_t());
      return;
    }
    *q += (*x) * (*y);
    return;
  }
  *this += a * b;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.value_.index() != rhs.value_.index()) return false;
  if (auto* q = std::get_if<mpq_class>(&lhs.value_)) return *q == std::get<mpq_class>(rhs.value_);
  return std::get<ModP>(lhs.value_) == std::get<ModP>(rhs.value_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1 / *q));
  auto m = std::get<ModP>(value_);
  m.residue = pow_mod(m.residue, m.modulus - 2, m.modulus);
  return Scalar(m);
}

Scalar Scalar::floor() const {
  const mpq_class& q = rational();
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Scalar(mpq_class(f));
}

Scalar Scalar::fractional_part() const { return *this - floor(); }

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str(10);
  return std::to_string(std::get<ModP>(value_).residue);
}

}  // namespace drvkit

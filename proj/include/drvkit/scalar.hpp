#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace drvkit {

enum class RingKind : std::uint8_t { Rational, Integer, Prime };

/// Coefficient ring descriptor: Q, Z, or F_p with p prime and p < 2^31.
///
/// Z shares the scalar representation of Q. Integrality of a value is a
/// predicate checked on demand, never enforced on construction.
class Ring {
 public:
  static Ring rationals() { return Ring(RingKind::Rational, 0); }
  static Ring integers() { return Ring(RingKind::Integer, 0); }
  /// Throws ValidationError unless p is a prime below 2^31.
  static Ring prime_field(std::uint64_t p);
  /// Accepts "Q", "Z", "Fp:<p>" (also "F<p>" and "GF<p>").
  static Ring parse(std::string_view text);

  RingKind kind() const { return kind_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t characteristic() const { return modulus_; }
  bool is_field() const { return kind_ != RingKind::Integer; }
  bool uses_rationals() const { return kind_ != RingKind::Prime; }

  /// True when values of both rings share one scalar domain (Z ~ Q).
  bool compatible(const Ring& other) const;
  /// Z lifts to Q; fields map to themselves.
  Ring fraction_field() const;

  std::string to_string() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(RingKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

/// Residue class modulo a prime, always reduced into [0, p).
struct ModP {
  std::uint32_t residue = 0;
  std::uint32_t modulus = 2;

  friend bool operator==(const ModP&, const ModP&) = default;
};

/// Exact scalar: a canonical rational (lowest terms, positive denominator)
/// or a residue modulo a prime.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class value);
  explicit Scalar(ModP value) : value_(value) {}

  static Scalar zero(const Ring& ring);
  static Scalar one(const Ring& ring);
  static Scalar from_int(const Ring& ring, long value);
  static Scalar from_fraction(const Ring& ring, long num, long den);
  /// Parses "a", "-a" or "a/b" in decimal. Over F_p, "a/b" means a * b^-1.
  static Scalar parse(std::string_view text, const Ring& ring);

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const;
  ModP mod_p() const;

  bool is_zero() const;
  bool is_one() const;
  /// Denominator 1 for rationals; always true for residues.
  bool is_integer() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);
  /// this += a * b, without a temporary on the rational path.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  Scalar inverse() const;
  /// floor(q) for a rational q.
  Scalar floor() const;
  /// q - floor(q), in [0, 1).
  Scalar fractional_part() const;

  /// "a" or "a/b" for rationals, the residue for F_p.
  std::string to_string() const;

 private:
  std::variant<mpq_class, ModP> value_;
};

}  // namespace drvkit

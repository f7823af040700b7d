#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "orthocurrent/error.hpp"
#include "orthocurrent/poly.hpp"

namespace orthocurrent {

class Field;
class FieldElement;

enum class FieldKind { Rationals, PrimeField, RationalFunctionField, QuadraticExtension };

/// Element of F_p(t) kept as num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction(PolyFp num, PolyFp den);
  explicit RationalFunction(PolyFp num);

  const PolyFp& num() const noexcept { return num_; }
  const PolyFp& den() const noexcept { return den_; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  PolyFp num_;
  PolyFp den_;
};

/// Coordinates (u, v) of u + v*sqrt(D) over the base field.
struct QuadPair {
  std::shared_ptr<const std::pair<FieldElement, FieldElement>> uv;
};

namespace detail {
struct FieldData;
}

/// Descriptor of an exact coefficient field. Cheap to copy; equality is
/// structural.
class Field {
 public:
  static Field rationals();
  /// Throws NotPrime unless p is prime and below 2^31.
  static Field prime(std::uint64_t p);
  static Field rational_functions(std::uint64_t p, std::string variable = "t");
  /// F[sqrt D]; throws Domain when D is zero or a square in `base`.
  static Field quadratic_extension(const Field& base, const FieldElement& radicand);
  /// "Q" | "F<p>" | "F<p>(<var>)" | "<field>[sqrt <D>]".
  static Field parse(std::string_view literal);

  FieldKind kind() const noexcept;
  std::uint32_t characteristic() const noexcept;
  /// Variable name of a rational function field.
  const std::string& variable() const;
  /// Base field and radicand of a quadratic extension.
  const Field& base() const;
  const FieldElement& radicand() const;
  /// Number of elements for a prime field, nullopt for infinite fields.
  std::optional<std::uint32_t> finite_order() const noexcept;

  std::string to_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long n) const;
  FieldElement from_integer(const mpz_class& n) const;
  FieldElement from_rational(const mpq_class& q) const;
  FieldElement from_residue(std::uint64_t r) const;
  FieldElement from_polys(const PolyFp& num, const PolyFp& den) const;
  FieldElement from_pair(const FieldElement& u, const FieldElement& v) const;
  /// The generator t of F_p(t).
  FieldElement generator() const;
  /// sqrt(D) inside F[sqrt D].
  FieldElement sqrt_radicand() const;
  /// Image of a base-field element in a quadratic extension (or tower).
  FieldElement embed(const FieldElement& x) const;

  friend bool operator==(const Field& a, const Field& b);
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;

  friend class FieldElement;
};

/// Exact scalar tagged with its field. The payload is always canonical, so
/// structural equality is semantic equality.
class FieldElement {
 public:
  using Payload = std::variant<mpq_class, std::uint32_t, RationalFunction, QuadPair>;

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(payload_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(payload_); }
  const RationalFunction& ratfunc() const { return std::get<RationalFunction>(payload_); }
  const FieldElement& quad_u() const { return std::get<QuadPair>(payload_).uv->first; }
  const FieldElement& quad_v() const { return std::get<QuadPair>(payload_).uv->second; }

  /// Throws DivisionByZero for 0.
  FieldElement inv() const;
  FieldElement pow(long long e) const;

  /// Canonical literal; parse_scalar(to_string(), field()) == *this.
  std::string to_string() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  FieldElement(Field field, Payload payload) : field_(std::move(field)), payload_(std::move(payload)) {}

  Field field_;
  Payload payload_;

  friend class Field;
};

/// Parses an element literal; see README for the grammar. Throws Syntax for
/// malformed input and Domain for undefined values such as 1/2 in F_2.
FieldElement parse_scalar(std::string_view literal, const Field& field);

FieldElement inv(const FieldElement& x);

/// Square root in the same field, if one exists. The choice is
/// deterministic: nonnegative over Q, least residue over F_p, and for
/// F_p(t) the root whose numerator has the smaller leading coefficient.
std::optional<FieldElement> is_square(const FieldElement& x);

/// p-th root in a field of characteristic p, if one exists. Throws Domain in
/// characteristic 0.
std::optional<FieldElement> pth_root(const FieldElement& x);

/// F_p(t) -> F_p(u), t |-> u^p. The target must be a rational function field
/// over the same prime.
FieldElement frobenius_embed(const FieldElement& x, const Field& target);

/// Random element for property tests and random subspaces. Small heights
/// keep the exact arithmetic cheap.
FieldElement random_element(const Field& field, std::mt19937_64& rng);
FieldElement random_nonzero(const Field& field, std::mt19937_64& rng);

}  // namespace orthocurrent

#ifndef GALIE_FIELD_HPP
#define GALIE_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace galie {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

bool is_prime(std::uint32_t n);

/// The base field: either Q or F_p for a verified prime p.
struct Field {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;

  static Field rationals() { return Field{FieldKind::Rationals, 0}; }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return kind == FieldKind::Rationals; }
  bool is_prime_field() const { return kind == FieldKind::PrimeField; }

  /// Characteristic (0 for Q, p for F_p).
  std::uint32_t characteristic() const { return is_rationals() ? 0 : p; }

  bool operator==(const Field&) const = default;

  std::string to_string() const;
  /// Parses "Q" or "F<p>"; empty on failure.
  static std::optional<Field> parse(const std::string& text);
};

/// An exact field element. Rationals are kept reduced (boost does this
/// canonically); prime-field residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  static Scalar zero(const Field& f) { return from_int(f, 0); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long v);
  static Scalar from_rational(Rational q);
  static Scalar residue(const Field& f, std::uint32_t r);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  /// Lexicographic-friendly total order within one field.
  bool operator<(const Scalar& o) const;

  /// For prime fields: the residue in [0, p).
  std::uint32_t residue_value() const;
  /// For rationals: the reduced value.
  const Rational& rational_value() const;

  /// "a" or "a/b" over Q; decimal residue over F_p.
  std::string to_string() const;
  /// Inverse of to_string; accepts "a", "-a", "a/b" over Q, residues or
  /// negative integers over F_p. Empty optional on bad syntax.
  static std::optional<Scalar> parse(const Field& f, const std::string& text);

 private:
  void check_same_field(const Scalar& o) const;

  Field field_ = Field::rationals();
  Rational q_ = 0;       // Rationals only
  std::uint32_t r_ = 0;  // PrimeField only
};

}  // namespace galie

#endif

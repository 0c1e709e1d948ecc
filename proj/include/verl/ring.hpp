#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace verl {

/// Coefficient storage shared by every ring instance.
using Scalar = mpq_class;

/**
 * A commutative ring with unity: the integers, the rationals, or Z/nZ.
 *
 * Coefficients are held as Scalar values normalized for the ring: integral for
 * Z, canonical fractions for Q, and residues in [0, n) for Z/nZ.
 */
class Ring {
 public:
  enum class Kind { integer, rational, modular };

  static Ring integers() { return Ring(Kind::integer, 0); }
  static Ring rationals() { return Ring(Kind::rational, 0); }
  static Ring modulo(unsigned long n);

  /// Parses "int", "rat" or "mod:<n>".
  static Ring from_name(std::string_view name);
  std::string name() const;

  Kind kind() const noexcept { return kind_; }
  unsigned long modulus() const noexcept { return modulus_; }
  bool is_prime_field() const;

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return normalize(Scalar(1)); }

  /// Maps any rational into the ring. Throws ParseError for non-integers in Z
  /// and for denominators that are not units in Z/nZ.
  Scalar normalize(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  bool eq(const Scalar& a, const Scalar& b) const { return normalize(a) == normalize(b); }
  bool is_zero(const Scalar& a) const { return normalize(a) == 0; }
  bool is_unit(const Scalar& a) const;

  /// Multiplicative inverse of a unit.
  Scalar inverse(const Scalar& a) const;

  std::string render(const Scalar& a) const;
  Scalar parse(std::string_view text) const;

  bool operator==(const Ring& other) const = default;

 private:
  Ring(Kind kind, unsigned long modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  unsigned long modulus_;
};

}  // namespace verl

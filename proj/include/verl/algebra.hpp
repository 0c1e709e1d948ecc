#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "verl/group.hpp"
#include "verl/ring.hpp"

namespace verl {

/**
 * An element sum_g x_g g of the group algebra RG.
 *
 * Terms are kept sparse and normalized: no stored coefficient is zero, so two
 * elements are equal exactly when their term maps are.
 */
class AlgebraElement {
 public:
  using Terms = std::map<Elem, Scalar>;

  /// The zero element.
  AlgebraElement(Ring ring, FiniteGroup carrier);

  /// coeff * g
  static AlgebraElement basis(Ring ring, FiniteGroup carrier, Elem g);
  static AlgebraElement basis(Ring ring, FiniteGroup carrier, Elem g, const Scalar& coeff);

  /// Sums colliding terms and drops zeros.
  static AlgebraElement from_terms(Ring ring, FiniteGroup carrier,
                                   const std::vector<std::pair<Elem, Scalar>>& terms);

  const Ring& ring() const noexcept { return ring_; }
  const FiniteGroup& carrier() const noexcept { return carrier_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(Elem g) const;

  /// Sum of all coefficients (the augmentation).
  Scalar augmentation() const;

  AlgebraElement scaled(const Scalar& c) const;
  AlgebraElement operator-() const;

  friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  AlgebraElement& operator+=(const AlgebraElement& y);

  bool operator==(const AlgebraElement& other) const {
    return ring_ == other.ring_ && carrier_ == other.carrier_ && terms_ == other.terms_;
  }

 private:
  void add_term(Elem g, const Scalar& c);
  void check_compatible(const AlgebraElement& y) const;

  Ring ring_;
  FiniteGroup carrier_;
  Terms terms_;
};

AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y);

/// Indicator of h inside its parent group.
int chi_dot(const Subgroup& h, Elem g);

/// Sends each h in H to its class in H/K; the result lives in R(H/K).
AlgebraElement project_element(const QuotientGroup& q, const AlgebraElement& x);

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Column j holds the coefficients of x * g_j in the standard basis.
ScalarMatrix regular_matrix(const AlgebraElement& x);

/**
 * Exact determinant of a square matrix over the ring.
 *
 * Q: Gaussian elimination. Z and composite Z/nZ: Bareiss fraction-free
 * elimination on the integer lift, then reduced. Prime Z/pZ: elimination mod p.
 */
Scalar scalar_determinant(const Ring& ring, const ScalarMatrix& m);

/// True iff x has a two-sided inverse in RG, decided by its regular matrix.
bool is_invertible(const AlgebraElement& x);

/// The inverse of x when it exists.
std::optional<AlgebraElement> inverse(const AlgebraElement& x);

/**
 * Random element with each group element present with probability 1/2.
 * Coefficients are drawn as p/q with p in [-5, 5] \ {0}, q in [1, 3] (Q),
 * p only (Z), or p mod n (Z/nZ).
 */
AlgebraElement random_element(const Ring& ring, const FiniteGroup& carrier, std::mt19937_64& rng);

/// Text form "2*a + 3*b - 1/2*e". Unit coefficients are omitted except
/// before numeric labels; the zero element is "0".
std::string render(const AlgebraElement& x);

/**
 * Parses the text form. Terms are joined by '+' or '-' (U+2212 accepted),
 * each optionally "coefficient*label"; whitespace is ignored and a bare label
 * has coefficient 1. Throws ParseError on unknown labels or malformed input.
 */
AlgebraElement parse_element(const Ring& ring, const FiniteGroup& carrier, std::string_view text);

}  // namespace verl

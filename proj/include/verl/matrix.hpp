#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verl/algebra.hpp"
#include "verl/coset.hpp"

namespace verl {

/**
 * An m x m matrix over a group algebra.
 *
 * Entries are AlgebraElements over `carrier`. When `support` is set the
 * matrix lives in Mat(m, RH): entries are indexed by the parent group's
 * elements but every term must lie in H.
 */
class AlgebraMatrix {
 public:
  AlgebraMatrix(std::size_t dim, Ring ring, FiniteGroup carrier,
                std::optional<Subgroup> support = std::nullopt);

  static AlgebraMatrix identity(std::size_t dim, Ring ring, FiniteGroup carrier,
                                std::optional<Subgroup> support = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  const Ring& ring() const noexcept { return ring_; }
  const FiniteGroup& carrier() const noexcept { return carrier_; }
  const std::optional<Subgroup>& support() const noexcept { return support_; }

  const AlgebraElement& at(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }

  /// Checks ring, carrier and support before storing.
  void set(std::size_t i, std::size_t j, AlgebraElement x);

  bool operator==(const AlgebraMatrix& other) const;

 private:
  std::size_t dim_;
  Ring ring_;
  FiniteGroup carrier_;
  std::optional<Subgroup> support_;
  std::vector<AlgebraElement> entries_;
};

/// L_T(alpha)_ij = sum_g chi(t_i^-1 g t_j) x_g t_i^-1 g t_j, over RH.
AlgebraMatrix left_regular_rep(const CosetSystem& cs, const AlgebraElement& alpha);

/// R_U(alpha)_ij = sum_g chi(u_i g u_j^-1) x_g u_i g u_j^-1, over RH.
AlgebraMatrix right_regular_rep(const CosetSystem& cs, const AlgebraElement& alpha);

/// Entrywise projection Mat(m, RH) -> Mat(m, R(H/K)).
AlgebraMatrix psi_matrix(const QuotientGroup& q, const AlgebraMatrix& m);

/// Row-by-column product; each term is (A entry) * (B entry) in that order.
AlgebraMatrix mat_mul(const AlgebraMatrix& a, const AlgebraMatrix& b);

/// Leibniz expansion over all m! permutations. Requires a commutative carrier
/// (or abelian support); throws NonAbelianCarrier otherwise.
AlgebraElement det_commutative(const AlgebraMatrix& m);

/// Laplace expansion along the first row; independent of det_commutative.
AlgebraElement det_cofactor(const AlgebraMatrix& m);

/**
 * The matrix P with (t_1 ... t_m) = (t'_1 ... t'_m) P, so that
 * L_T(alpha) = P^-1 L_T'(alpha) P. P[i][j] = t'_i^-1 t_j when that lies in H,
 * zero otherwise. change_of_basis(t_prime, t) is P^-1.
 */
AlgebraMatrix change_of_basis(const CosetSystem& t, const CosetSystem& t_prime, const Ring& ring);

/// Row-major bracketed text: "[[a, b], [c, d]]".
std::string render(const AlgebraMatrix& m);

}  // namespace verl

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "verl/group.hpp"

namespace verl {

enum class Side { left, right };

/**
 * A complete set of left (tH) or right (Hu) coset representatives of a
 * subgroup, with the lookup g -> (representative, H-factor).
 *
 * Left:  g = reps[rep_of(g)] * factor_of(g).
 * Right: g = factor_of(g) * reps[rep_of(g)].
 */
class CosetSystem {
 public:
  Side side() const noexcept { return side_; }
  const FiniteGroup& group() const noexcept { return subgroup_.parent(); }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  std::span<const Elem> reps() const noexcept { return reps_; }
  std::size_t index() const noexcept { return reps_.size(); }

  /// Position in reps() of the coset containing g.
  std::size_t coset_of(Elem g) const { return rep_of_.at(g); }
  std::span<const std::size_t> rep_of() const noexcept { return rep_of_; }

  /// The bar map (left) or the tilde map (right).
  Elem representative(Elem g) const { return reps_[rep_of_.at(g)]; }

  /// (bar g)^-1 g on the left, g (tilde g)^-1 on the right.
  Elem h_factor(Elem g) const { return factor_of_.at(g); }

  /// Builds a system from raw lookup data without checking the partition.
  /// Only for mutation testing of the verifier.
  static CosetSystem unverified(Side side, Subgroup h, std::vector<Elem> reps,
                                std::vector<std::size_t> rep_of);

  bool operator==(const CosetSystem& other) const {
    return side_ == other.side_ && subgroup_ == other.subgroup_ && reps_ == other.reps_ &&
           rep_of_ == other.rep_of_;
  }

  friend CosetSystem decompose(const Subgroup&, Side, std::optional<std::span<const Elem>>);

 private:
  CosetSystem(Side side, Subgroup h, std::vector<Elem> reps, std::vector<std::size_t> rep_of);

  Side side_;
  Subgroup subgroup_;
  std::vector<Elem> reps_;
  std::vector<std::size_t> rep_of_;
  std::vector<Elem> factor_of_;
};

/**
 * Splits the parent of h into cosets of h.
 *
 * Without rep_choice the identity's coset comes first, then cosets in order of
 * their smallest element, each represented by that smallest element. With
 * rep_choice the cosets follow the order of the given representatives, which
 * must hit every coset exactly once (InvalidRepresentatives otherwise).
 */
CosetSystem decompose(const Subgroup& h, Side side,
                      std::optional<std::span<const Elem>> rep_choice = std::nullopt);

struct CosetPermutation {
  std::vector<std::size_t> mapping;
  int sign = 1;
};

/// Parity of a permutation of 0..n-1 as +1 / -1.
int permutation_sign(std::span<const std::size_t> perm);

/**
 * The permutation g induces on the cosets.
 *
 * Left systems:  j -> coset_of(g t_j); mapping(gh) = mapping(g) o mapping(h).
 * Right systems: j -> coset_of(u_j g); mapping(gh) = mapping(h) o mapping(g).
 */
CosetPermutation coset_permutation(const CosetSystem& cs, Elem g);

/**
 * Draws a fresh representative for every coset, keeping the coset order.
 *
 * The generator is std::mt19937_64 seeded with rng_seed; coset i takes its
 * members in increasing index order and picks member (draw mod |H|), with one
 * draw per coset in coset order.
 */
CosetSystem resample(const CosetSystem& cs, std::uint64_t rng_seed);

/// The right system with representatives t_i^-1, in the same order. Left input only.
CosetSystem inverse_reps(const CosetSystem& cs);

/// Members of coset i in increasing index order.
std::vector<Elem> coset_members(const CosetSystem& cs, std::size_t i);

}  // namespace verl

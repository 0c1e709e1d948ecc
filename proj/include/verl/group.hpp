#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace verl {

/// Index of a group element inside its Cayley table.
using Elem = std::size_t;

inline constexpr Elem npos = static_cast<Elem>(-1);

struct GroupLimits {
  /// Largest order accepted by any constructor.
  std::size_t max_order = 256;
};

/**
 * A finite group given by its full Cayley table.
 *
 * Elements are the indices 0..n-1 and mul(i, j) is table[i][j]. The identity
 * and inverse tables are derived from the table. Instances are immutable and
 * share their storage, so copies are cheap and safe across threads.
 */
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Elem>>;

  /// Validates shape, identity, inverses and associativity.
  static FiniteGroup from_table(const Table& table, std::vector<std::string> labels = {},
                                GroupLimits limits = {});

  /// Same as from_table but skips the associativity scan. Only for building
  /// deliberately corrupted groups (mutation testing of the verifier).
  static FiniteGroup from_table_unverified(const Table& table, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return data_->n; }
  Elem identity() const noexcept { return data_->identity; }
  Elem mul(Elem a, Elem b) const noexcept { return data_->table[a * data_->n + b]; }
  Elem inv(Elem a) const noexcept { return data_->inverses[a]; }
  Elem pow(Elem g, long long k) const;

  std::span<const Elem> inverses() const noexcept { return data_->inverses; }
  const std::string& label(Elem g) const { return data_->labels.at(g); }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  std::optional<Elem> find_label(std::string_view label) const;

  /// Row-major copy of the Cayley table.
  Table table() const;

  bool is_abelian() const;

  /// Returns a group with the same table and the given labels.
  FiniteGroup relabeled(std::vector<std::string> labels) const;

  /// Structural equality: same order and same table.
  bool operator==(const FiniteGroup& other) const;

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<Elem> table;
    Elem identity = 0;
    std::vector<Elem> inverses;
    std::vector<std::string> labels;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteGroup build(const Table& table, std::vector<std::string> labels, bool check_assoc,
                           GroupLimits limits);

  std::shared_ptr<const Data> data_;
};

bool is_abelian(const FiniteGroup& g);

FiniteGroup build_from_table(const FiniteGroup::Table& table, std::vector<std::string> labels = {},
                             GroupLimits limits = {});

enum class NamedFamily { cyclic, dihedral, symmetric };

/**
 * Named families with fixed element orderings:
 *  - cyclic(n):    k = 0..n-1 under addition mod n, labels "0".."n-1".
 *  - dihedral(n):  a^i b^j at index 2i + j, labels "e", "b", "a", "ab", "a2", "a2b", ...
 *                  with a^n = b^2 = e and ab = ba^-1 (order 2n).
 *  - symmetric(n): permutations of 1..n in lexicographic order of their
 *                  one-line notation, labels like "213"; (pq)(x) = p(q(x)).
 */
FiniteGroup construct_named(NamedFamily family, std::size_t n, GroupLimits limits = {});
FiniteGroup cyclic(std::size_t n);
FiniteGroup dihedral(std::size_t n);
FiniteGroup symmetric(std::size_t n);

/// Pairs (a, b) at index a * |B| + b, labels "(la,lb)".
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, GroupLimits limits = {});

/// A subgroup stored as its sorted member list plus a membership mask.
class Subgroup {
 public:
  /// Validates that members form a subgroup of parent.
  Subgroup(FiniteGroup parent, std::vector<Elem> members);

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::span<const Elem> members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem g) const { return g < mask_.size() && mask_[g] != 0; }
  bool is_abelian() const;
  std::size_t index() const { return parent_.order() / members_.size(); }

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

 private:
  struct Unchecked {};
  Subgroup(Unchecked, FiniteGroup parent, std::vector<Elem> members);
  friend Subgroup subgroup_closure(const FiniteGroup&, std::span<const Elem>);

  FiniteGroup parent_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
};

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> generators);

/// Subgroup generated by all commutators h1 h2 h1^-1 h2^-1 with h1, h2 in h.
Subgroup commutator_subgroup(const Subgroup& h);

/// True iff h k h^-1 lies in k for all members; throws NotASubset unless k <= h.
bool is_normal(const Subgroup& h, const Subgroup& k);

/**
 * H/K for K normal in H.
 *
 * Coset 0 is the class of the identity; the remaining classes are numbered
 * by their smallest member index. Class labels are "K0", "K1", ....
 */
class QuotientGroup {
 public:
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  const Subgroup& kernel() const noexcept { return kernel_; }
  const FiniteGroup& cosets() const noexcept { return cosets_; }
  std::size_t order() const noexcept { return cosets_.order(); }

  /// Class of an element of H; throws SupportOutsideSubgroup otherwise.
  Elem class_of(Elem h) const;

  /// One member per class: the identity for class 0, otherwise the smallest member.
  std::span<const Elem> class_representatives() const noexcept { return class_reps_; }

  friend QuotientGroup quotient_group(const Subgroup& h, const Subgroup& k);

 private:
  QuotientGroup(Subgroup h, Subgroup k, FiniteGroup cosets, std::vector<Elem> class_of,
                std::vector<Elem> class_reps)
      : subgroup_(std::move(h)),
        kernel_(std::move(k)),
        cosets_(std::move(cosets)),
        class_of_(std::move(class_of)),
        class_reps_(std::move(class_reps)) {}

  Subgroup subgroup_;
  Subgroup kernel_;
  FiniteGroup cosets_;
  std::vector<Elem> class_of_;  // indexed by parent element, npos outside H
  std::vector<Elem> class_reps_;
};

QuotientGroup quotient_group(const Subgroup& h, const Subgroup& k);

}  // namespace verl

#include "verl/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "verl/error.hpp"

namespace verl {

namespace {

std::string idx(Elem e) { return std::to_string(e); }

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

void check_labels(const std::vector<std::string>& labels, std::size_t n) {
  if (labels.size() != n) {
    throw Error(ErrorCode::InvalidTable, "expected " + std::to_string(n) + " labels, got " +
                                             std::to_string(labels.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorCode::InvalidTable, "empty element label");
    if (!seen.insert(l).second) throw Error(ErrorCode::InvalidTable, "duplicate label '" + l + "'");
  }
}

void check_size(std::size_t n, GroupLimits limits) {
  if (n > limits.max_order) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "order " + std::to_string(n) + " exceeds bound " + std::to_string(limits.max_order));
  }
}

}  // namespace

FiniteGroup FiniteGroup::build(const Table& table, std::vector<std::string> labels, bool check_assoc,
                               GroupLimits limits) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidTable, "empty table");
  check_size(n, limits);

  auto data = std::make_shared<Data>();
  data->n = n;
  data->table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorCode::InvalidTable, "row " + idx(i) + " has " + idx(table[i].size()) +
                                               " entries, expected " + idx(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error(ErrorCode::InvalidTable,
                    "entry (" + idx(i) + "," + idx(j) + ") = " + idx(table[i][j]) + " out of range");
      }
      data->table.push_back(table[i][j]);
    }
  }
  auto at = [&](Elem a, Elem b) { return data->table[a * n + b]; };

  // Identity: the element whose row and column are both the identity map.
  Elem identity = npos;
  for (Elem e = 0; e < n && identity == npos; ++e) {
    bool ok = true;
    for (Elem j = 0; j < n && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
    if (ok) identity = e;
  }
  if (identity == npos) throw Error(ErrorCode::NoIdentity, "no two-sided identity in table");
  data->identity = identity;

  data->inverses.assign(n, npos);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      if (at(i, j) == identity && at(j, i) == identity) {
        data->inverses[i] = j;
        break;
      }
    }
    if (data->inverses[i] == npos) {
      throw Error(ErrorCode::NoInverse, "element " + idx(i) + " has no two-sided inverse");
    }
  }

  if (check_assoc) {
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        const Elem ij = at(i, j);
        for (Elem k = 0; k < n; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            throw Error(ErrorCode::NotAssociative,
                        "(" + idx(i) + "*" + idx(j) + ")*" + idx(k) + " = " + idx(at(ij, k)) + " but " +
                            idx(i) + "*(" + idx(j) + "*" + idx(k) + ") = " + idx(at(i, at(j, k))));
          }
        }
      }
    }
  }

  if (labels.empty()) labels = default_labels(n);
  check_labels(labels, n);
  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

FiniteGroup FiniteGroup::from_table(const Table& table, std::vector<std::string> labels,
                                    GroupLimits limits) {
  return build(table, std::move(labels), true, limits);
}

FiniteGroup FiniteGroup::from_table_unverified(const Table& table, std::vector<std::string> labels) {
  return build(table, std::move(labels), false, GroupLimits{static_cast<std::size_t>(-1)});
}

Elem FiniteGroup::pow(Elem g, long long k) const {
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  Elem acc = identity();
  Elem base = g;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<Elem> FiniteGroup::find_label(std::string_view label) const {
  const auto& ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<Elem>(it - ls.begin());
}

FiniteGroup::Table FiniteGroup::table() const {
  const std::size_t n = order();
  Table out(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) out[i][j] = mul(i, j);
  return out;
}

bool FiniteGroup::is_abelian() const {
  const std::size_t n = order();
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

FiniteGroup FiniteGroup::relabeled(std::vector<std::string> labels) const {
  check_labels(labels, order());
  auto data = std::make_shared<Data>(*data_);
  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return data_ == other.data_ || (data_->n == other.data_->n && data_->table == other.data_->table);
}

bool is_abelian(const FiniteGroup& g) { return g.is_abelian(); }

FiniteGroup build_from_table(const FiniteGroup::Table& table, std::vector<std::string> labels,
                             GroupLimits limits) {
  return FiniteGroup::from_table(table, std::move(labels), limits);
}

// ---------------------------------------------------------------------------
// Named families

namespace {

FiniteGroup make_cyclic(std::size_t n, GroupLimits limits) {
  check_size(n, limits);
  FiniteGroup::Table t(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(t, default_labels(n), limits);
}

std::string dihedral_label(std::size_t i, std::size_t j) {
  std::string s;
  if (i == 1) s = "a";
  if (i > 1) s = "a" + std::to_string(i);
  if (j == 1) s += "b";
  return s.empty() ? "e" : s;
}

FiniteGroup make_dihedral(std::size_t n, GroupLimits limits) {
  const std::size_t order = 2 * n;
  check_size(order, limits);
  FiniteGroup::Table t(order, std::vector<Elem>(order));
  std::vector<std::string> labels(order);
  // a^i b^j * a^k b^l = a^(i + (-1)^j k) b^(j + l)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      labels[2 * i + j] = dihedral_label(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          const std::size_t rot = j == 0 ? (i + k) % n : (i + n - k) % n;
          t[2 * i + j][2 * k + l] = 2 * rot + ((j + l) % 2);
        }
      }
    }
  }
  return FiniteGroup::from_table(t, std::move(labels), limits);
}

FiniteGroup make_symmetric(std::size_t n, GroupLimits limits) {
  if (n > 8) {
    throw Error(ErrorCode::SizeLimitExceeded, "symmetric(" + std::to_string(n) + "): degree above 8");
  }
  std::size_t order = 1;
  for (std::size_t k = 2; k <= n; ++k) order *= k;
  check_size(order, limits);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto rank = [&](const std::vector<std::size_t>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };

  FiniteGroup::Table t(order, std::vector<Elem>(order));
  std::vector<std::string> labels(order);
  std::vector<std::size_t> composed(n);
  for (Elem a = 0; a < order; ++a) {
    std::string l;
    for (auto x : perms[a]) l += std::to_string(x + 1);
    labels[a] = n == 0 ? "()" : l;
    for (Elem b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      t[a][b] = rank(composed);
    }
  }
  return FiniteGroup::from_table(t, std::move(labels), limits);
}

}  // namespace

FiniteGroup construct_named(NamedFamily family, std::size_t n, GroupLimits limits) {
  if (n == 0 && family != NamedFamily::symmetric) {
    throw Error(ErrorCode::InvalidTable, "named group parameter must be at least 1");
  }
  switch (family) {
    case NamedFamily::cyclic: return make_cyclic(n, limits);
    case NamedFamily::dihedral: return make_dihedral(n, limits);
    case NamedFamily::symmetric:
      if (n == 0) throw Error(ErrorCode::InvalidTable, "named group parameter must be at least 1");
      return make_symmetric(n, limits);
  }
  throw Error(ErrorCode::InvalidTable, "unknown family");
}

FiniteGroup cyclic(std::size_t n) { return construct_named(NamedFamily::cyclic, n); }
FiniteGroup dihedral(std::size_t n) { return construct_named(NamedFamily::dihedral, n); }
FiniteGroup symmetric(std::size_t n) { return construct_named(NamedFamily::symmetric, n); }

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, GroupLimits limits) {
  const std::size_t na = a.order(), nb = b.order();
  check_size(na * nb, limits);
  FiniteGroup::Table t(na * nb, std::vector<Elem>(na * nb));
  std::vector<std::string> labels(na * nb);
  for (Elem i = 0; i < na; ++i) {
    for (Elem j = 0; j < nb; ++j) {
      labels[i * nb + j] = "(" + a.label(i) + "," + b.label(j) + ")";
      for (Elem k = 0; k < na; ++k)
        for (Elem l = 0; l < nb; ++l) t[i * nb + j][k * nb + l] = a.mul(i, k) * nb + b.mul(j, l);
    }
  }
  // Factors are groups already, so the product needs no associativity scan.
  return FiniteGroup::from_table_unverified(t, std::move(labels));
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup::Subgroup(Unchecked, FiniteGroup parent, std::vector<Elem> members)
    : parent_(std::move(parent)), members_(std::move(members)), mask_(parent_.order(), 0) {
  for (Elem m : members_) mask_[m] = 1;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<Elem> members) : parent_(std::move(parent)) {
  const std::size_t n = parent_.order();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  mask_.assign(n, 0);
  for (Elem m : members) {
    if (m >= n) throw Error(ErrorCode::NotASubgroup, "member index " + idx(m) + " out of range");
    mask_[m] = 1;
  }
  if (!mask_[parent_.identity()]) {
    throw Error(ErrorCode::NotASubgroup, "identity " + parent_.label(parent_.identity()) + " missing");
  }
  for (Elem x : members) {
    if (!mask_[parent_.inv(x)]) {
      throw Error(ErrorCode::NotASubgroup, "inverse of " + parent_.label(x) + " missing");
    }
    for (Elem y : members) {
      if (!mask_[parent_.mul(x, y)]) {
        throw Error(ErrorCode::NotASubgroup,
                    "not closed: " + parent_.label(x) + "*" + parent_.label(y) + " missing");
      }
    }
  }
  members_ = std::move(members);
}

bool Subgroup::is_abelian() const {
  for (Elem x : members_)
    for (Elem y : members_)
      if (parent_.mul(x, y) != parent_.mul(y, x)) return false;
  return true;
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {g.identity()}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return Subgroup(Unchecked{}, g, std::move(all));
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> members{g.identity()};
  in[g.identity()] = 1;
  for (Elem s : generators) {
    if (s >= g.order()) throw Error(ErrorCode::NotASubgroup, "generator " + idx(s) + " out of range");
  }
  // Close under right multiplication by generators; in a finite group this
  // also yields inverses.
  for (std::size_t pos = 0; pos < members.size(); ++pos) {
    for (Elem s : generators) {
      const Elem next = g.mul(members[pos], s);
      if (!in[next]) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(Subgroup::Unchecked{}, g, std::move(members));
}

Subgroup commutator_subgroup(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<Elem> gens;
  std::vector<char> seen(g.order(), 0);
  for (Elem x : h.members()) {
    for (Elem y : h.members()) {
      const Elem c = g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  }
  return subgroup_closure(g, gens);
}

bool is_normal(const Subgroup& h, const Subgroup& k) {
  if (!(h.parent() == k.parent())) throw Error(ErrorCode::NotASubset, "subgroups of different groups");
  for (Elem x : k.members()) {
    if (!h.contains(x)) {
      throw Error(ErrorCode::NotASubset, "kernel member " + h.parent().label(x) + " not in subgroup");
    }
  }
  const auto& g = h.parent();
  for (Elem x : h.members())
    for (Elem y : k.members())
      if (!k.contains(g.mul(g.mul(x, y), g.inv(x)))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Quotients

Elem QuotientGroup::class_of(Elem h) const {
  if (h >= class_of_.size() || class_of_[h] == npos) {
    throw Error(ErrorCode::SupportOutsideSubgroup,
                "element " + (h < class_of_.size() ? subgroup_.parent().label(h) : idx(h)) +
                    " is not in the subgroup");
  }
  return class_of_[h];
}

QuotientGroup quotient_group(const Subgroup& h, const Subgroup& k) {
  if (!is_normal(h, k)) throw Error(ErrorCode::NotNormal, "kernel is not normal in the subgroup");
  const auto& g = h.parent();

  std::vector<Elem> class_of(g.order(), npos);
  std::vector<Elem> reps;
  auto assign = [&](Elem start) {
    const Elem c = reps.size();
    reps.push_back(start);
    for (Elem y : k.members()) class_of[g.mul(start, y)] = c;
  };
  assign(g.identity());
  for (Elem x : h.members())
    if (class_of[x] == npos) assign(x);

  const std::size_t q = reps.size();
  FiniteGroup::Table t(q, std::vector<Elem>(q));
  std::vector<std::string> labels(q);
  for (Elem a = 0; a < q; ++a) {
    labels[a] = "K" + std::to_string(a);
    for (Elem b = 0; b < q; ++b) t[a][b] = class_of[g.mul(reps[a], reps[b])];
  }
  auto cosets = FiniteGroup::from_table(t, std::move(labels), GroupLimits{static_cast<std::size_t>(-1)});
  return QuotientGroup(h, k, std::move(cosets), std::move(class_of), std::move(reps));
}

}  // namespace verl

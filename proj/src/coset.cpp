#include "verl/coset.hpp"

#include <random>
#include <string>

#include "verl/error.hpp"

namespace verl {

namespace {

std::vector<Elem> compute_factors(Side side, const FiniteGroup& g, std::span<const Elem> reps,
                                  std::span<const std::size_t> rep_of) {
  std::vector<Elem> factor(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem r = reps[rep_of[x]];
    factor[x] = side == Side::left ? g.mul(g.inv(r), x) : g.mul(x, g.inv(r));
  }
  return factor;
}

Elem coset_element(Side side, const FiniteGroup& g, Elem rep, Elem h) {
  return side == Side::left ? g.mul(rep, h) : g.mul(h, rep);
}

}  // namespace

CosetSystem::CosetSystem(Side side, Subgroup h, std::vector<Elem> reps, std::vector<std::size_t> rep_of)
    : side_(side), subgroup_(std::move(h)), reps_(std::move(reps)), rep_of_(std::move(rep_of)) {
  factor_of_ = compute_factors(side_, subgroup_.parent(), reps_, rep_of_);
}

CosetSystem CosetSystem::unverified(Side side, Subgroup h, std::vector<Elem> reps,
                                    std::vector<std::size_t> rep_of) {
  if (rep_of.size() != h.parent().order()) {
    throw Error(ErrorCode::InvalidRepresentatives, "lookup table has wrong length");
  }
  for (auto i : rep_of) {
    if (i >= reps.size()) throw Error(ErrorCode::InvalidRepresentatives, "lookup entry out of range");
  }
  return CosetSystem(side, std::move(h), std::move(reps), std::move(rep_of));
}

CosetSystem decompose(const Subgroup& h, Side side, std::optional<std::span<const Elem>> rep_choice) {
  const auto& g = h.parent();
  const std::size_t n = g.order();
  std::vector<std::size_t> rep_of(n, static_cast<std::size_t>(-1));
  std::vector<Elem> reps;

  auto claim = [&](Elem rep) {
    const std::size_t i = reps.size();
    for (Elem y : h.members()) {
      const Elem x = coset_element(side, g, rep, y);
      if (rep_of[x] != static_cast<std::size_t>(-1)) {
        throw Error(ErrorCode::InvalidRepresentatives,
                    g.label(rep) + " lies in the coset of " + g.label(reps[rep_of[x]]));
      }
      rep_of[x] = i;
    }
    reps.push_back(rep);
  };

  if (rep_choice) {
    for (Elem r : *rep_choice) {
      if (r >= n) throw Error(ErrorCode::InvalidRepresentatives, "index " + std::to_string(r) + " out of range");
      claim(r);
    }
  } else {
    claim(g.identity());
    for (Elem x = 0; x < n; ++x)
      if (rep_of[x] == static_cast<std::size_t>(-1)) claim(x);
  }

  for (Elem x = 0; x < n; ++x) {
    if (rep_of[x] == static_cast<std::size_t>(-1)) {
      throw Error(ErrorCode::InvalidRepresentatives, "no representative for the coset of " + g.label(x));
    }
  }
  return CosetSystem(side, h, std::move(reps), std::move(rep_of));
}

int permutation_sign(std::span<const std::size_t> perm) {
  std::vector<char> seen(perm.size(), 0);
  std::size_t even_cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) ++even_cycles;
  }
  return even_cycles % 2 == 0 ? 1 : -1;
}

CosetPermutation coset_permutation(const CosetSystem& cs, Elem g) {
  const auto& grp = cs.group();
  CosetPermutation p;
  p.mapping.resize(cs.index());
  for (std::size_t j = 0; j < cs.index(); ++j) {
    const Elem t = cs.reps()[j];
    p.mapping[j] = cs.coset_of(cs.side() == Side::left ? grp.mul(g, t) : grp.mul(t, g));
  }
  p.sign = permutation_sign(p.mapping);
  return p;
}

std::vector<Elem> coset_members(const CosetSystem& cs, std::size_t i) {
  std::vector<Elem> out;
  for (Elem x = 0; x < cs.group().order(); ++x)
    if (cs.coset_of(x) == i) out.push_back(x);
  return out;
}

CosetSystem resample(const CosetSystem& cs, std::uint64_t rng_seed) {
  std::mt19937_64 rng(rng_seed);
  std::vector<std::vector<Elem>> members(cs.index());
  for (Elem x = 0; x < cs.group().order(); ++x) members[cs.coset_of(x)].push_back(x);

  std::vector<Elem> reps(cs.index());
  for (std::size_t i = 0; i < cs.index(); ++i) reps[i] = members[i][rng() % members[i].size()];
  std::vector<std::size_t> rep_of(cs.rep_of().begin(), cs.rep_of().end());
  return CosetSystem::unverified(cs.side(), cs.subgroup(), std::move(reps), std::move(rep_of));
}

CosetSystem inverse_reps(const CosetSystem& cs) {
  if (cs.side() != Side::left) throw Error(ErrorCode::WrongSide, "inverse_reps expects a left system");
  std::vector<Elem> inv;
  inv.reserve(cs.index());
  for (Elem t : cs.reps()) inv.push_back(cs.group().inv(t));
  return decompose(cs.subgroup(), Side::right, std::span<const Elem>(inv));
}

}  // namespace verl

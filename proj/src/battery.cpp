#include "verl/battery.hpp"

#include <array>

#include "verl/coset.hpp"
#include "verl/error.hpp"

namespace verl {

namespace {

Elem by_label(const FiniteGroup& g, const std::string& l) {
  auto e = g.find_label(l);
  if (!e) throw Error(ErrorCode::ValidationError, "no element labelled " + l);
  return *e;
}

Subgroup generated(const FiniteGroup& g, std::initializer_list<const char*> labels) {
  std::vector<Elem> gens;
  for (const char* l : labels) gens.push_back(by_label(g, l));
  return subgroup_closure(g, gens);
}

}  // namespace

FiniteGroup quaternion_group() {
  // Element 2u + s is (-1)^s * unit[u] with unit = 1, i, j, k.
  // unit[a] * unit[b] = sign * unit[c] for the quaternion rules.
  static constexpr std::array<std::array<int, 4>, 4> kUnit = {{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  static constexpr std::array<std::array<int, 4>, 4> kSign = {{
      {0, 0, 0, 0},
      {0, 1, 0, 1},  // i*i = -1, i*j = k, i*k = -j
      {0, 1, 1, 0},  // j*i = -k, j*j = -1, j*k = i
      {0, 0, 1, 1},  // k*i = j, k*j = -i, k*k = -1
  }};
  FiniteGroup::Table t(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int s = (a % 2 + b % 2 + kSign[ua][ub]) % 2;
      t[a][b] = static_cast<Elem>(2 * kUnit[ua][ub] + s);
    }
  }
  return FiniteGroup::from_table(t, {"e", "z", "i", "zi", "j", "zj", "k", "zk"});
}

std::vector<BatteryMember> standard_battery() {
  std::vector<BatteryMember> out;
  auto add = [&](std::string name, Subgroup h, Subgroup k) {
    out.push_back(BatteryMember{std::move(name), std::move(h), std::move(k)});
  };

  const auto z2 = cyclic(2);
  add("Z2, H=G, K=1", Subgroup::whole(z2), Subgroup::trivial(z2));

  const auto z4 = cyclic(4);
  add("Z4, H={0,2}, K=1", generated(z4, {"2"}), Subgroup::trivial(z4));

  const auto z6 = cyclic(6);
  add("Z6, H={0,3}, K=1", generated(z6, {"3"}), Subgroup::trivial(z6));

  const auto s3 = symmetric(3);
  add("S3, H=A3, K=1", generated(s3, {"231"}), Subgroup::trivial(s3));
  add("S3, H=<(12)>, K=1", generated(s3, {"213"}), Subgroup::trivial(s3));

  const auto d4 = dihedral(4);
  {
    auto center = generated(d4, {"a2"});
    auto k = commutator_subgroup(center);
    add("D4, H=Z(D4), K=[H,H]", std::move(center), std::move(k));
  }
  {
    auto rot = generated(d4, {"a"});
    auto k = commutator_subgroup(rot);
    add("D4, H=<a>, K=[H,H]", std::move(rot), std::move(k));
  }

  const auto q8 = quaternion_group();
  add("Q8, H=<i>, K=1", generated(q8, {"i"}), Subgroup::trivial(q8));

  const auto remark = direct_product(cyclic(2), dihedral(3));
  {
    auto h = generated(remark, {"(0,a)", "(0,b)"});
    auto k = commutator_subgroup(h);
    add("Z2xD3, H=D3, K=[D3,D3]", std::move(h), std::move(k));
  }

  const auto s4 = symmetric(4);
  {
    std::vector<Elem> even;
    for (Elem x = 0; x < s4.order(); ++x) {
      std::vector<std::size_t> perm;
      for (char c : s4.label(x)) perm.push_back(static_cast<std::size_t>(c - '1'));
      if (permutation_sign(perm) > 0) even.push_back(x);
    }
    add("S4, H=A4, K=V4", Subgroup(s4, even), generated(s4, {"2143", "3412"}));
  }
  return out;
}

}  // namespace verl

#include <doctest.h>

#include <random>

#include "verl/battery.hpp"
#include "verl/error.hpp"
#include "verl/group.hpp"

using namespace verl;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::ValidationError;
}

Elem at(const FiniteGroup& g, const char* label) { return g.find_label(label).value(); }

bool associative(const FiniteGroup& g) {
  for (Elem i = 0; i < g.order(); ++i)
    for (Elem j = 0; j < g.order(); ++j)
      for (Elem k = 0; k < g.order(); ++k)
        if (g.mul(g.mul(i, j), k) != g.mul(i, g.mul(j, k))) return false;
  return true;
}

}  // namespace

TEST_CASE("build_from_table: trivial group and Z/2") {
  auto t = build_from_table({{0}});
  CHECK(t.order() == 1);
  CHECK(t.identity() == 0);

  auto z2 = build_from_table({{0, 1}, {1, 0}});
  CHECK(z2.identity() == 0);
  CHECK(z2.inverses()[0] == 0);
  CHECK(z2.inverses()[1] == 1);
}

TEST_CASE("build_from_table: error paths") {
  // Identity 0 and inverses exist, but (1*1)*2 = 0*2 = 2 while 1*(1*2) = 1*0 = 1.
  CHECK(code_of([] { build_from_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}}); }) == ErrorCode::NotAssociative);
  CHECK(code_of([] { build_from_table({{1, 0}, {0, 0}}); }) == ErrorCode::NoIdentity);
  CHECK(code_of([] { build_from_table({{0, 1}, {1, 1}}); }) == ErrorCode::NoInverse);
  CHECK(code_of([] { build_from_table({{0, 1}, {1}}); }) == ErrorCode::InvalidTable);
  CHECK(code_of([] { build_from_table({{0, 5}, {1, 0}}); }) == ErrorCode::InvalidTable);
  CHECK(code_of([] { build_from_table({{0, 1}, {1, 0}}, {"x", "x"}); }) == ErrorCode::InvalidTable);
}

TEST_CASE("NotAssociative message names the violating triple") {
  try {
    build_from_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 0}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(1*1)*2") != std::string::npos);
  }
}

TEST_CASE("named constructions") {
  auto c4 = cyclic(4);
  CHECK(c4.order() == 4);
  CHECK(c4.inv(1) == 3);
  CHECK(c4.is_abelian());

  auto d3 = dihedral(3);
  CHECK(d3.order() == 6);
  const Elem a = at(d3, "a"), b = at(d3, "b");
  CHECK(d3.label(0) == "e");
  CHECK(d3.mul(a, b) == d3.mul(b, d3.inv(a)));
  CHECK(d3.pow(a, 3) == d3.identity());
  CHECK(d3.pow(b, 2) == d3.identity());
  CHECK_FALSE(is_abelian(d3));

  auto s3 = symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.label(0) == "123");
  CHECK(s3.label(5) == "321");
  // (12) then (23): p(q(x)) with p = 213, q = 132 gives 231.
  CHECK(s3.label(s3.mul(at(s3, "213"), at(s3, "132"))) == "231");

  CHECK(code_of([] { symmetric(9); }) == ErrorCode::SizeLimitExceeded);
  CHECK(code_of([] { construct_named(NamedFamily::cyclic, 300); }) == ErrorCode::SizeLimitExceeded);
  CHECK(construct_named(NamedFamily::cyclic, 300, GroupLimits{400}).order() == 300);
}

TEST_CASE("every named group is associative") {
  for (auto g : {cyclic(1), cyclic(7), dihedral(1), dihedral(5), symmetric(1), symmetric(4), quaternion_group()}) {
    CHECK(associative(g));
  }
}

TEST_CASE("direct_product") {
  auto d3 = dihedral(3);
  auto p = direct_product(cyclic(1), d3);
  CHECK(p.table() == d3.table());

  auto g = direct_product(cyclic(2), d3);
  CHECK(g.order() == 12);
  CHECK(g.label(7) == "(1,b)");
  CHECK(associative(g));

  auto v4 = direct_product(cyclic(2), cyclic(2));
  for (Elem x = 0; x < 4; ++x) CHECK(v4.inv(x) == x);
  CHECK(v4.is_abelian());

  CHECK(code_of([] { direct_product(cyclic(20), cyclic(20)); }) == ErrorCode::SizeLimitExceeded);
}

TEST_CASE("direct_product inverses are componentwise") {
  auto a = symmetric(3);
  auto b = cyclic(5);
  auto p = direct_product(a, b);
  for (Elem i = 0; i < a.order(); ++i)
    for (Elem j = 0; j < b.order(); ++j) CHECK(p.inv(i * 5 + j) == a.inv(i) * 5 + b.inv(j));
}

TEST_CASE("subgroup_closure") {
  auto d3 = dihedral(3);
  CHECK(subgroup_closure(d3, {}).order() == 1);

  const std::vector<Elem> gen_a{at(d3, "a")};
  auto rot = subgroup_closure(d3, gen_a);
  CHECK(rot.order() == 3);
  CHECK(rot.contains(at(d3, "a2")));
  CHECK(rot == commutator_subgroup(Subgroup::whole(d3)));

  std::vector<Elem> all{0, 1, 2, 3, 4, 5};
  CHECK(subgroup_closure(d3, all) == Subgroup::whole(d3));

  // Idempotent.
  std::vector<Elem> members(rot.members().begin(), rot.members().end());
  CHECK(subgroup_closure(d3, members) == rot);
}

TEST_CASE("Subgroup validates closure") {
  auto d3 = dihedral(3);
  CHECK(code_of([&] { Subgroup(d3, {at(d3, "e"), at(d3, "a")}); }) == ErrorCode::NotASubgroup);
  CHECK(code_of([&] { Subgroup(d3, {at(d3, "a")}); }) == ErrorCode::NotASubgroup);
}

TEST_CASE("is_normal") {
  auto d3 = dihedral(3);
  auto whole = Subgroup::whole(d3);
  CHECK(is_normal(whole, Subgroup::trivial(d3)));
  const std::vector<Elem> a{at(d3, "a")}, b{at(d3, "b")};
  CHECK(is_normal(whole, subgroup_closure(d3, a)));
  CHECK_FALSE(is_normal(whole, subgroup_closure(d3, b)));
  CHECK(code_of([&] { is_normal(subgroup_closure(d3, a), subgroup_closure(d3, b)); }) == ErrorCode::NotASubset);
}

TEST_CASE("quotient_group") {
  auto d3 = dihedral(3);
  auto whole = Subgroup::whole(d3);

  CHECK(quotient_group(whole, whole).order() == 1);

  const std::vector<Elem> a{at(d3, "a")}, b{at(d3, "b")};
  auto q = quotient_group(whole, subgroup_closure(d3, a));
  CHECK(q.order() == 2);
  CHECK(q.class_of(d3.identity()) == 0);
  CHECK(q.class_of(at(d3, "a2")) == 0);
  CHECK(q.class_of(at(d3, "ab")) == 1);
  CHECK(q.cosets().label(1) == "K1");
  CHECK(q.cosets().is_abelian());
  CHECK(q.order() * q.kernel().order() == q.subgroup().order());

  auto c4 = cyclic(4);
  auto q4 = quotient_group(Subgroup::whole(c4), Subgroup(c4, {0, 2}));
  CHECK(q4.order() == 2);
  CHECK(q4.cosets().table() == cyclic(2).table());

  CHECK(code_of([&] { quotient_group(whole, subgroup_closure(d3, b)); }) == ErrorCode::NotNormal);
  CHECK(code_of([&] { q.class_of(99); }) == ErrorCode::SupportOutsideSubgroup);
}

TEST_CASE("class_of is a homomorphism on every battery quotient") {
  for (const auto& m : standard_battery()) {
    CAPTURE(m.name);
    auto q = quotient_group(m.subgroup, m.kernel);
    const auto& g = m.subgroup.parent();
    for (Elem x : m.subgroup.members())
      for (Elem y : m.subgroup.members())
        CHECK(q.class_of(g.mul(x, y)) == q.cosets().mul(q.class_of(x), q.class_of(y)));
    CHECK(q.cosets().is_abelian());
  }
}

TEST_CASE("random tables from products of named groups stay associative") {
  std::mt19937_64 rng(7);
  const std::vector<FiniteGroup> pool{cyclic(2), cyclic(3), dihedral(2), dihedral(3), symmetric(3)};
  for (int trial = 0; trial < 10; ++trial) {
    auto g = direct_product(pool[rng() % pool.size()], pool[rng() % pool.size()]);
    CHECK(associative(g));
  }
}

TEST_CASE("quaternion group") {
  auto q8 = quaternion_group();
  const Elem i = at(q8, "i"), j = at(q8, "j"), k = at(q8, "k"), z = at(q8, "z");
  CHECK(q8.mul(i, j) == k);
  CHECK(q8.mul(j, i) == at(q8, "zk"));
  CHECK(q8.mul(i, i) == z);
  CHECK(q8.mul(z, z) == q8.identity());
  CHECK_FALSE(q8.is_abelian());
}

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "mutation.hpp"
#include "verl/battery.hpp"
#include "verl/error.hpp"
#include "verl/transfer.hpp"

using namespace verl;

namespace {

Elem at(const FiniteGroup& g, const char* label) { return g.find_label(label).value(); }

struct Z4Setting {
  FiniteGroup g = cyclic(4);
  Subgroup h{g, {0, 2}};
  QuotientGroup q = quotient_group(h, Subgroup::trivial(g));
  CosetSystem left = decompose(h, Side::left);
  CosetSystem right = decompose(h, Side::right);
};

// Definition evaluated directly: product over i of the class of the element
// (bar(g t_i))^-1 g t_i, with bar found by searching coset membership by brute force.
Elem literal_left_transfer(const QuotientGroup& q, const CosetSystem& cs, Elem g) {
  const auto& grp = cs.group();
  Elem acc = q.cosets().identity();
  for (Elem t : cs.reps()) {
    const Elem gt = grp.mul(g, t);
    for (Elem s : cs.reps()) {
      const Elem f = grp.mul(grp.inv(s), gt);
      if (cs.subgroup().contains(f)) {
        acc = q.cosets().mul(acc, q.class_of(f));
        break;
      }
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("transfers on Z4 with H = {0,2}") {
  Z4Setting s;
  const auto two = s.q.class_of(2);
  CHECK(two != s.q.cosets().identity());

  auto v = left_transfer(s.q, s.left, 1);
  CHECK(v.coset == two);
  CHECK(v.sign == -1);
  auto w = right_transfer(s.q, s.right, 1);
  CHECK(w.coset == two);
  CHECK(w.sign == -1);

  CHECK(left_transfer(s.q, s.left, 0) == TransferValue{s.q.cosets(), s.q.cosets().identity(), 1});
  CHECK(right_transfer(s.q, s.right, 0) == TransferValue{s.q.cosets(), s.q.cosets().identity(), 1});

  CHECK(sign_of(s.left, 0) == 1);
  CHECK(sign_of(s.left, 1) == -1);
  CHECK(sign_of(s.left, 2) == 1);

  CHECK_THROWS_AS(left_transfer(s.q, s.right, 1), Error);
  CHECK_THROWS_AS(right_transfer(s.q, s.left, 1), Error);
}

TEST_CASE("det_transfer examples") {
  Z4Setting s;
  const Ring q = Ring::rationals();
  CHECK(det_transfer(s.q, s.left, AlgebraElement::basis(q, s.g, 0)) ==
        AlgebraElement::basis(q, s.q.cosets(), s.q.cosets().identity()));
  CHECK(det_transfer(s.q, s.left, AlgebraElement::basis(q, s.g, 1)) ==
        AlgebraElement::basis(q, s.q.cosets(), s.q.class_of(2), Scalar(-1)));

  auto g = direct_product(cyclic(2), dihedral(3));
  const std::vector<Elem> gens{at(g, "(0,a)"), at(g, "(0,b)")};
  auto h = subgroup_closure(g, gens);
  auto quo = quotient_group(h, commutator_subgroup(h));
  auto alpha = parse_element(q, g, "(0,e) + (0,a) + (0,a2)");
  auto d = det_transfer(quo, decompose(h, Side::left), alpha);
  CHECK(d == AlgebraElement::basis(q, quo.cosets(), quo.cosets().identity(), Scalar(9)));
  CHECK_FALSE(is_invertible(alpha));
  CHECK(is_invertible(d));
}

TEST_CASE("det_transfer rejects a nonabelian quotient") {
  auto s3 = symmetric(3);
  auto whole = Subgroup::whole(s3);
  auto q = quotient_group(whole, Subgroup::trivial(s3));
  CHECK_THROWS_AS(det_transfer(q, decompose(whole, Side::left), AlgebraElement::basis(Ring::rationals(), s3, 0)),
                  Error);
  CHECK_THROWS_AS(verify_properties(whole, Subgroup::trivial(s3)), Error);
}

TEST_CASE("verify_properties rejects a non-normal kernel") {
  auto s3 = symmetric(3);
  const std::vector<Elem> gen{at(s3, "213")};
  CHECK_THROWS_AS(verify_properties(Subgroup::whole(s3), subgroup_closure(s3, gen)), Error);
}

TEST_CASE("left transfer matches the literal definition and the abelian power map") {
  for (const auto& m : standard_battery()) {
    CAPTURE(m.name);
    const auto& g = m.subgroup.parent();
    auto q = quotient_group(m.subgroup, m.kernel);
    auto left = decompose(m.subgroup, Side::left);
    for (std::uint64_t seed : {3u, 4u}) {
      auto t = resample(left, seed);
      for (Elem x = 0; x < g.order(); ++x) CHECK(left_transfer(q, t, x).coset == literal_left_transfer(q, t, x));
    }
    if (!g.is_abelian()) continue;
    for (Elem x = 0; x < g.order(); ++x) {
      const Elem power = g.pow(x, static_cast<long long>(left.index()));
      REQUIRE(m.subgroup.contains(power));
      CHECK(left_transfer(q, left, x).coset == q.class_of(power));
    }
  }
}

TEST_CASE("transfer_element") {
  Z4Setting s;
  const Ring q = Ring::rationals();
  auto v = left_transfer(s.q, s.left, 1);
  CHECK(transfer_element(q, v) == AlgebraElement::basis(q, s.q.cosets(), v.coset, Scalar(-1)));
  CHECK(transfer_element(q, v, false) == AlgebraElement::basis(q, s.q.cosets(), v.coset));
  const Ring f2 = Ring::modulo(2);
  CHECK(transfer_element(f2, v) == transfer_element(f2, v, false));
}

TEST_CASE("verify_properties passes on the battery") {
  for (const auto& m : standard_battery()) {
    CAPTURE(m.name);
    VerifyOptions opts;
    opts.seed = 7;
    opts.samples = 10;
    opts.resamples = 4;
    auto report = verify_properties(m.subgroup, m.kernel, opts);
    CAPTURE(report.render());
    CHECK(report.all_passed());
    CHECK(report.sign_rep_invariant);
    REQUIRE(report.checks.size() == check_names().size());
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
      CHECK(report.checks[i].name == check_names()[i]);
      CHECK(report.checks[i].cases > 0);
    }
  }
}

TEST_CASE("verify_properties trivial case and report rendering") {
  auto c3 = cyclic(3);
  auto whole = Subgroup::whole(c3);
  VerifyOptions opts;
  opts.samples = 5;
  opts.resamples = 2;
  auto report = verify_properties(whole, whole, opts);
  CHECK(report.all_passed());
  const auto text = report.render();
  CHECK(text.find("homomorphism PASS cases=") == 0);
  CHECK(text.find("summary 10/10 passed samples=5 resamples=2 seed=1") != std::string::npos);
  CHECK(report.render() == verify_properties(whole, whole, opts).render());
  CHECK_THROWS_AS(report.check("no_such_check"), std::out_of_range);
}

TEST_CASE("mutations are detected") {
  VerifyOptions opts;
  opts.samples = 10;
  opts.resamples = 4;
  for (const auto& m : standard_battery()) {
    if (decompose(m.subgroup, Side::left).index() < 2) continue;
    CAPTURE(m.name);
    for (const auto& mutant : {testing::corrupt_table_entry(m), testing::corrupt_lookup_entry(m)}) {
      CAPTURE(mutant.description);
      auto report = verify_properties(mutant.quotient, mutant.left, opts);
      CHECK_FALSE(report.all_passed());
      for (const auto& c : report.checks)
        if (!c.passed) CHECK_FALSE(c.counterexample.empty());
    }
  }
}

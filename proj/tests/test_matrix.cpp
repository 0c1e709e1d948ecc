#include <doctest.h>

#include <random>

#include "verl/battery.hpp"
#include "verl/error.hpp"
#include "verl/matrix.hpp"

using namespace verl;

namespace {

Elem at(const FiniteGroup& g, const char* label) { return g.find_label(label).value(); }

// Entry formula evaluated literally: sum over all g with the indicator of
// t_i^-1 g t_j (left) or u_i g u_j^-1 (right).
AlgebraMatrix literal_rep(const CosetSystem& cs, const AlgebraElement& alpha) {
  const auto& g = cs.group();
  const auto& h = cs.subgroup();
  const std::size_t m = cs.index();
  AlgebraMatrix out(m, alpha.ring(), g, h);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      AlgebraElement entry(alpha.ring(), g);
      for (Elem x = 0; x < g.order(); ++x) {
        const Elem y = cs.side() == Side::left ? g.mul(g.mul(g.inv(cs.reps()[i]), x), cs.reps()[j])
                                               : g.mul(g.mul(cs.reps()[i], x), g.inv(cs.reps()[j]));
        if (chi_dot(h, y) == 0) continue;
        entry += AlgebraElement::basis(alpha.ring(), g, y, alpha.coefficient(x));
      }
      out.set(i, j, entry);
    }
  }
  return out;
}

AlgebraMatrix random_matrix(std::size_t dim, const Ring& r, const FiniteGroup& carrier, std::mt19937_64& rng) {
  AlgebraMatrix m(dim, r, carrier);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m.set(i, j, random_element(r, carrier, rng));
  return m;
}

}  // namespace

TEST_CASE("left_regular_rep: identity and the Z/2 circulant") {
  auto q = Ring::rationals();
  auto d3 = dihedral(3);
  const std::vector<Elem> gen{at(d3, "b")};
  auto cs = decompose(subgroup_closure(d3, gen), Side::left);
  auto one = AlgebraElement::basis(q, d3, d3.identity());
  CHECK(left_regular_rep(cs, one) == AlgebraMatrix::identity(3, q, d3, cs.subgroup()));

  auto z2 = cyclic(2);
  auto ex = decompose(Subgroup::trivial(z2), Side::left);
  const Scalar x(3, 7), y(-2, 5);
  auto l = left_regular_rep(ex, AlgebraElement::from_terms(q, z2, {{0, x}, {1, y}}));
  CHECK(l.at(0, 0) == AlgebraElement::basis(q, z2, 0, x));
  CHECK(l.at(0, 1) == AlgebraElement::basis(q, z2, 0, y));
  CHECK(l.at(1, 0) == AlgebraElement::basis(q, z2, 0, y));
  CHECK(l.at(1, 1) == AlgebraElement::basis(q, z2, 0, x));
}

TEST_CASE("left_regular_rep of the Z2 x D3 element e + a + a2 is diagonal") {
  auto q = Ring::rationals();
  auto g = direct_product(cyclic(2), dihedral(3));
  const std::vector<Elem> gens{at(g, "(0,a)"), at(g, "(0,b)")};
  auto cs = decompose(subgroup_closure(g, gens), Side::left);
  REQUIRE(cs.reps()[0] == at(g, "(0,e)"));
  REQUIRE(cs.reps()[1] == at(g, "(1,e)"));
  auto alpha = parse_element(q, g, "(0,e) + (0,a) + (0,a2)");
  auto l = left_regular_rep(cs, alpha);
  CHECK(l.at(0, 0) == alpha);
  CHECK(l.at(1, 1) == alpha);
  CHECK(l.at(0, 1).is_zero());
  CHECK(l.at(1, 0).is_zero());
}

TEST_CASE("right_regular_rep on Z4") {
  auto q = Ring::rationals();
  auto c4 = cyclic(4);
  const std::vector<Elem> u{0, 3};
  auto cs = decompose(Subgroup(c4, {0, 2}), Side::right, std::span<const Elem>(u));
  CHECK(right_regular_rep(cs, AlgebraElement::basis(q, c4, 0)) == AlgebraMatrix::identity(2, q, c4, cs.subgroup()));
  auto r = right_regular_rep(cs, AlgebraElement::basis(q, c4, 1));
  CHECK(r.at(0, 0).is_zero());
  CHECK(r.at(0, 1) == AlgebraElement::basis(q, c4, 2));
  CHECK(r.at(1, 0) == AlgebraElement::basis(q, c4, 0));
  CHECK(r.at(1, 1).is_zero());
}

TEST_CASE("regular representations match the literal entry formula") {
  std::mt19937_64 rng(17);
  const Ring q = Ring::rationals();
  for (const auto& m : standard_battery()) {
    CAPTURE(m.name);
    const auto& g = m.subgroup.parent();
    auto left = decompose(m.subgroup, Side::left);
    auto right = decompose(m.subgroup, Side::right);
    for (int i = 0; i < 10; ++i) {
      auto alpha = random_element(q, g, rng);
      auto t = resample(left, rng());
      auto u = resample(right, rng());
      CHECK(left_regular_rep(t, alpha) == literal_rep(t, alpha));
      CHECK(right_regular_rep(u, alpha) == literal_rep(u, alpha));
    }
  }
}

TEST_CASE("regular representations are algebra homomorphisms with monomial group images") {
  std::mt19937_64 rng(19);
  const Ring q = Ring::rationals();
  for (const auto& m : standard_battery()) {
    CAPTURE(m.name);
    const auto& g = m.subgroup.parent();
    auto left = decompose(m.subgroup, Side::left);
    auto right = decompose(m.subgroup, Side::right);
    for (int i = 0; i < 10; ++i) {
      auto a = random_element(q, g, rng), b = random_element(q, g, rng);
      CHECK(left_regular_rep(left, a * b) == mat_mul(left_regular_rep(left, a), left_regular_rep(left, b)));
      CHECK(right_regular_rep(right, a * b) == mat_mul(right_regular_rep(right, a), right_regular_rep(right, b)));
    }
    for (Elem x = 0; x < g.order(); ++x) {
      auto lx = left_regular_rep(left, AlgebraElement::basis(q, g, x));
      const auto perm = coset_permutation(left, x);
      for (std::size_t j = 0; j < left.index(); ++j) {
        for (std::size_t i = 0; i < left.index(); ++i) {
          const auto& e = lx.at(i, j);
          if (i == perm.mapping[j]) {
            REQUIRE(e.terms().size() == 1);
            CHECK(m.subgroup.contains(e.terms().begin()->first));
            CHECK(e.terms().begin()->second == 1);
          } else {
            CHECK(e.is_zero());
          }
        }
      }
      for (Elem y = 0; y < g.order(); y += 3) {
        CHECK(mat_mul(lx, left_regular_rep(left, AlgebraElement::basis(q, g, y))) ==
              left_regular_rep(left, AlgebraElement::basis(q, g, g.mul(x, y))));
      }
    }
  }
}

TEST_CASE("psi_matrix") {
  const Ring q = Ring::rationals();
  auto g = direct_product(cyclic(2), dihedral(3));
  const std::vector<Elem> gens{at(g, "(0,a)"), at(g, "(0,b)")};
  auto h = subgroup_closure(g, gens);
  auto quo = quotient_group(h, commutator_subgroup(h));
  auto cs = decompose(h, Side::left);
  auto p = psi_matrix(quo, left_regular_rep(cs, parse_element(q, g, "(0,e) + (0,a) + (0,a2)")));
  CHECK(p.at(0, 0) == AlgebraElement::basis(q, quo.cosets(), 0, Scalar(3)));
  CHECK(p.at(1, 1) == AlgebraElement::basis(q, quo.cosets(), 0, Scalar(3)));
  CHECK(p.at(0, 1).is_zero());

  CHECK(psi_matrix(quo, AlgebraMatrix::identity(2, q, g, h)) == AlgebraMatrix::identity(2, q, quo.cosets()));

  auto full = quotient_group(h, h);
  auto pf = psi_matrix(full, left_regular_rep(cs, parse_element(q, g, "2*(0,b) - (0,a) + 5*(1,e)")));
  CHECK(pf.at(0, 0) == AlgebraElement::basis(q, full.cosets(), 0, Scalar(1)));
  CHECK(pf.at(1, 0) == AlgebraElement::basis(q, full.cosets(), 0, Scalar(5)));

  CHECK_THROWS_AS(psi_matrix(quo, AlgebraMatrix::identity(2, q, g)), Error);
}

TEST_CASE("psi_matrix is multiplicative") {
  std::mt19937_64 rng(23);
  const Ring q = Ring::rationals();
  for (const auto& m : standard_battery()) {
    CAPTURE(m.name);
    auto quo = quotient_group(m.subgroup, m.kernel);
    auto cs = decompose(m.subgroup, Side::left);
    const auto& g = m.subgroup.parent();
    for (int i = 0; i < 10; ++i) {
      auto a = left_regular_rep(cs, random_element(q, g, rng));
      auto b = left_regular_rep(cs, random_element(q, g, rng));
      CHECK(psi_matrix(quo, mat_mul(a, b)) == mat_mul(psi_matrix(quo, a), psi_matrix(quo, b)));
    }
  }
}

TEST_CASE("mat_mul checks") {
  const Ring q = Ring::rationals();
  auto c3 = cyclic(3);
  std::mt19937_64 rng(29);
  auto a = random_matrix(3, q, c3, rng);
  CHECK(mat_mul(a, AlgebraMatrix::identity(3, q, c3)) == a);
  CHECK(mat_mul(AlgebraMatrix::identity(3, q, c3), a) == a);
  CHECK_THROWS_AS(mat_mul(a, AlgebraMatrix::identity(2, q, c3)), Error);
  CHECK_THROWS_AS(mat_mul(a, AlgebraMatrix::identity(3, q, cyclic(4))), Error);
  CHECK_THROWS_AS(mat_mul(a, AlgebraMatrix::identity(3, Ring::integers(), c3)), Error);
}

TEST_CASE("det_commutative") {
  const Ring q = Ring::rationals();
  auto c2 = cyclic(2);
  AlgebraMatrix one(1, q, c2);
  auto x = parse_element(q, c2, "3*0 - 1/2*1");
  one.set(0, 0, x);
  CHECK(det_commutative(one) == x);
  CHECK(det_commutative(AlgebraMatrix::identity(4, q, c2)) == AlgebraElement::basis(q, c2, 0));

  // [[x c0, y c1], [y c1, x c0]] -> (x^2 - y^2) c0
  const Scalar xv(5, 3), yv(-2);
  AlgebraMatrix m(2, q, c2);
  m.set(0, 0, AlgebraElement::basis(q, c2, 0, xv));
  m.set(0, 1, AlgebraElement::basis(q, c2, 1, yv));
  m.set(1, 0, AlgebraElement::basis(q, c2, 1, yv));
  m.set(1, 1, AlgebraElement::basis(q, c2, 0, xv));
  CHECK(det_commutative(m) == AlgebraElement::basis(q, c2, 0, xv * xv - yv * yv));

  CHECK_THROWS_AS(det_commutative(AlgebraMatrix::identity(2, q, symmetric(3))), Error);
  CHECK_THROWS_AS(det_cofactor(AlgebraMatrix::identity(2, q, symmetric(3))), Error);
}

TEST_CASE("Leibniz and cofactor determinants agree") {
  std::mt19937_64 rng(31);
  for (const Ring& r : {Ring::rationals(), Ring::modulo(2), Ring::integers()}) {
    for (const auto& carrier : {cyclic(2), cyclic(3), direct_product(cyclic(2), cyclic(2))}) {
      for (std::size_t dim = 1; dim <= 6; ++dim) {
        const int trials = dim <= 4 ? 6 : 2;
        for (int t = 0; t < trials; ++t) {
          auto m = random_matrix(dim, r, carrier, rng);
          CHECK(det_commutative(m) == det_cofactor(m));
        }
      }
    }
  }
}

TEST_CASE("change_of_basis") {
  const Ring q = Ring::rationals();
  auto c4 = cyclic(4);
  Subgroup h(c4, {0, 2});
  auto t = decompose(h, Side::left);
  CHECK(change_of_basis(t, t, q) == AlgebraMatrix::identity(2, q, c4, h));

  const std::vector<Elem> alt{2, 1};
  auto t2 = decompose(h, Side::left, std::span<const Elem>(alt));
  auto p = change_of_basis(t, t2, q);
  CHECK(p.at(0, 0) == AlgebraElement::basis(q, c4, 2));
  CHECK(p.at(1, 1) == AlgebraElement::basis(q, c4, 0));
  CHECK(p.at(0, 1).is_zero());
  CHECK(p.at(1, 0).is_zero());

  const std::vector<Elem> swapped{1, 0};
  auto t3 = decompose(h, Side::left, std::span<const Elem>(swapped));
  CHECK_THROWS_AS(change_of_basis(t, t3, q), Error);
  CHECK_THROWS_AS(change_of_basis(t, decompose(h, Side::right), q), Error);
}

TEST_CASE("change_of_basis conjugates the left representation") {
  std::mt19937_64 rng(37);
  const Ring q = Ring::rationals();
  for (const auto& m : standard_battery()) {
    CAPTURE(m.name);
    const auto& g = m.subgroup.parent();
    auto t = decompose(m.subgroup, Side::left);
    auto quo = quotient_group(m.subgroup, m.kernel);
    const auto id = AlgebraMatrix::identity(t.index(), q, g, m.subgroup);
    for (int i = 0; i < 5; ++i) {
      auto t2 = resample(t, rng());
      auto p = change_of_basis(t, t2, q);
      auto p_inv = change_of_basis(t2, t, q);
      CHECK(mat_mul(p, p_inv) == id);
      CHECK(mat_mul(p_inv, p) == id);
      auto alpha = random_element(q, g, rng);
      CHECK(left_regular_rep(t, alpha) == mat_mul(mat_mul(p_inv, left_regular_rep(t2, alpha)), p));
      CHECK(det_commutative(psi_matrix(quo, left_regular_rep(t, alpha))) ==
            det_commutative(psi_matrix(quo, left_regular_rep(t2, alpha))));
    }
  }
}

TEST_CASE("R over inverted representatives equals L entrywise") {
  std::mt19937_64 rng(41);
  const Ring q = Ring::rationals();
  for (const auto& m : standard_battery()) {
    auto t = resample(decompose(m.subgroup, Side::left), rng());
    auto u = inverse_reps(t);
    for (int i = 0; i < 10; ++i) {
      auto alpha = random_element(q, m.subgroup.parent(), rng);
      CHECK(right_regular_rep(u, alpha) == left_regular_rep(t, alpha));
    }
  }
}

TEST_CASE("render matrix") {
  const Ring q = Ring::rationals();
  auto c2 = cyclic(2);
  CHECK(render(AlgebraMatrix::identity(2, q, c2)) == "[[1*0, 0], [0, 1*0]]");
  AlgebraMatrix m(2, q, c2);
  m.set(0, 0, parse_element(q, c2, "2*1"));
  m.set(1, 1, parse_element(q, c2, "0 - 1"));
  CHECK(render(m) == "[[2*1, 0], [0, 1*0 - 1*1]]");
}

#include "verl/transfer.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "verl/error.hpp"

namespace verl {

namespace {

void check_system(const QuotientGroup& q, const CosetSystem& cs, Side side) {
  if (cs.side() != side) throw Error(ErrorCode::WrongSide, "coset system is on the wrong side");
  if (!(cs.subgroup() == q.subgroup())) {
    throw Error(ErrorCode::CarrierMismatch, "coset system and quotient use different subgroups");
  }
}

// Product of the per-coset factors in H/K, in the given coset order.
template <typename FactorFn>
Elem factor_product(const QuotientGroup& q, std::size_t m, bool reversed, FactorFn factor) {
  const auto& hk = q.cosets();
  Elem acc = hk.identity();
  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t i = reversed ? m - 1 - step : step;
    acc = hk.mul(acc, q.class_of(factor(i)));
  }
  return acc;
}

Elem left_coset_product(const QuotientGroup& q, const CosetSystem& cs, Elem g, bool reversed) {
  const auto& grp = cs.group();
  return factor_product(q, cs.index(), reversed,
                        [&](std::size_t i) { return cs.h_factor(grp.mul(g, cs.reps()[i])); });
}

}  // namespace

TransferValue left_transfer(const QuotientGroup& q, const CosetSystem& cs, Elem g) {
  check_system(q, cs, Side::left);
  return {q.cosets(), left_coset_product(q, cs, g, false), sign_of(cs, g)};
}

TransferValue right_transfer(const QuotientGroup& q, const CosetSystem& cs, Elem g) {
  check_system(q, cs, Side::right);
  const auto& grp = cs.group();
  const Elem c = factor_product(q, cs.index(), false,
                                [&](std::size_t i) { return cs.h_factor(grp.mul(cs.reps()[i], g)); });
  return {q.cosets(), c, sign_of(cs, g)};
}

AlgebraElement det_transfer(const QuotientGroup& q, const CosetSystem& cs, const AlgebraElement& alpha) {
  if (!q.cosets().is_abelian()) throw Error(ErrorCode::NonAbelianQuotient, "H/K is not abelian");
  check_system(q, cs, Side::left);
  return det_commutative(psi_matrix(q, left_regular_rep(cs, alpha)));
}

int sign_of(const CosetSystem& cs, Elem g) { return coset_permutation(cs, g).sign; }

AlgebraElement transfer_element(const Ring& ring, const TransferValue& v, bool signed_value) {
  const Scalar c = signed_value ? Scalar(v.sign) : Scalar(1);
  return AlgebraElement::basis(ring, v.quotient, v.coset, c);
}

// ---------------------------------------------------------------------------
// Report

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const CheckResult& VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no check named " + name);
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << c.name << (c.passed ? " PASS" : " FAIL") << " cases=" << c.cases << " seed=" << seed;
    if (!c.passed) out << " counterexample: " << c.counterexample;
    out << '\n';
    passed += c.passed ? 1 : 0;
  }
  out << "sign_rep_invariant " << (sign_rep_invariant ? "yes" : "no") << '\n';
  out << "summary " << passed << "/" << checks.size() << " passed samples=" << samples
      << " resamples=" << resamples << " seed=" << seed << '\n';
  return out.str();
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "homomorphism",        "rep_invariance_left",     "rep_invariance_right",
      "left_equals_right",   "sign_multiplicative",     "det_multiplicative",
      "det_rep_invariance",  "left_right_rep_equality", "det_equals_sign_times_transfer",
      "f2_det_equals_transfer",
  };
  return names;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

class Verifier {
 public:
  Verifier(const QuotientGroup& q, const CosetSystem& left, const VerifyOptions& opt)
      : q_(q), left_(left), g_(left.group()), opt_(opt), rng_(opt.seed) {
    for (std::size_t k = 0; k < opt.resamples; ++k) left_seeds_.push_back(rng_());
    for (std::size_t k = 0; k < opt.resamples; ++k) right_seeds_.push_back(rng_());
    for (std::size_t k = 0; k < opt.samples; ++k) {
      alphas_.push_back(random_element(opt.ring, g_, rng_));
      betas_.push_back(random_element(opt.ring, g_, rng_));
    }
    for (std::size_t k = 0; k < opt.resamples; ++k) conj_alphas_.push_back(random_element(opt.ring, g_, rng_));
  }

  VerificationReport run() {
    report_.seed = opt_.seed;
    report_.samples = opt_.samples;
    report_.resamples = opt_.resamples;
    run_check("homomorphism", [this](CheckResult& r) { homomorphism(r); });
    run_check("rep_invariance_left", [this](CheckResult& r) { rep_invariance(r, Side::left); });
    run_check("rep_invariance_right", [this](CheckResult& r) { rep_invariance(r, Side::right); });
    run_check("left_equals_right", [this](CheckResult& r) { left_equals_right(r); });
    run_check("sign_multiplicative", [this](CheckResult& r) { sign_multiplicative(r); });
    run_check("det_multiplicative", [this](CheckResult& r) { det_multiplicative(r); });
    run_check("det_rep_invariance", [this](CheckResult& r) { det_rep_invariance(r); });
    run_check("left_right_rep_equality", [this](CheckResult& r) { left_right_rep_equality(r); });
    run_check("det_equals_sign_times_transfer", [this](CheckResult& r) { det_equals_signed(r); });
    run_check("f2_det_equals_transfer", [this](CheckResult& r) { f2_det(r); });
    return report_;
  }

 private:
  void run_check(const std::string& name, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    try {
      body(r);
    } catch (const std::exception& e) {
      if (r.passed) {
        r.passed = false;
        r.counterexample = std::string("error after ") + std::to_string(r.cases) + " cases: " + e.what();
      }
    }
    report_.checks.push_back(std::move(r));
  }

  // Records the first failure only; returns false once the check has failed.
  static bool expect(CheckResult& r, bool ok, const std::function<std::string()>& describe) {
    ++r.cases;
    if (!ok && r.passed) {
      r.passed = false;
      r.counterexample = describe();
    }
    return ok;
  }

  std::string lbl(Elem x) const { return g_.label(x); }
  std::string cls(Elem c) const { return q_.cosets().label(c); }
  std::string reps_text(const CosetSystem& cs) const {
    std::string s = "[";
    for (std::size_t i = 0; i < cs.index(); ++i) s += (i ? "," : "") + lbl(cs.reps()[i]);
    return s + "]";
  }

  const CosetSystem& right() {
    if (!right_) right_ = decompose(q_.subgroup(), Side::right);
    return *right_;
  }

  void homomorphism(CheckResult& r) {
    const auto& hk = q_.cosets();
    const std::size_t n = g_.order();
    std::vector<Elem> v(n);
    for (Elem x = 0; x < n; ++x) v[x] = left_transfer(q_, left_, x).coset;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const Elem lhs = v[g_.mul(x, y)];
        const Elem rhs = hk.mul(v[x], v[y]);
        if (!expect(r, lhs == rhs, [&] {
              return "g=" + lbl(x) + " h=" + lbl(y) + " V(gh)=" + cls(lhs) + " V(g)V(h)=" + cls(rhs);
            }))
          return;
      }
    }
    // The product over cosets must not depend on the order of the factors.
    for (Elem x = 0; x < n; ++x) {
      const Elem rev = left_coset_product(q_, left_, x, true);
      if (!expect(r, rev == v[x], [&] {
            return "g=" + lbl(x) + " forward product " + cls(v[x]) + " reversed product " + cls(rev);
          }))
        return;
    }
  }

  void rep_invariance(CheckResult& r, Side side) {
    const CosetSystem& base = side == Side::left ? left_ : right();
    const auto& seeds = side == Side::left ? left_seeds_ : right_seeds_;
    auto transfer = [&](const CosetSystem& cs, Elem x) {
      return side == Side::left ? left_transfer(q_, cs, x) : right_transfer(q_, cs, x);
    };
    std::vector<TransferValue> v;
    for (Elem x = 0; x < g_.order(); ++x) v.push_back(transfer(base, x));
    for (auto seed : seeds) {
      const CosetSystem other = resample(base, seed);
      for (Elem x = 0; x < g_.order(); ++x) {
        const TransferValue w = transfer(other, x);
        if (w.sign != v[x].sign) report_.sign_rep_invariant = false;
        if (!expect(r, w.coset == v[x].coset, [&] {
              return "g=" + lbl(x) + " reps " + reps_text(base) + " give " + cls(v[x].coset) + ", reps " +
                     reps_text(other) + " give " + cls(w.coset) + " (resample seed " + std::to_string(seed) + ")";
            }))
          return;
      }
    }
  }

  void left_equals_right(CheckResult& r) {
    const CosetSystem inv = inverse_reps(left_);
    for (const CosetSystem* u : {&right(), &inv}) {
      for (Elem x = 0; x < g_.order(); ++x) {
        const TransferValue a = left_transfer(q_, left_, x);
        const TransferValue b = right_transfer(q_, *u, x);
        if (!expect(r, a == b, [&] {
              return "g=" + lbl(x) + " left " + cls(a.coset) + " sign " + std::to_string(a.sign) + ", right reps " +
                     reps_text(*u) + " " + cls(b.coset) + " sign " + std::to_string(b.sign);
            }))
          return;
      }
    }
  }

  void sign_multiplicative(CheckResult& r) {
    for (const CosetSystem* cs : {&left_, &right()}) {
      std::vector<int> s;
      for (Elem x = 0; x < g_.order(); ++x) s.push_back(sign_of(*cs, x));
      for (Elem x = 0; x < g_.order(); ++x) {
        for (Elem y = 0; y < g_.order(); ++y) {
          const int lhs = s[g_.mul(x, y)];
          if (!expect(r, lhs == s[x] * s[y], [&] {
                return std::string(cs->side() == Side::left ? "left" : "right") + " g=" + lbl(x) + " h=" + lbl(y) +
                       " sgn(gh)=" + std::to_string(lhs) + " sgn(g)sgn(h)=" + std::to_string(s[x] * s[y]);
              }))
            return;
        }
      }
    }
  }

  void det_multiplicative(CheckResult& r) {
    const auto one = AlgebraElement::basis(opt_.ring, g_, g_.identity());
    const auto det_one = det_transfer(q_, left_, one);
    if (!expect(r, det_one == AlgebraElement::basis(opt_.ring, q_.cosets(), q_.cosets().identity()),
                [&] { return "Det(1) = " + render(det_one); }))
      return;
    for (std::size_t k = 0; k < alphas_.size(); ++k) {
      const auto& a = alphas_[k];
      const auto& b = betas_[k];
      const auto lhs = det_transfer(q_, left_, a * b);
      const auto rhs = det_transfer(q_, left_, a) * det_transfer(q_, left_, b);
      if (!expect(r, lhs == rhs, [&] {
            return "alpha=" + render(a) + " beta=" + render(b) + " Det(alpha beta)=" + render(lhs) +
                   " Det(alpha)Det(beta)=" + render(rhs);
          }))
        return;
    }
  }

  void det_rep_invariance(CheckResult& r) {
    const auto& ring = opt_.ring;
    for (std::size_t k = 0; k < left_seeds_.size(); ++k) {
      const CosetSystem other = resample(left_, left_seeds_[k]);
      const auto& a = conj_alphas_[k];
      const auto lhs = det_transfer(q_, left_, a);
      const auto rhs = det_transfer(q_, other, a);
      if (!expect(r, lhs == rhs, [&] {
            return "alpha=" + render(a) + " reps " + reps_text(left_) + " give " + render(lhs) + ", reps " +
                   reps_text(other) + " give " + render(rhs);
          }))
        return;

      const AlgebraMatrix p = change_of_basis(left_, other, ring);
      const AlgebraMatrix p_inv = change_of_basis(other, left_, ring);
      const AlgebraMatrix id = AlgebraMatrix::identity(left_.index(), ring, g_, left_.subgroup());
      if (!expect(r, mat_mul(p, p_inv) == id && mat_mul(p_inv, p) == id, [&] {
            return "P P^-1 != I for reps " + reps_text(left_) + " -> " + reps_text(other) + ": P=" + render(p);
          }))
        return;
      const AlgebraMatrix conj = mat_mul(mat_mul(p_inv, left_regular_rep(other, a)), p);
      const AlgebraMatrix direct = left_regular_rep(left_, a);
      if (!expect(r, conj == direct, [&] {
            return "alpha=" + render(a) + " reps " + reps_text(other) + ": P^-1 L_T'(alpha) P=" + render(conj) +
                   " L_T(alpha)=" + render(direct);
          }))
        return;
    }
  }

  void left_right_rep_equality(CheckResult& r) {
    const CosetSystem inv = inverse_reps(left_);
    for (const auto& a : alphas_) {
      const auto lt = left_regular_rep(left_, a);
      const auto rt = right_regular_rep(inv, a);
      if (!expect(r, lt == rt, [&] {
            return "alpha=" + render(a) + " L_T=" + render(lt) + " R_{T^-1}=" + render(rt);
          }))
        return;
    }
  }

  void det_equals_signed(CheckResult& r) {
    for (Elem x = 0; x < g_.order(); ++x) {
      const auto det = det_transfer(q_, left_, AlgebraElement::basis(opt_.ring, g_, x));
      const auto expected = transfer_element(opt_.ring, left_transfer(q_, left_, x), true);
      if (!expect(r, det == expected, [&] {
            return "g=" + lbl(x) + " Det(g)=" + render(det) + " sgn(g)V(g)=" + render(expected);
          }))
        return;
    }
  }

  void f2_det(CheckResult& r) {
    const Ring f2 = Ring::modulo(2);
    for (Elem x = 0; x < g_.order(); ++x) {
      const auto det = det_transfer(q_, left_, AlgebraElement::basis(f2, g_, x));
      const auto expected = transfer_element(f2, left_transfer(q_, left_, x), false);
      if (!expect(r, det == expected, [&] {
            return "g=" + lbl(x) + " Det(g) over F2=" + render(det) + " V(g)=" + render(expected);
          }))
        return;
    }
  }

  const QuotientGroup& q_;
  const CosetSystem& left_;
  FiniteGroup g_;
  VerifyOptions opt_;
  std::mt19937_64 rng_;
  std::vector<std::uint64_t> left_seeds_, right_seeds_;
  std::vector<AlgebraElement> alphas_, betas_, conj_alphas_;
  std::optional<CosetSystem> right_;
  VerificationReport report_;
};

}  // namespace

VerificationReport verify_properties(const Subgroup& h, const Subgroup& k, const VerifyOptions& options) {
  const QuotientGroup q = quotient_group(h, k);
  const CosetSystem left = decompose(h, Side::left);
  return verify_properties(q, left, options);
}

VerificationReport verify_properties(const QuotientGroup& q, const CosetSystem& left, const VerifyOptions& options) {
  if (!q.cosets().is_abelian()) throw Error(ErrorCode::NonAbelianQuotient, "H/K is not abelian");
  check_system(q, left, Side::left);
  return Verifier(q, left, options).run();
}

}  // namespace verl

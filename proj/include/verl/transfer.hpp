#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "verl/algebra.hpp"
#include "verl/coset.hpp"
#include "verl/matrix.hpp"

namespace verl {

/// A class in H/K together with the sign of the induced coset permutation.
struct TransferValue {
  FiniteGroup quotient;
  Elem coset = 0;
  int sign = 1;

  bool operator==(const TransferValue& other) const = default;
};

/// prod_i class_of((bar(g t_i))^-1 g t_i), multiplied for i = 1..m in order.
TransferValue left_transfer(const QuotientGroup& q, const CosetSystem& cs, Elem g);

/// prod_i class_of(u_i g (tilde(u_i g))^-1), multiplied for i = 1..m in order.
TransferValue right_transfer(const QuotientGroup& q, const CosetSystem& cs, Elem g);

/// det(psi(L_T(alpha))) in R(H/K). Throws NonAbelianQuotient if H/K is not abelian.
AlgebraElement det_transfer(const QuotientGroup& q, const CosetSystem& cs, const AlgebraElement& alpha);

/// Parity of the permutation g induces on the cosets of cs.
int sign_of(const CosetSystem& cs, Elem g);

/// sign * 1 * class as an element of R(H/K); the sign is dropped when signed is false.
AlgebraElement transfer_element(const Ring& ring, const TransferValue& v, bool signed_value = true);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t resamples = 0;
  /// Whether every sign stayed the same across all representative resamplings.
  bool sign_rep_invariant = true;

  bool all_passed() const;
  const CheckResult& check(const std::string& name) const;

  /// One line per check: "<name> PASS|FAIL cases=<n> seed=<s>[ counterexample: ...]".
  std::string render() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Random (alpha, beta) pairs for the algebra-level checks.
  std::size_t samples = 100;
  /// Resampled representative sets per side.
  std::size_t resamples = 20;
  Ring ring = Ring::rationals();
};

/// Names of the ten checks in report order.
const std::vector<std::string>& check_names();

/**
 * Runs the ten transfer / determinant identities on (G, H, K).
 *
 * The (g, h) checks are exhaustive; algebra checks use `samples` random
 * elements and representative checks `resamples` random coset systems, all
 * drawn from std::mt19937_64 seeded with options.seed. Throws NotNormal or
 * NonAbelianQuotient when the input is not a valid transfer setting.
 */
VerificationReport verify_properties(const Subgroup& h, const Subgroup& k, const VerifyOptions& options = {});

/// Same checks against an explicit left coset system, which may be corrupted:
/// every failure is reported with a counterexample instead of thrown.
VerificationReport verify_properties(const QuotientGroup& q, const CosetSystem& left,
                                     const VerifyOptions& options = {});

}  // namespace verl

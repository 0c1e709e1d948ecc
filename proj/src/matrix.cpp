#include "verl/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "verl/error.hpp"

namespace verl {

AlgebraMatrix::AlgebraMatrix(std::size_t dim, Ring ring, FiniteGroup carrier, std::optional<Subgroup> support)
    : dim_(dim), ring_(std::move(ring)), carrier_(std::move(carrier)), support_(std::move(support)) {
  if (dim_ == 0) throw Error(ErrorCode::DimMismatch, "matrix dimension must be at least 1");
  if (support_ && !(support_->parent() == carrier_)) {
    throw Error(ErrorCode::CarrierMismatch, "support subgroup is not inside the carrier");
  }
  entries_.assign(dim_ * dim_, AlgebraElement(ring_, carrier_));
}

AlgebraMatrix AlgebraMatrix::identity(std::size_t dim, Ring ring, FiniteGroup carrier,
                                      std::optional<Subgroup> support) {
  AlgebraMatrix m(dim, ring, carrier, std::move(support));
  for (std::size_t i = 0; i < dim; ++i) m.set(i, i, AlgebraElement::basis(ring, carrier, carrier.identity()));
  return m;
}

void AlgebraMatrix::set(std::size_t i, std::size_t j, AlgebraElement x) {
  if (i >= dim_ || j >= dim_) throw Error(ErrorCode::DimMismatch, "entry index out of range");
  if (!(x.ring() == ring_)) throw Error(ErrorCode::RingMismatch, "entry ring " + x.ring().name());
  if (!(x.carrier() == carrier_)) throw Error(ErrorCode::CarrierMismatch, "entry carrier differs");
  if (support_) {
    for (const auto& [g, c] : x.terms()) {
      if (!support_->contains(g)) {
        throw Error(ErrorCode::SupportOutsideSubgroup, "entry (" + std::to_string(i) + "," +
                                                           std::to_string(j) + ") has term " +
                                                           carrier_.label(g) + " outside the subgroup");
      }
    }
  }
  entries_[i * dim_ + j] = std::move(x);
}

bool AlgebraMatrix::operator==(const AlgebraMatrix& other) const {
  return dim_ == other.dim_ && ring_ == other.ring_ && carrier_ == other.carrier_ &&
         support_ == other.support_ && entries_ == other.entries_;
}

namespace {

void check_alpha(const CosetSystem& cs, const AlgebraElement& alpha, Side side) {
  if (cs.side() != side) throw Error(ErrorCode::WrongSide, "coset system is on the wrong side");
  if (!(alpha.carrier() == cs.group())) {
    throw Error(ErrorCode::CarrierMismatch, "element is not over the coset system's group");
  }
}

// Both representations are monomial per group element: g contributes to
// exactly one entry of each column (left) or row (right).
AlgebraMatrix regular_rep(const CosetSystem& cs, const AlgebraElement& alpha) {
  const auto& g = cs.group();
  const std::size_t m = cs.index();
  std::vector<std::vector<std::pair<Elem, Scalar>>> cells(m * m);
  for (const auto& [x, c] : alpha.terms()) {
    for (std::size_t k = 0; k < m; ++k) {
      const Elem r = cs.reps()[k];
      if (cs.side() == Side::left) {
        const Elem y = g.mul(x, r);  // g t_j lies in t_i H for i = coset_of(g t_j)
        cells[cs.coset_of(y) * m + k].emplace_back(cs.h_factor(y), c);
      } else {
        const Elem y = g.mul(r, x);  // u_i g lies in H u_j for j = coset_of(u_i g)
        cells[k * m + cs.coset_of(y)].emplace_back(cs.h_factor(y), c);
      }
    }
  }
  AlgebraMatrix out(m, alpha.ring(), g, cs.subgroup());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out.set(i, j, AlgebraElement::from_terms(alpha.ring(), g, cells[i * m + j]));
  return out;
}

bool carrier_commutes(const AlgebraMatrix& m) {
  return m.support() ? m.support()->is_abelian() : m.carrier().is_abelian();
}

AlgebraElement cofactor_rec(const AlgebraMatrix& m, std::size_t row, std::vector<std::size_t>& cols) {
  if (cols.size() == 1) return m.at(row, cols[0]);
  AlgebraElement acc(m.ring(), m.carrier());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (m.at(row, c).is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    AlgebraElement minor = cofactor_rec(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    AlgebraElement term = m.at(row, c) * minor;
    acc += (k % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

AlgebraMatrix left_regular_rep(const CosetSystem& cs, const AlgebraElement& alpha) {
  check_alpha(cs, alpha, Side::left);
  return regular_rep(cs, alpha);
}

AlgebraMatrix right_regular_rep(const CosetSystem& cs, const AlgebraElement& alpha) {
  check_alpha(cs, alpha, Side::right);
  return regular_rep(cs, alpha);
}

AlgebraMatrix psi_matrix(const QuotientGroup& q, const AlgebraMatrix& m) {
  if (!m.support() || !(*m.support() == q.subgroup())) {
    throw Error(ErrorCode::CarrierMismatch, "matrix is not over the quotient's subgroup");
  }
  AlgebraMatrix out(m.dim(), m.ring(), q.cosets());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out.set(i, j, project_element(q, m.at(i, j)));
  return out;
}

AlgebraMatrix mat_mul(const AlgebraMatrix& a, const AlgebraMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "dimensions differ");
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::RingMismatch, a.ring().name() + " vs " + b.ring().name());
  if (!(a.carrier() == b.carrier()) || !(a.support() == b.support())) {
    throw Error(ErrorCode::CarrierMismatch, "matrices over different carriers");
  }
  const std::size_t m = a.dim();
  AlgebraMatrix out(m, a.ring(), a.carrier(), a.support());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      AlgebraElement acc(a.ring(), a.carrier());
      for (std::size_t k = 0; k < m; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        acc += a.at(i, k) * b.at(k, j);
      }
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

AlgebraElement det_commutative(const AlgebraMatrix& m) {
  if (!carrier_commutes(m)) {
    throw Error(ErrorCode::NonAbelianCarrier, "determinant needs a commutative coefficient algebra");
  }
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  AlgebraElement acc(m.ring(), m.carrier());
  const AlgebraElement one = AlgebraElement::basis(m.ring(), m.carrier(), m.carrier().identity());
  do {
    AlgebraElement prod = one;
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod = prod * m.at(i, perm[i]);
    if (prod.is_zero()) continue;
    acc += permutation_sign(perm) > 0 ? prod : -prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

AlgebraElement det_cofactor(const AlgebraMatrix& m) {
  if (!carrier_commutes(m)) {
    throw Error(ErrorCode::NonAbelianCarrier, "determinant needs a commutative coefficient algebra");
  }
  std::vector<std::size_t> cols(m.dim());
  std::iota(cols.begin(), cols.end(), std::size_t{0});
  return cofactor_rec(m, 0, cols);
}

AlgebraMatrix change_of_basis(const CosetSystem& t, const CosetSystem& t_prime, const Ring& ring) {
  if (t.side() != Side::left || t_prime.side() != Side::left) {
    throw Error(ErrorCode::SystemMismatch, "change of basis expects two left systems");
  }
  if (!(t.subgroup() == t_prime.subgroup()) ||
      !std::equal(t.rep_of().begin(), t.rep_of().end(), t_prime.rep_of().begin(), t_prime.rep_of().end())) {
    throw Error(ErrorCode::SystemMismatch, "systems differ in subgroup or coset order");
  }
  const auto& g = t.group();
  const std::size_t m = t.index();
  AlgebraMatrix p(m, ring, g, t.subgroup());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Elem x = g.mul(g.inv(t_prime.reps()[i]), t.reps()[j]);
      if (t.subgroup().contains(x)) p.set(i, j, AlgebraElement::basis(ring, g, x));
    }
  }
  return p;
}

std::string render(const AlgebraMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ", ";
      out += render(m.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace verl

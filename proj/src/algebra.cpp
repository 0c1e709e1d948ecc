#include "verl/algebra.hpp"

#include <cctype>
#include <utility>

#include "verl/error.hpp"

namespace verl {

AlgebraElement::AlgebraElement(Ring ring, FiniteGroup carrier)
    : ring_(std::move(ring)), carrier_(std::move(carrier)) {}

AlgebraElement AlgebraElement::basis(Ring ring, FiniteGroup carrier, Elem g) {
  const Scalar one = ring.one();
  return basis(std::move(ring), std::move(carrier), g, one);
}

AlgebraElement AlgebraElement::basis(Ring ring, FiniteGroup carrier, Elem g, const Scalar& coeff) {
  AlgebraElement x(std::move(ring), std::move(carrier));
  x.add_term(g, coeff);
  return x;
}

AlgebraElement AlgebraElement::from_terms(Ring ring, FiniteGroup carrier,
                                          const std::vector<std::pair<Elem, Scalar>>& terms) {
  AlgebraElement x(std::move(ring), std::move(carrier));
  for (const auto& [g, c] : terms) x.add_term(g, c);
  return x;
}

void AlgebraElement::add_term(Elem g, const Scalar& c) {
  if (g >= carrier_.order()) {
    throw Error(ErrorCode::CarrierMismatch, "element index " + std::to_string(g) + " outside carrier");
  }
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    Scalar v = ring_.normalize(c);
    if (v != 0) terms_.emplace(g, std::move(v));
    return;
  }
  it->second = ring_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void AlgebraElement::check_compatible(const AlgebraElement& y) const {
  if (!(ring_ == y.ring_)) {
    throw Error(ErrorCode::RingMismatch, "rings " + ring_.name() + " and " + y.ring_.name());
  }
  if (!(carrier_ == y.carrier_)) throw Error(ErrorCode::CarrierMismatch, "different carrier groups");
}

Scalar AlgebraElement::coefficient(Elem g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar AlgebraElement::augmentation() const {
  Scalar s(0);
  for (const auto& [g, c] : terms_) s = ring_.add(s, c);
  return s;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
  AlgebraElement out(ring_, carrier_);
  for (const auto& [g, x] : terms_) out.add_term(g, ring_.mul(x, c));
  return out;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(Scalar(-1)); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& y) {
  check_compatible(y);
  for (const auto& [g, c] : y.terms_) add_term(g, c);
  return *this;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out(x);
  out += y;
  return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) { return x + (-y); }

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  x.check_compatible(y);
  AlgebraElement out(x.ring_, x.carrier_);
  for (const auto& [g, a] : x.terms_)
    for (const auto& [h, b] : y.terms_) out.add_term(x.carrier_.mul(g, h), x.ring_.mul(a, b));
  return out;
}

AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y) { return x + y; }
AlgebraElement alg_mul(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

int chi_dot(const Subgroup& h, Elem g) { return h.contains(g) ? 1 : 0; }

AlgebraElement project_element(const QuotientGroup& q, const AlgebraElement& x) {
  if (!(x.carrier() == q.subgroup().parent())) {
    throw Error(ErrorCode::CarrierMismatch, "element is not over the subgroup's parent group");
  }
  std::vector<std::pair<Elem, Scalar>> terms;
  terms.reserve(x.terms().size());
  for (const auto& [h, c] : x.terms()) {
    if (!q.subgroup().contains(h)) {
      throw Error(ErrorCode::SupportOutsideSubgroup,
                  "term " + x.carrier().label(h) + " lies outside the subgroup");
    }
    terms.emplace_back(q.class_of(h), c);
  }
  return AlgebraElement::from_terms(x.ring(), q.cosets(), terms);
}

ScalarMatrix regular_matrix(const AlgebraElement& x) {
  const auto& g = x.carrier();
  const std::size_t n = g.order();
  ScalarMatrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (const auto& [a, c] : x.terms())
    for (Elem j = 0; j < n; ++j) m[g.mul(a, j)][j] = x.ring().add(m[g.mul(a, j)][j], c);
  return m;
}

// ---------------------------------------------------------------------------
// Exact linear algebra

namespace {

Scalar det_rational(ScalarMatrix a) {
  const std::size_t n = a.size();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Scalar f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

mpz_class det_bareiss(const ScalarMatrix& in) {
  const std::size_t n = in.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = in[i][j].get_num();
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

mpz_class det_mod_prime(const ScalarMatrix& in, const mpz_class& p) {
  const std::size_t n = in.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = in[i][j].get_num() % p;
  mpz_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = p - det;
    }
    det = (det * a[col][col]) % p;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), a[col][col].get_mpz_t(), p.get_mpz_t());
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const mpz_class f = (a[r][col] * inv) % p;
      for (std::size_t c = col; c < n; ++c) {
        a[r][c] = (a[r][c] - f * a[col][c]) % p;
        if (a[r][c] < 0) a[r][c] += p;
      }
    }
  }
  return det % p;
}

/// Solves a v = rhs over Q; nullopt when a is singular.
std::optional<std::vector<Scalar>> solve_rational(ScalarMatrix a, std::vector<Scalar> rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Scalar f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= a[i][i];
  return rhs;
}

}  // namespace

Scalar scalar_determinant(const Ring& ring, const ScalarMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw Error(ErrorCode::DimMismatch, "matrix is not square");
  }
  switch (ring.kind()) {
    case Ring::Kind::rational: return det_rational(m);
    case Ring::Kind::integer: return Scalar(det_bareiss(m));
    case Ring::Kind::modular:
      if (ring.is_prime_field()) return Scalar(det_mod_prime(m, mpz_class(ring.modulus())));
      return ring.normalize(Scalar(det_bareiss(m)));
  }
  throw Error(ErrorCode::UnsupportedRing, ring.name());
}

bool is_invertible(const AlgebraElement& x) {
  return x.ring().is_unit(scalar_determinant(x.ring(), regular_matrix(x)));
}

std::optional<AlgebraElement> inverse(const AlgebraElement& x) {
  if (!is_invertible(x)) return std::nullopt;
  const auto& g = x.carrier();
  std::vector<Scalar> rhs(g.order(), Scalar(0));
  rhs[g.identity()] = 1;
  // The integer lift of the regular matrix has a determinant that is a unit in
  // the ring, so every denominator of the rational solution is one too.
  auto v = solve_rational(regular_matrix(x), std::move(rhs));
  if (!v) return std::nullopt;
  std::vector<std::pair<Elem, Scalar>> terms;
  for (Elem i = 0; i < g.order(); ++i) terms.emplace_back(i, (*v)[i]);
  return AlgebraElement::from_terms(x.ring(), g, terms);
}

AlgebraElement random_element(const Ring& ring, const FiniteGroup& carrier, std::mt19937_64& rng) {
  static constexpr long kNumerators[] = {-5, -4, -3, -2, -1, 1, 2, 3, 4, 5};
  std::vector<std::pair<Elem, Scalar>> terms;
  for (Elem g = 0; g < carrier.order(); ++g) {
    if (rng() % 2 == 0) continue;
    const long p = kNumerators[rng() % 10];
    const long q = ring.kind() == Ring::Kind::rational ? static_cast<long>(1 + rng() % 3) : 1;
    Scalar c(p, q);
    c.canonicalize();
    terms.emplace_back(g, c);
  }
  return AlgebraElement::from_terms(ring, carrier, terms);
}

// ---------------------------------------------------------------------------
// Text form

std::string render(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    const Scalar v = c;
    const bool negative = v < 0;
    const Scalar mag = negative ? Scalar(-v) : v;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string& label = x.carrier().label(g);
    // Numeric-looking labels keep their coefficient so "0" stays the zero element.
    const bool numeric = label.find_first_not_of("0123456789/") == std::string::npos;
    if (mag != 1 || numeric) out += mag.get_str() + "*";
    out += label;
    first = false;
  }
  return out;
}

AlgebraElement parse_element(const Ring& ring, const FiniteGroup& carrier, std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(text[i]))) s += text[i];
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty algebra element");
  if (s == "0" && !carrier.find_label("0")) return AlgebraElement(ring, carrier);

  std::vector<std::pair<Elem, Scalar>> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorCode::ParseError, "expected '+' or '-' at column " + std::to_string(pos + 1));
    }
    const std::size_t start = pos;
    int depth = 0;
    while (pos < s.size()) {
      const char c = s[pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == '+' || c == '-') && pos > start && s[pos - 1] != '*') break;
      ++pos;
    }
    const std::string term = s.substr(start, pos - start);
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term at column " + std::to_string(start + 1));

    std::string label = term;
    Scalar coeff(1);
    const auto star = term.find('*');
    if (star != std::string::npos) {
      coeff = ring.parse(term.substr(0, star));
      label = term.substr(star + 1);
    }
    auto g = carrier.find_label(label);
    if (!g) throw Error(ErrorCode::ParseError, "unknown element label '" + label + "'");
    terms.emplace_back(*g, negative ? Scalar(-coeff) : coeff);
  }
  return AlgebraElement::from_terms(ring, carrier, terms);
}

}  // namespace verl

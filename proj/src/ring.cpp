#include "verl/ring.hpp"

#include <cctype>
#include <charconv>

#include "verl/error.hpp"

namespace verl {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Ring Ring::modulo(unsigned long n) {
  if (n < 2) throw Error(ErrorCode::UnsupportedRing, "modulus must be at least 2");
  return Ring(Kind::modular, n);
}

Ring Ring::from_name(std::string_view name) {
  if (name == "int") return integers();
  if (name == "rat") return rationals();
  if (name.starts_with("mod:")) {
    auto digits = name.substr(4);
    unsigned long n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorCode::UnsupportedRing, "bad modulus in '" + std::string(name) + "'");
    }
    return modulo(n);
  }
  throw Error(ErrorCode::UnsupportedRing, "unknown ring '" + std::string(name) + "'");
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::integer: return "int";
    case Kind::rational: return "rat";
    case Kind::modular: return "mod:" + std::to_string(modulus_);
  }
  return "?";
}

bool Ring::is_prime_field() const {
  if (kind_ != Kind::modular) return false;
  return mpz_probab_prime_p(mpz_class(modulus_).get_mpz_t(), 25) > 0;
}

Scalar Ring::normalize(const Scalar& x) const {
  switch (kind_) {
    case Kind::rational: {
      Scalar out(x);
      out.canonicalize();
      return out;
    }
    case Kind::integer:
      if (x.get_den() != 1) throw Error(ErrorCode::ParseError, x.get_str() + " is not an integer");
      return x;
    case Kind::modular: {
      const mpz_class n(modulus_);
      mpz_class num = x.get_num() % n;
      if (num < 0) num += n;
      if (x.get_den() == 1) return Scalar(num);
      mpz_class den_inv;
      if (mpz_invert(den_inv.get_mpz_t(), x.get_den().get_mpz_t(), n.get_mpz_t()) == 0) {
        throw Error(ErrorCode::ParseError,
                    "denominator of " + x.get_str() + " is not invertible mod " + n.get_str());
      }
      mpz_class r = (num * den_inv) % n;
      return Scalar(r);
    }
  }
  return x;
}

bool Ring::is_unit(const Scalar& a) const {
  const Scalar v = normalize(a);
  switch (kind_) {
    case Kind::integer: return v == 1 || v == -1;
    case Kind::rational: return v != 0;
    case Kind::modular: {
      mpz_class g;
      mpz_class n(modulus_);
      mpz_gcd(g.get_mpz_t(), v.get_num().get_mpz_t(), n.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Scalar Ring::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw Error(ErrorCode::UnsupportedRing, render(a) + " is not a unit in " + name());
  return normalize(Scalar(1) / normalize(a));
}

std::string Ring::render(const Scalar& a) const { return normalize(a).get_str(); }

Scalar Ring::parse(std::string_view text) const {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  const std::string num = trim(std::string_view(t).substr(0, slash));
  const std::string den = slash == std::string::npos ? "1" : trim(std::string_view(t).substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::ParseError, "bad coefficient '" + t + "'");
  }
  mpz_class d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + t + "'");
  mpz_class nn(num[0] == '+' ? num.substr(1) : num);
  Scalar v(nn, d);
  v.canonicalize();
  return normalize(v);
}

}  // namespace verl

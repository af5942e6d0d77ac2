#include "toricjet/arith.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace toricjet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::NotPrimitivable: return "not_primitivable";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::OutsideCone: return "outside_cone";
    case ErrorKind::NotTransverse: return "not_transverse";
    case ErrorKind::NotFullDimensional: return "not_full_dimensional";
    case ErrorKind::NotAFace: return "not_a_face";
    case ErrorKind::NotAVertex: return "not_a_vertex";
    case ErrorKind::NotAWall: return "not_a_wall";
    case ErrorKind::NotComplete: return "not_complete";
    case ErrorKind::NotAmple: return "not_ample";
    case ErrorKind::NotCartier: return "not_cartier";
    case ErrorKind::Incompatible: return "incompatible";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Input: return "input";
  }
  return "unknown";
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Input, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer p(n, 10), q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::Input, "zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

void require_same_dim(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.size(), b.size());
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const LatticeVector& b) {
  require_same_dim(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.size(), b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.size(), b.size());
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a.size(), b.size());
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector operator*(const Integer& c, const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.size(), b.size());
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_dim(a.size(), b.size());
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector operator*(const Rational& c, const RationalVector& a) {
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

LatticeVector zero_lattice(std::size_t d) { return LatticeVector(d, Integer(0)); }

LatticeVector unit_lattice(std::size_t d, std::size_t i) {
  LatticeVector e(d, Integer(0));
  e.at(i) = 1;
  return e;
}

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

bool is_integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

LatticeVector to_lattice(const RationalVector& v) {
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) throw Error(ErrorKind::InvalidArgument, "vector is not integral: " + to_string(v));
    r[i] = v[i].get_num();
  }
  return r;
}

LatticeVector primitive_direction(const RationalVector& v) {
  if (is_zero(v)) throw Error(ErrorKind::NotPrimitivable, "not primitive-able: zero vector");
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  LatticeVector z(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    z[i] = v[i].get_num() * (den / v[i].get_den());
    g = gcd(g, z[i]);
  }
  for (auto& x : z) x /= g;
  return z;
}

LatticeVector lv(std::initializer_list<long> coords) {
  LatticeVector r;
  r.reserve(coords.size());
  for (long c : coords) r.emplace_back(c);
  return r;
}

RationalVector rv(std::initializer_list<Rational> coords) { return RationalVector(coords); }

std::string to_string(const LatticeVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

bool LatticeLess::operator()(const LatticeVector& a, const LatticeVector& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t LatticeHash::operator()(const LatticeVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v) {
    std::size_t xh = std::hash<long>{}(mpz_get_si(x.get_mpz_t())) ^ mpz_size(x.get_mpz_t());
    h ^= xh + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace toricjet

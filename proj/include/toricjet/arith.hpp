#pragma once

// Exact integer/rational scalars and vectors shared by every module.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toricjet {

using Integer = mpz_class;
using Rational = mpq_class;

/// Point of a lattice Z^d (elements of N or M).
using LatticeVector = std::vector<Integer>;
/// Point of Q^d (elements of N_Q or M_Q).
using RationalVector = std::vector<Rational>;

enum class ErrorKind {
  InvalidArgument,
  NotPrimitivable,
  DimensionMismatch,
  OutsideCone,
  NotTransverse,
  NotFullDimensional,
  NotAFace,
  NotAVertex,
  NotAWall,
  NotComplete,
  NotAmple,
  NotCartier,
  Incompatible,
  Precondition,
  Input,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// --- scalar helpers -------------------------------------------------------

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline int sign(const Integer& a) { return sgn(a); }
inline int sign(const Rational& a) { return sgn(a); }

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
/// Accepts "p", "-p", "p/q"; rejects decimals and zero denominators.
Rational parse_rational(std::string_view text);

// --- vector helpers -------------------------------------------------------

void require_same_dim(std::size_t a, std::size_t b);

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator*(const Integer& c, const LatticeVector& a);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& c, const RationalVector& a);

LatticeVector zero_lattice(std::size_t d);
LatticeVector unit_lattice(std::size_t d, std::size_t i);
bool is_zero(const LatticeVector& v);
bool is_zero(const RationalVector& v);

RationalVector to_rational(const LatticeVector& v);
bool is_integral(const RationalVector& v);
/// Requires is_integral(v).
LatticeVector to_lattice(const RationalVector& v);
/// Smallest positive integer multiple of v that is integral and primitive;
/// only the direction of v is kept.
LatticeVector primitive_direction(const RationalVector& v);

/// Convenience constructor, mostly for tests: lv({1, -2, 3}).
LatticeVector lv(std::initializer_list<long> coords);
RationalVector rv(std::initializer_list<Rational> coords);

std::string to_string(const LatticeVector& v);
std::string to_string(const RationalVector& v);

/// Lexicographic order so vectors can key ordered containers.
struct LatticeLess {
  bool operator()(const LatticeVector& a, const LatticeVector& b) const;
};

struct LatticeHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

}  // namespace toricjet

#pragma once

// Exact integer and rational linear algebra over Z^d and Q^d.

#include <optional>
#include <span>
#include <vector>

#include "toricjet/arith.hpp"

namespace toricjet {

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

  static IntegerMatrix identity(std::size_t n);
  /// Rows must share one length; `cols` disambiguates an empty row list.
  static IntegerMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  std::vector<LatticeVector> row_vectors() const;
  IntegerMatrix transposed() const;
  LatticeVector apply(const LatticeVector& v) const;
  RationalVector apply(const RationalVector& v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// v divided by the gcd of its coordinates. Throws NotPrimitivable on zero.
LatticeVector primitive(const LatticeVector& v);

/// The rational l >= 0 with u1 - u2 = l * w for a primitive lattice vector w.
Rational lattice_length(const RationalVector& u1, const RationalVector& u2);

struct HermiteForm {
  IntegerMatrix h;  ///< row Hermite normal form, zero rows last
  IntegerMatrix u;  ///< unimodular, h = u * a
  std::size_t rank = 0;
};

/// Row-style HNF: pivots positive, entries above a pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntegerMatrix& a);

/// Nonzero invariant factors d_1 | d_2 | ... of a, all positive.
std::vector<Integer> smith_invariant_factors(const IntegerMatrix& a);

/// Index of the lattice spanned by gens inside its saturation; 1 on empty input.
Integer multiplicity(std::span<const LatticeVector> gens);

/// mult(tau, v0) / mult(tau) for a codimension-one tau and v0 outside span(tau).
Integer s0(std::span<const LatticeVector> tau_gens, const LatticeVector& v0);

/// Integer matrix of the projection Z^d -> Z^(d - rank) whose kernel is the
/// saturation of span(sub_gens). Rows are in Hermite normal form.
IntegerMatrix quotient_lattice_map(std::span<const LatticeVector> sub_gens, std::size_t ambient_dim);

/// Saturated basis of {x in Z^d : <g, x> = 0 for all g in gens}, HNF-canonical.
std::vector<LatticeVector> integer_kernel(std::span<const LatticeVector> gens, std::size_t ambient_dim);

std::size_t rank(std::span<const LatticeVector> vectors);
std::size_t rank(std::span<const RationalVector> vectors);

/// |det| of a square integer matrix given by rows.
Integer abs_determinant(std::span<const LatticeVector> rows);

/// Solves sum_j x_j * cols[j] = target. Returns nullopt if inconsistent; when
/// the columns are dependent one particular solution is returned.
std::optional<RationalVector> solve_combination(std::span<const RationalVector> cols, const RationalVector& target);

/// Solves <x, rows[i]> = rhs[i] for x in Q^d; nullopt if inconsistent.
std::optional<RationalVector> solve_dual(std::span<const LatticeVector> rows, std::span<const Rational> rhs,
                                         std::size_t d);

/// Inverse of a square rational matrix (row-major rows); nullopt if singular.
std::optional<std::vector<RationalVector>> inverse(std::span<const RationalVector> rows);

}  // namespace toricjet

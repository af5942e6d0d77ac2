#include "toricjet/lattice.hpp"

#include <algorithm>
#include <utility>

namespace toricjet {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_dim(rows[i].size(), cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LatticeVector IntegerMatrix::row(std::size_t i) const {
  return LatticeVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<LatticeVector> IntegerMatrix::row_vectors() const {
  std::vector<LatticeVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LatticeVector IntegerMatrix::apply(const LatticeVector& v) const {
  require_same_dim(v.size(), cols_);
  LatticeVector r(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

RationalVector IntegerMatrix::apply(const RationalVector& v) const {
  require_same_dim(v.size(), cols_);
  RationalVector r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  require_same_dim(a.cols_, b.rows_);
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) throw Error(ErrorKind::NotPrimitivable, "not primitive-able: zero vector");
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

Rational lattice_length(const RationalVector& u1, const RationalVector& u2) {
  RationalVector diff = u1 - u2;
  if (is_zero(diff)) return Rational(0);
  Integer den = 1;
  for (const auto& x : diff) den = lcm(den, x.get_den());
  Integer g = 0;
  for (const auto& x : diff) g = gcd(g, x.get_num() * (den / x.get_den()));
  Rational l(g, den);
  l.canonicalize();
  return l;
}

namespace {

// Combines rows r (pivot) and i so that entry (i, col) becomes zero, with a
// unimodular 2x2 transformation applied to both h and u.
void gcd_combine(IntegerMatrix& h, IntegerMatrix& u, std::size_t r, std::size_t i, std::size_t col) {
  Integer a = h(r, col), b = h(i, col);
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer ag = a / g, bg = b / g;
  auto mix = [&](IntegerMatrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer x = m(r, j), y = m(i, j);
      m(r, j) = s * x + t * y;
      m(i, j) = -bg * x + ag * y;
    }
  };
  mix(h);
  mix(u);
}

}  // namespace

HermiteForm hermite_normal_form(const IntegerMatrix& a) {
  HermiteForm f{a, IntegerMatrix::identity(a.rows()), 0};
  IntegerMatrix& h = f.h;
  IntegerMatrix& u = f.u;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (std::size_t i = row + 1; i < h.rows(); ++i) {
      if (h(i, col) != 0) gcd_combine(h, u, row, i, col);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    const Integer pivot = h(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), pivot.get_mpz_t());
      if (q != 0) {
        h.add_row_multiple(i, row, -q);
        u.add_row_multiple(i, row, -q);
      }
    }
    ++row;
  }
  f.rank = row;
  return f;
}

std::vector<Integer> smith_invariant_factors(const IntegerMatrix& input) {
  IntegerMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pr == rows || abs(m(i, j)) < abs(m(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    m.swap_rows(t, pr);
    if (pc != t)
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m(i, t) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
      m.add_row_multiple(i, t, -q);
      if (m(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m(t, j) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
      for (std::size_t i = 0; i < rows; ++i) m(i, j) -= q * m(i, t);
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pick a new pivot

    // Divisibility: fold any non-multiple of the pivot back into row t.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m(i, j) % m(t, t) != 0) {
          m.add_row_multiple(t, i, Integer(1));
          divisible = false;
          break;
        }
    if (!divisible) continue;
    diag.push_back(abs(m(t, t)));
    ++t;
  }
  return diag;
}

Integer multiplicity(std::span<const LatticeVector> gens) {
  if (gens.empty()) return 1;
  IntegerMatrix m = IntegerMatrix::from_rows(gens, gens.front().size());
  Integer prod = 1;
  for (const auto& d : smith_invariant_factors(m)) prod *= d;
  return prod;
}

std::size_t rank(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return 0;
  return hermite_normal_form(IntegerMatrix::from_rows(vectors, vectors.front().size())).rank;
}

std::size_t rank(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return 0;
  std::vector<LatticeVector> scaled;
  scaled.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (is_zero(v)) continue;
    scaled.push_back(primitive_direction(v));
  }
  return rank(std::span<const LatticeVector>(scaled));
}

Integer s0(std::span<const LatticeVector> tau_gens, const LatticeVector& v0) {
  std::vector<LatticeVector> with(tau_gens.begin(), tau_gens.end());
  with.push_back(v0);
  if (rank(std::span<const LatticeVector>(with)) != rank(tau_gens) + 1) {
    throw Error(ErrorKind::NotTransverse, "not transverse: v0 lies in span(tau)");
  }
  return multiplicity(with) / multiplicity(tau_gens);
}

std::vector<LatticeVector> integer_kernel(std::span<const LatticeVector> gens, std::size_t d) {
  // Left kernel of the transpose: rows of U matching zero rows of HNF(G^T).
  IntegerMatrix gt(d, gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    require_same_dim(gens[j].size(), d);
    for (std::size_t i = 0; i < d; ++i) gt(i, j) = gens[j][i];
  }
  HermiteForm f = hermite_normal_form(gt);
  std::vector<LatticeVector> basis;
  for (std::size_t i = f.rank; i < d; ++i) basis.push_back(f.u.row(i));
  if (basis.empty()) return basis;
  HermiteForm canon = hermite_normal_form(IntegerMatrix::from_rows(basis, d));
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < canon.rank; ++i) out.push_back(canon.h.row(i));
  return out;
}

IntegerMatrix quotient_lattice_map(std::span<const LatticeVector> sub_gens, std::size_t ambient_dim) {
  // The annihilator of span(sub) is saturated, so its basis rows are part of a
  // unimodular matrix and the induced map onto Z^(d-r) is surjective.
  std::vector<LatticeVector> ann = integer_kernel(sub_gens, ambient_dim);
  return IntegerMatrix::from_rows(ann, ambient_dim);
}

Integer abs_determinant(std::span<const LatticeVector> rows) {
  if (rows.empty()) return 1;
  const std::size_t n = rows.size();
  HermiteForm f = hermite_normal_form(IntegerMatrix::from_rows(rows, rows.front().size()));
  require_same_dim(n, f.h.cols());
  if (f.rank < n) return 0;
  Integer det = 1;
  for (std::size_t i = 0; i < n; ++i) det *= f.h(i, i);
  return abs(det);
}

namespace {

// Gaussian elimination on an augmented rational system. Returns one solution
// (free variables set to zero) or nullopt if inconsistent.
std::optional<RationalVector> solve_augmented(std::vector<RationalVector> m, std::size_t nvars) {
  const std::size_t nrows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && m[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j <= nvars; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= nvars; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < nrows; ++i)
    if (m[i][nvars] != 0) return std::nullopt;
  RationalVector x(nvars, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][nvars];
  return x;
}

}  // namespace

std::optional<RationalVector> solve_combination(std::span<const RationalVector> cols, const RationalVector& target) {
  const std::size_t d = target.size();
  std::vector<RationalVector> m(d, RationalVector(cols.size() + 1));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require_same_dim(cols[j].size(), d);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = cols[j][i];
  }
  for (std::size_t i = 0; i < d; ++i) m[i][cols.size()] = target[i];
  return solve_augmented(std::move(m), cols.size());
}

std::optional<RationalVector> solve_dual(std::span<const LatticeVector> rows, std::span<const Rational> rhs,
                                         std::size_t d) {
  require_same_dim(rows.size(), rhs.size());
  std::vector<RationalVector> m(rows.size(), RationalVector(d + 1));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_dim(rows[i].size(), d);
    for (std::size_t j = 0; j < d; ++j) m[i][j] = rows[i][j];
    m[i][d] = rhs[i];
  }
  return solve_augmented(std::move(m), d);
}

std::optional<std::vector<RationalVector>> inverse(std::span<const RationalVector> rows) {
  const std::size_t n = rows.size();
  std::vector<RationalVector> m(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    require_same_dim(rows[i].size(), n);
    for (std::size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<RationalVector> out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

}  // namespace toricjet

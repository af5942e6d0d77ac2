#include "toricjet/examples.hpp"

#include "toricjet/lattice.hpp"

namespace toricjet {

LatticeVector example_3_1_apex(long n, long r) {
  LatticeVector a(n, Integer(1));
  a[n - 1] = r;
  return a;
}

Example31 example_3_1(long n, long r, long k) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "example31 needs n >= 2");
  if (r < 1 || r <= n - 2) throw Error(ErrorKind::InvalidArgument, "example31 needs r >= 1 and r > n - 2");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "example31 needs k >= 1");
  std::vector<LatticeVector> pts{zero_lattice(n)};
  for (long i = 0; i + 1 < n; ++i) pts.push_back(unit_lattice(n, i));
  pts.push_back(example_3_1_apex(n, r));
  Example31 ex;
  ex.polytope = Polytope::from_lattice_points(pts);
  ex.d = TCartierDivisor::from_polytope(ex.polytope);
  ex.g = ex.d.scaled(k + n - 3);
  ex.vertex0_cone = ex.d.cone_of_vertex(ex.polytope.vertex_index(RationalVector(n, Rational(0))));
  return ex;
}

WeightedProjective weighted_projective(const std::vector<Integer>& weights) {
  const std::size_t m = weights.size();
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "weighted projective space needs n >= 2 (three weights)");
  for (const auto& a : weights)
    if (a < 1) throw Error(ErrorKind::InvalidArgument, "weights must be positive");
  for (std::size_t skip = 0; skip < m; ++skip) {
    Integer g = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (i != skip) g = gcd(g, weights[i]);
    if (g != 1) {
      std::string names;
      for (std::size_t i = 0; i < m; ++i)
        if (i != skip) names += (names.empty() ? "" : ",") + to_string(weights[i]);
      throw Error(ErrorKind::InvalidArgument,
                  "weights are not reduced: gcd(" + names + ") = " + to_string(g));
    }
  }
  WeightedProjective w;
  w.weights = weights;
  w.l = 1;
  w.h = 0;
  for (std::size_t i = 0; i < m; ++i) {
    w.l = lcm(w.l, weights[i]);
    for (std::size_t j = i + 1; j < m; ++j) w.h = std::max(w.h, lcm(weights[i], weights[j]));
  }
  w.basis = integer_kernel(std::vector<LatticeVector>{weights}, m);
  std::vector<RationalVector> cols;
  for (const auto& b : w.basis) cols.push_back(to_rational(b));
  LatticeVector origin = zero_lattice(m);
  origin[0] = w.l / weights[0];
  std::vector<LatticeVector> pts;
  for (std::size_t i = 0; i < m; ++i) {
    LatticeVector v = zero_lattice(m);
    v[i] = w.l / weights[i];
    auto c = solve_combination(cols, to_rational(v - origin));
    if (!c || !is_integral(*c)) throw Error(ErrorKind::Precondition, "vertex outside the hyperplane lattice");
    pts.push_back(to_lattice(*c));
  }
  w.polytope = Polytope::from_lattice_points(pts);
  return w;
}

Polytope simplex(std::size_t dim, long m) {
  if (dim < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "simplex needs dim >= 1 and m >= 1");
  std::vector<LatticeVector> pts{zero_lattice(dim)};
  for (std::size_t i = 0; i < dim; ++i) pts.push_back(Integer(m) * unit_lattice(dim, i));
  return Polytope::from_lattice_points(pts);
}

Polytope cube(const std::vector<long>& sides) {
  if (sides.empty()) throw Error(ErrorKind::InvalidArgument, "cube needs at least one side");
  for (long s : sides)
    if (s < 1) throw Error(ErrorKind::InvalidArgument, "cube sides must be positive");
  const std::size_t d = sides.size();
  std::vector<LatticeVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticeVector p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = (mask >> i) & 1 ? sides[i] : 0;
    pts.push_back(p);
  }
  return Polytope::from_lattice_points(pts);
}

Polytope hirzebruch(long a, long b, long c) {
  if (a < 0 || b < 1 || c < 1) throw Error(ErrorKind::InvalidArgument, "hirzebruch needs a >= 0, b >= 1, c >= 1");
  return Polytope::from_lattice_points(
      std::vector<LatticeVector>{lv({0, 0}), lv({b + a * c, 0}), lv({0, c}), lv({b, c})});
}

}  // namespace toricjet

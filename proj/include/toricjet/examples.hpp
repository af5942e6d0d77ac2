#pragma once

// Generators for the sharpness family, weighted projective spaces and a few
// smooth baselines.

#include <vector>

#include "toricjet/divisor.hpp"

namespace toricjet {

struct Example31 {
  Polytope polytope;  ///< conv(0, e_1, ..., e_{n-1}, a), a = e_1 + ... + e_{n-1} + r e_n
  TCartierDivisor d;
  TCartierDivisor g;  ///< (k + n - 3) D
  int vertex0_cone = -1;
};

/// Requires n >= 2, r >= 1, r > n - 2, k >= 1.
Example31 example_3_1(long n, long r, long k);

/// The vertex a = e_1 + ... + e_{n-1} + r e_n.
LatticeVector example_3_1_apex(long n, long r);

struct WeightedProjective {
  std::vector<Integer> weights;
  Integer l;  ///< lcm of the weights
  Integer h;  ///< max lcm over pairs
  /// Basis of {x in Z^{n+1} : a·x = 0} in which the polytope is expressed,
  /// with origin (l/a_0, 0, ..., 0).
  std::vector<LatticeVector> basis;
  Polytope polytope;  ///< vertex i is the image of (l/a_i) e_i
};

/// Weights a_0..a_n with n >= 2 and every n-subset coprime.
WeightedProjective weighted_projective(const std::vector<Integer>& weights);

/// m times the standard simplex in dimension dim.
Polytope simplex(std::size_t dim, long m);
/// Product of segments [0, sides_i].
Polytope cube(const std::vector<long>& sides);
/// conv(0, (b + a c) e1, c e2, b e1 + c e2): an ample divisor on F_a.
Polytope hirzebruch(long a, long b, long c);

}  // namespace toricjet

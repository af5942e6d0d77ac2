#pragma once

// T-Cartier divisors on toric varieties given by fans: local data u_σ,
// support functions (min convention), intersection numbers with invariant
// curves, edge lengths, k-concavity and Seshadri constants at fixed points.

#include <optional>
#include <vector>

#include "toricjet/arith.hpp"
#include "toricjet/polyhedral.hpp"

namespace toricjet {

class TCartierDivisor {
 public:
  TCartierDivisor() = default;

  /// Divisor of a full-dimensional lattice polytope on its normal fan;
  /// maximal cone i corresponds to vertex i.
  static TCartierDivisor from_polytope(const Polytope& p);
  /// Local data u_σ per maximal cone; throws Incompatible when two cones
  /// disagree on a shared ray.
  static TCartierDivisor from_local_data(Fan fan, std::vector<LatticeVector> local_data);
  /// From ray coefficients a_ρ (D = sum a_ρ D_ρ); throws NotCartier.
  static TCartierDivisor from_coefficients(Fan fan, const std::vector<Rational>& coefficients);

  const Fan& fan() const { return fan_; }
  const std::vector<LatticeVector>& local_data() const { return u_; }
  const LatticeVector& u(std::size_t cone) const { return u_.at(cone); }
  /// a_ρ = -ψ(v_ρ).
  std::vector<Integer> coefficients() const;

  bool is_ample() const { return ample_; }
  /// P_D; only for ample divisors.
  const Polytope& polytope() const;
  /// Index into polytope().vertices() of u_σ.
  int vertex_of_cone(std::size_t cone) const;
  /// Maximal cone whose local datum is the given vertex.
  int cone_of_vertex(int vertex) const;

  TCartierDivisor scaled(const Integer& m) const;
  friend TCartierDivisor operator+(const TCartierDivisor& a, const TCartierDivisor& b);
  friend bool operator==(const TCartierDivisor& a, const TCartierDivisor& b) {
    return a.fan_ == b.fan_ && a.u_ == b.u_;
  }

 private:
  Fan fan_;
  std::vector<LatticeVector> u_;
  bool ample_ = false;
  Polytope polytope_;
  std::vector<int> vertex_of_cone_;

  void finish();
};

/// Q-divisor sum a_ρ D_ρ given by ray coefficients.
struct TQDivisor {
  Fan fan;
  std::vector<Rational> coefficients;
};

/// ψ_D(v) = <u_σ, v> for a maximal cone σ containing v.
Rational psi(const TCartierDivisor& d, const RationalVector& v);

/// D·V(τ) for the wall with index `wall` in d.fan().walls().
Rational intersection_number(const TCartierDivisor& d, std::size_t wall);
/// Same, evaluated with a chosen ray v0 of cone2 outside τ.
Rational intersection_number(const TCartierDivisor& d, std::size_t wall, int v0_ray);

/// D·V(τ) from rational local data (Q-Cartier divisors).
Rational intersection_number(const Fan& fan, std::span<const RationalVector> local_data, std::size_t wall);

struct EdgeRow {
  int vertex_a = -1;
  int vertex_b = -1;
  Rational length;
  int wall = -1;
  Rational intersection;
};

struct EdgeReport {
  std::vector<EdgeRow> edges;
  /// Every edge length equals the intersection number of its wall.
  bool consistent = true;
};

EdgeReport edge_lengths(const TCartierDivisor& d);

/// Minimum lattice length of the edges of P_D at u_σ.
Rational L_sigma(const TCartierDivisor& d, std::size_t cone);

/// Largest k with ψ_D k-concave; negative when ψ_D is not concave.
Rational max_concavity(const TCartierDivisor& d);
bool is_k_concave(const TCartierDivisor& d, const Rational& k);

/// s(P; v): minimum lattice length of the edges through vertex v.
Integer s_at_vertex(const Polytope& p, int vertex);
Integer seshadri_invariant_point(const TCartierDivisor& d, std::size_t cone);
Integer seshadri_global(const TCartierDivisor& d);

TQDivisor canonical_divisor(const Fan& fan);
TQDivisor to_q_divisor(const TCartierDivisor& d);

/// u'_σ with <u'_σ, v_ρ> = -a_ρ on the rays of each maximal cone, or nullopt
/// when some cone's system is inconsistent (not Q-Cartier).
std::optional<std::vector<RationalVector>> q_cartier_local_data(const TQDivisor& d);
bool is_cartier(const TQDivisor& d);

/// Whether s(P'_ξ; v'_ξ) <= s(P''_τ; v''_τ) for faces ξ ⊂ τ with dim τ = dim ξ + 1.
bool projection_monotonicity_check(const Polytope& p, std::span<const int> xi, std::span<const int> tau);

}  // namespace toricjet

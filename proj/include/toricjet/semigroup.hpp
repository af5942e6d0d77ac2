#pragma once

// The affine semigroup Q ∩ M of a pointed full-dimensional cone Q: weight
// functions, lattice points of the half-open fundamental parallelepiped,
// ideal-power orders k_u and the constants Γ_Q, Γ_X.

#include <optional>
#include <unordered_map>
#include <vector>

#include "toricjet/arith.hpp"
#include "toricjet/polyhedral.hpp"

namespace toricjet {

/// A basis of Q_R drawn from the rays: indices, det > 0, and the integer
/// matrix adj = det * inverse, so coordinates are (adj u) / det.
struct RayBasis {
  std::vector<int> rays;
  std::vector<LatticeVector> adj;
  Integer det;
  LatticeVector weight;  ///< column sums of adj
};

class DualConeData {
 public:
  /// Q must be pointed and full-dimensional.
  explicit DualConeData(Cone q);
  /// The dual of a full-dimensional cone sigma.
  static DualConeData dual_of(const Cone& sigma);

  const Cone& cone() const { return q_; }
  std::size_t dim() const { return q_.ambient_dim(); }
  /// Primitive ray generators w_1..w_m.
  const std::vector<LatticeVector>& rays() const { return q_.rays(); }
  /// Sum of the primitive inner facet normals; positive on Q \ {0}.
  const LatticeVector& grading() const { return grading_; }
  bool is_simplicial() const { return q_.is_simplicial(); }

  /// Coordinates of u in the ray basis, simplicial cones only.
  RationalVector ray_coordinates(const LatticeVector& u) const;
  /// Every linearly independent d-subset of the rays.
  const std::vector<RayBasis>& bases() const { return bases_; }

 private:
  Cone q_;
  LatticeVector grading_;
  std::vector<RayBasis> bases_;
};

/// max sum a_i subject to sum a_i w_i = u, a >= 0. Throws OutsideCone.
Rational w_max(const DualConeData& q, const LatticeVector& u);
/// min sum a_i under the same constraints. Throws OutsideCone.
Rational w_min(const DualConeData& q, const LatticeVector& u);

/// The same optima from the linear program itself; reference formulation.
Rational w_max_lp(const DualConeData& q, const LatticeVector& u);
Rational w_min_lp(const DualConeData& q, const LatticeVector& u);

/// Whether u is a nonnegative combination of the rays with every coefficient < 1.
bool in_half_open_box(const DualConeData& q, const LatticeVector& u);

/// S_Q ∩ M, sorted, always starting with 0.
std::vector<LatticeVector> box_points(const DualConeData& q);

/// Rays together with the nonzero box points; generates the maximal ideal.
std::vector<LatticeVector> generators(const DualConeData& q);

/// Memo for k_u, confined to one cone.
class KuMemo {
 public:
  KuMemo() = default;
  std::size_t size() const { return values_.size() + fast_values_.size(); }
  /// Reuses an already computed box_points(q) for the generator set.
  void prepare(const DualConeData& q, const std::vector<LatticeVector>& box);

 private:
  friend long k_u(const DualConeData&, const LatticeVector&, KuMemo&);
  struct VecHash {
    std::size_t operator()(const std::vector<long>& v) const noexcept;
  };
  void prepare(const DualConeData& q);
  void build(const DualConeData& q, std::vector<LatticeVector> gens);

  bool prepared_ = false;
  bool fast_ = false;
  std::vector<LatticeVector> gens_;
  std::vector<std::vector<long>> gens_y_;
  std::unordered_map<LatticeVector, long, LatticeHash> values_;
  std::unordered_map<std::vector<long>, long, VecHash> fast_values_;
};

/// Largest k with chi^u in m_Q^k. Throws OutsideCone unless u ∈ Q ∩ M.
long k_u(const DualConeData& q, const LatticeVector& u, KuMemo& memo);

struct GammaResult {
  Rational gamma;
  LatticeVector argmax;  ///< a box point attaining the maximum
  std::size_t box_size = 0;
};

GammaResult gamma_q_detailed(const DualConeData& q);
GammaResult gamma_q_detailed(const DualConeData& q, KuMemo& memo);
Rational gamma_q(const DualConeData& q);

/// Max of Γ over the duals of the maximal cones; errors on a lower-dimensional cone.
Rational gamma_x(const Fan& fan);

/// {e ∈ Q ∩ M : k_e < k}, sorted. Requires k >= 1.
std::vector<LatticeVector> quotient_basis_exponents(const DualConeData& q, long k, KuMemo& memo);
std::vector<LatticeVector> quotient_basis_exponents(const DualConeData& q, long k);
/// Same, with Γ_Q already known.
std::vector<LatticeVector> quotient_basis_exponents(const DualConeData& q, long k, KuMemo& memo,
                                                    const Rational& gamma);

}  // namespace toricjet

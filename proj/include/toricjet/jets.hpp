#pragma once

// Jet ampleness: the per-cone certificate L_σ >= k + Γ_{σ∨}, the exact
// evaluation-map oracle at configurations of T-fixed points, and the
// Fujita-type checker with its supporting weight inequalities.

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "toricjet/divisor.hpp"
#include "toricjet/semigroup.hpp"

namespace toricjet {

/// Per-cone semigroup data of a fan, computed lazily and shared between
/// certificates and oracle runs on divisors over that fan.
class ConeCache {
 public:
  explicit ConeCache(const Fan& fan);

  const Fan& fan() const { return fan_; }
  /// The dual of maximal cone i.
  const DualConeData& dual(std::size_t cone);
  const Rational& gamma(std::size_t cone);
  Rational gamma_x();
  /// quotient_basis_exponents(σ_i∨, k).
  const std::vector<LatticeVector>& quotient_basis(std::size_t cone, long k);

 private:
  struct Entry {
    std::optional<DualConeData> dual;
    std::optional<Rational> gamma;
    KuMemo memo;
    std::map<long, std::vector<LatticeVector>> bases;
  };
  Fan fan_;
  std::vector<std::unique_ptr<Entry>> entries_;
  Entry& entry(std::size_t cone);
};

struct CertificateRow {
  int cone = -1;
  Rational L;
  Rational gamma;
  Rational slack;  ///< L - k - gamma
};

struct JetCertificate {
  long k = 0;
  std::vector<CertificateRow> rows;
  bool certified = false;
};

/// Sufficient test for k-jet ampleness; a negative answer proves nothing.
JetCertificate certify(const TCartierDivisor& d, long k);
JetCertificate certify(const TCartierDivisor& d, long k, ConeCache& cache);

struct MaxK {
  std::vector<Integer> per_cone;  ///< floor(L_σ - Γ_{σ∨}), clamped at 0
  Integer value;                  ///< min of per_cone
  Integer global;                 ///< floor(min edge length - Γ_X), clamped at 0
};

MaxK max_certified_k(const TCartierDivisor& d);
MaxK max_certified_k(const TCartierDivisor& d, ConeCache& cache);

struct ConfigPart {
  int cone = -1;
  long mult = 1;
  friend bool operator==(const ConfigPart&, const ConfigPart&) = default;
};
/// Distinct maximal cones with multiplicities k_i >= 1.
using Configuration = std::vector<ConfigPart>;

enum class WitnessKind { None, Unreachable, Collision };

struct OracleReport {
  Configuration config;
  bool surjective = true;
  WitnessKind witness = WitnessKind::None;
  /// Unreachable: target (part_a, exponent_a) with u + e outside P_D.
  /// Collision: targets a and b share the section `section`.
  int part_a = -1;
  LatticeVector exponent_a;
  int part_b = -1;
  LatticeVector exponent_b;
  LatticeVector section;
  /// Every (part, exponent) whose section lies outside P_D.
  std::vector<std::pair<int, LatticeVector>> unreachable;
};

/// Exact surjectivity of H^0(D) onto the jets at the configuration. D must be nef.
OracleReport oracle_configuration(const TCartierDivisor& d, const Configuration& cfg);
OracleReport oracle_configuration(const TCartierDivisor& d, const Configuration& cfg, ConeCache& cache);

struct JetAmpleResult {
  bool ample = true;
  std::optional<OracleReport> failure;  ///< first failing configuration
  std::size_t configurations = 0;       ///< number checked
};

/// All configurations with at most max_r points and total multiplicity k+1.
JetAmpleResult oracle_jet_ample(const TCartierDivisor& d, long k, long max_r);
JetAmpleResult oracle_jet_ample(const TCartierDivisor& d, long k, long max_r, ConeCache& cache);

/// Complete fan with n+1 rays whose maximal cones are all smooth.
bool is_projective_space(const Fan& fan);

struct FujitaVerdict {
  bool not_projective_space = false;    ///< H1
  bool dprime_in_range = false;         ///< H2: -1 <= a_ρ <= 0
  bool cartier = false;                 ///< H3: D, D' Q-Cartier, D + D' Cartier
  bool intersections = false;           ///< H4: D·C >= n + k on every wall
  std::vector<Rational> wall_intersections;  ///< D·V(τ) per wall, when Q-Cartier
  bool hypotheses_hold = false;
  std::optional<TCartierDivisor> sum;   ///< D + D' when Cartier
  std::optional<JetCertificate> certificate;
  std::optional<bool> oracle;
  std::string note;
};

/// Checks the hypotheses and cross-validates the conclusion when they hold.
FujitaVerdict fujita_check(const TQDivisor& d, const TQDivisor& dprime, long k, bool run_oracle = true);

/// W_min over a rational point of Q, by homogeneity.
Rational w_min_rational(const DualConeData& q, const RationalVector& u);
Rational w_max_rational(const DualConeData& q, const RationalVector& u);

/// m_σ >= t_σ - W_min(u'_σ) - 1 at maximal cone σ.
bool payne_bound_check(const TQDivisor& d, const TQDivisor& dprime, std::size_t cone);

/// W_max(u') <= W_max(u) for each interior lattice point u of Q.
bool interior_weight_check(const DualConeData& q, const RationalVector& uprime,
                           std::span<const LatticeVector> samples);

}  // namespace toricjet

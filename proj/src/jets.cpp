#include "toricjet/jets.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "toricjet/lattice.hpp"

namespace toricjet {

// --- ConeCache -------------------------------------------------------------

ConeCache::ConeCache(const Fan& fan) : fan_(fan) {
  entries_.resize(fan_.num_cones());
}

ConeCache::Entry& ConeCache::entry(std::size_t cone) {
  if (cone >= entries_.size()) throw Error(ErrorKind::InvalidArgument, "no such maximal cone");
  if (!entries_[cone]) entries_[cone] = std::make_unique<Entry>();
  return *entries_[cone];
}

const DualConeData& ConeCache::dual(std::size_t cone) {
  Entry& e = entry(cone);
  if (!e.dual) e.dual.emplace(DualConeData::dual_of(fan_.cone(cone)));
  return *e.dual;
}

const Rational& ConeCache::gamma(std::size_t cone) {
  Entry& e = entry(cone);
  if (!e.gamma) e.gamma = gamma_q_detailed(dual(cone), e.memo).gamma;
  return *e.gamma;
}

Rational ConeCache::gamma_x() {
  Rational best = 0;
  for (std::size_t c = 0; c < fan_.num_cones(); ++c) best = std::max(best, gamma(c));
  return best;
}

const std::vector<LatticeVector>& ConeCache::quotient_basis(std::size_t cone, long k) {
  Entry& e = entry(cone);
  auto it = e.bases.find(k);
  if (it == e.bases.end()) {
    const Rational& g = gamma(cone);
    it = e.bases.emplace(k, quotient_basis_exponents(dual(cone), k, e.memo, g)).first;
  }
  return it->second;
}

// --- certificates ------------------------------------------------------------

namespace {

void require_same_fan(const TCartierDivisor& d, const ConeCache& cache) {
  if (!(d.fan() == cache.fan())) throw Error(ErrorKind::InvalidArgument, "cache belongs to a different fan");
}

Integer clamped_floor(const Rational& q) {
  Integer f = floor(q);
  return f < 0 ? Integer(0) : f;
}

}  // namespace

JetCertificate certify(const TCartierDivisor& d, long k) {
  ConeCache cache(d.fan());
  return certify(d, k, cache);
}

JetCertificate certify(const TCartierDivisor& d, long k, ConeCache& cache) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be nonnegative");
  if (!d.is_ample()) throw Error(ErrorKind::NotAmple, "divisor is not ample");
  require_same_fan(d, cache);
  JetCertificate cert;
  cert.k = k;
  cert.certified = true;
  for (std::size_t c = 0; c < d.fan().num_cones(); ++c) {
    CertificateRow row;
    row.cone = static_cast<int>(c);
    row.L = L_sigma(d, c);
    row.gamma = cache.gamma(c);
    row.slack = row.L - k - row.gamma;
    if (row.slack < 0) cert.certified = false;
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

MaxK max_certified_k(const TCartierDivisor& d) {
  ConeCache cache(d.fan());
  return max_certified_k(d, cache);
}

MaxK max_certified_k(const TCartierDivisor& d, ConeCache& cache) {
  if (!d.is_ample()) throw Error(ErrorKind::NotAmple, "divisor is not ample");
  require_same_fan(d, cache);
  MaxK out;
  Rational min_edge = -1;
  for (std::size_t c = 0; c < d.fan().num_cones(); ++c) {
    Rational l = L_sigma(d, c);
    if (min_edge < 0 || l < min_edge) min_edge = l;
    out.per_cone.push_back(clamped_floor(l - cache.gamma(c)));
  }
  out.value = *std::min_element(out.per_cone.begin(), out.per_cone.end());
  out.global = clamped_floor(min_edge - cache.gamma_x());
  return out;
}

// --- oracle ------------------------------------------------------------------

namespace {

// Sections of O(D): lattice points m with <m, v_ρ> >= -a_ρ on every ray.
struct SectionTest {
  std::vector<LatticeVector> rays;
  std::vector<Integer> bound;

  explicit SectionTest(const TCartierDivisor& d) : rays(d.fan().rays()) {
    for (const auto& a : d.coefficients()) bound.push_back(-a);
  }
  bool contains(const LatticeVector& m) const {
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (dot(m, rays[i]) < bound[i]) return false;
    return true;
  }
};

void require_nef(const TCartierDivisor& d) {
  if (!d.is_ample() && max_concavity(d) < 0) throw Error(ErrorKind::Precondition, "divisor is not nef");
}

void validate(const Configuration& cfg, std::size_t cones) {
  if (cfg.empty()) throw Error(ErrorKind::InvalidArgument, "empty configuration");
  std::vector<int> seen;
  for (const auto& p : cfg) {
    if (p.cone < 0 || static_cast<std::size_t>(p.cone) >= cones)
      throw Error(ErrorKind::InvalidArgument, "configuration names an unknown cone");
    if (p.mult < 1) throw Error(ErrorKind::InvalidArgument, "multiplicities must be at least 1");
    if (std::find(seen.begin(), seen.end(), p.cone) != seen.end())
      throw Error(ErrorKind::InvalidArgument, "configuration repeats a cone");
    seen.push_back(p.cone);
  }
}

OracleReport run_configuration(const TCartierDivisor& d, const Configuration& cfg, ConeCache& cache,
                               const SectionTest& sections) {
  OracleReport rep;
  rep.config = cfg;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const LatticeVector& u = d.u(cfg[i].cone);
    for (const auto& e : cache.quotient_basis(cfg[i].cone, cfg[i].mult))
      if (!sections.contains(u + e)) rep.unreachable.emplace_back(static_cast<int>(i), e);
  }
  if (!rep.unreachable.empty()) {
    rep.surjective = false;
    rep.witness = WitnessKind::Unreachable;
    rep.part_a = rep.unreachable.front().first;
    rep.exponent_a = rep.unreachable.front().second;
    rep.section = d.u(cfg[rep.part_a].cone) + rep.exponent_a;
    return rep;
  }
  std::unordered_map<LatticeVector, std::pair<int, LatticeVector>, LatticeHash> used;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    const LatticeVector& u = d.u(cfg[i].cone);
    for (const auto& e : cache.quotient_basis(cfg[i].cone, cfg[i].mult)) {
      auto [it, fresh] = used.emplace(u + e, std::make_pair(static_cast<int>(i), e));
      if (fresh) continue;
      rep.surjective = false;
      rep.witness = WitnessKind::Collision;
      rep.part_a = it->second.first;
      rep.exponent_a = it->second.second;
      rep.part_b = static_cast<int>(i);
      rep.exponent_b = e;
      rep.section = u + e;
      return rep;
    }
  }
  return rep;
}

// Compositions of total into r positive parts, lexicographic.
void compositions(long total, long r, std::vector<long>& cur, const std::function<bool(const std::vector<long>&)>& f,
                  bool& stop) {
  if (stop) return;
  if (r == 1) {
    cur.push_back(total);
    if (!f(cur)) stop = true;
    cur.pop_back();
    return;
  }
  for (long first = 1; first <= total - (r - 1) && !stop; ++first) {
    cur.push_back(first);
    compositions(total - first, r - 1, cur, f, stop);
    cur.pop_back();
  }
}

}  // namespace

OracleReport oracle_configuration(const TCartierDivisor& d, const Configuration& cfg) {
  ConeCache cache(d.fan());
  return oracle_configuration(d, cfg, cache);
}

OracleReport oracle_configuration(const TCartierDivisor& d, const Configuration& cfg, ConeCache& cache) {
  require_same_fan(d, cache);
  validate(cfg, d.fan().num_cones());
  require_nef(d);
  return run_configuration(d, cfg, cache, SectionTest(d));
}

JetAmpleResult oracle_jet_ample(const TCartierDivisor& d, long k, long max_r) {
  ConeCache cache(d.fan());
  return oracle_jet_ample(d, k, max_r, cache);
}

JetAmpleResult oracle_jet_ample(const TCartierDivisor& d, long k, long max_r, ConeCache& cache) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be nonnegative");
  if (max_r < 1 || max_r > k + 1) throw Error(ErrorKind::InvalidArgument, "need 1 <= max_r <= k + 1");
  require_same_fan(d, cache);
  require_nef(d);
  SectionTest sections(d);
  const long n = static_cast<long>(d.fan().num_cones());
  JetAmpleResult result;
  for (long r = 1; r <= std::min(max_r, n) && result.ample; ++r) {
    std::vector<int> idx(r);
    for (long i = 0; i < r; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      bool stop = false;
      std::vector<long> cur;
      compositions(k + 1, r, cur,
                   [&](const std::vector<long>& parts) {
                     Configuration cfg;
                     for (long i = 0; i < r; ++i) cfg.push_back({idx[i], parts[i]});
                     ++result.configurations;
                     OracleReport rep = run_configuration(d, cfg, cache, sections);
                     if (rep.surjective) return true;
                     result.ample = false;
                     result.failure = std::move(rep);
                     return false;
                   },
                   stop);
      if (stop) break;
      long i = r - 1;
      while (i >= 0 && idx[i] == n - r + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (long j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return result;
}

// --- Fujita ------------------------------------------------------------------

bool is_projective_space(const Fan& fan) {
  if (!fan.is_complete() || fan.rays().size() != fan.dim() + 1) return false;
  for (std::size_t c = 0; c < fan.num_cones(); ++c)
    if (fan.cone(c).multiplicity() != 1 || fan.maximal_cones()[c].size() != fan.dim()) return false;
  return true;
}

namespace {

bool in_canonical_range(const TQDivisor& d) {
  return std::all_of(d.coefficients.begin(), d.coefficients.end(),
                     [](const Rational& a) { return a >= -1 && a <= 0; });
}

std::vector<RationalVector> add(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

Rational min_at_cone(const Fan& fan, const std::vector<RationalVector>& u, std::size_t cone) {
  std::optional<Rational> best;
  for (std::size_t w = 0; w < fan.walls().size(); ++w) {
    const Wall& wl = fan.walls()[w];
    if (wl.cone1 != static_cast<int>(cone) && wl.cone2 != static_cast<int>(cone)) continue;
    Rational x = intersection_number(fan, u, w);
    if (!best || x < *best) best = x;
  }
  if (!best) throw Error(ErrorKind::Precondition, "cone has no adjacent maximal cones");
  return *best;
}

}  // namespace

FujitaVerdict fujita_check(const TQDivisor& d, const TQDivisor& dprime, long k, bool run_oracle) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be nonnegative");
  if (!(d.fan == dprime.fan)) throw Error(ErrorKind::InvalidArgument, "D and D' live on different fans");
  const Fan& fan = d.fan;
  fan.require_complete();
  FujitaVerdict v;
  v.not_projective_space = !is_projective_space(fan);
  v.dprime_in_range = dprime.coefficients.size() == fan.rays().size() && in_canonical_range(dprime);
  auto ud = q_cartier_local_data(d);
  auto up = q_cartier_local_data(dprime);
  if (ud && up) {
    auto sum = add(*ud, *up);
    v.cartier = std::all_of(sum.begin(), sum.end(), [](const RationalVector& x) { return is_integral(x); });
  }
  if (ud) {
    v.intersections = true;
    const Rational need = Rational(static_cast<long>(fan.dim()) + k);
    for (std::size_t w = 0; w < fan.walls().size(); ++w) {
      v.wall_intersections.push_back(intersection_number(fan, *ud, w));
      if (v.wall_intersections.back() < need) v.intersections = false;
    }
  }
  v.hypotheses_hold = v.not_projective_space && v.dprime_in_range && v.cartier && v.intersections;
  if (!v.hypotheses_hold) return v;

  std::vector<LatticeVector> local;
  for (const auto& x : add(*ud, *up)) local.push_back(to_lattice(x));
  v.sum = TCartierDivisor::from_local_data(fan, std::move(local));
  ConeCache cache(fan);
  if (v.sum->is_ample()) v.certificate = certify(*v.sum, k, cache);
  else v.note = "D + D' is not ample; certificate skipped";
  if (run_oracle) v.oracle = oracle_jet_ample(*v.sum, k, k + 1, cache).ample;
  return v;
}

Rational w_min_rational(const DualConeData& q, const RationalVector& u) {
  Integer den = 1;
  for (const auto& x : u) den = lcm(den, x.get_den());
  return w_min(q, to_lattice(Rational(den) * u)) / Rational(den);
}

Rational w_max_rational(const DualConeData& q, const RationalVector& u) {
  Integer den = 1;
  for (const auto& x : u) den = lcm(den, x.get_den());
  return w_max(q, to_lattice(Rational(den) * u)) / Rational(den);
}

bool payne_bound_check(const TQDivisor& d, const TQDivisor& dprime, std::size_t cone) {
  if (!(d.fan == dprime.fan)) throw Error(ErrorKind::InvalidArgument, "D and D' live on different fans");
  const Fan& fan = d.fan;
  fan.require_complete();
  if (cone >= fan.num_cones()) throw Error(ErrorKind::InvalidArgument, "no such maximal cone");
  if (!in_canonical_range(dprime)) throw Error(ErrorKind::Precondition, "precondition failed: 0 >= D' >= K_X");
  auto ud = q_cartier_local_data(d);
  auto up = q_cartier_local_data(dprime);
  if (!ud) throw Error(ErrorKind::Precondition, "precondition failed: D is not Q-Cartier");
  if (!up) throw Error(ErrorKind::Precondition, "precondition failed: D' is not Q-Cartier");
  for (std::size_t w = 0; w < fan.walls().size(); ++w)
    if (intersection_number(fan, *ud, w) < 0) throw Error(ErrorKind::Precondition, "precondition failed: D is not nef");
  Rational t = min_at_cone(fan, *ud, cone);
  Rational m = min_at_cone(fan, add(*ud, *up), cone);
  Rational wmin = w_min_rational(DualConeData::dual_of(fan.cone(cone)), (*up)[cone]);
  if (t < wmin) throw Error(ErrorKind::Precondition, "precondition failed: t_sigma < W_min(u'_sigma)");
  return m >= t - wmin - 1;
}

bool interior_weight_check(const DualConeData& q, const RationalVector& uprime,
                           std::span<const LatticeVector> samples) {
  require_same_dim(uprime.size(), q.dim());
  for (const auto& n : q.cone().facet_normals()) {
    Rational y = dot(uprime, n);
    if (y < 0 || y > 1) throw Error(ErrorKind::Precondition, "u' is not the local datum of some 0 >= D' >= K_X");
  }
  Rational base = w_max_rational(q, uprime);
  for (const auto& u : samples) {
    if (!q.cone().contains_in_interior(u)) throw Error(ErrorKind::Precondition, "sample is not an interior point");
    if (w_max(q, u) < base) return false;
  }
  return true;
}

}  // namespace toricjet

#include "toricjet/divisor.hpp"

#include <algorithm>
#include <set>

#include "toricjet/lattice.hpp"

namespace toricjet {

namespace {

std::vector<LatticeVector> rays_of(const Fan& fan, const std::vector<int>& idx) {
  std::vector<LatticeVector> out;
  for (int i : idx) out.push_back(fan.rays()[i]);
  return out;
}

// Index of the image of v0 in N / N_tau, read off a quotient map.
Integer transverse_index(const Fan& fan, const Wall& w, int v0) {
  auto tau = rays_of(fan, w.rays);
  IntegerMatrix q = quotient_lattice_map(tau, fan.dim());
  Integer s = 0;
  for (const auto& x : q.apply(fan.rays()[v0])) s = gcd(s, x);
  if (s == 0) throw Error(ErrorKind::NotTransverse, "v0 lies in the span of the wall");
  return s;
}

void check_wall_index(const Fan& fan, std::size_t wall) {
  if (wall >= fan.walls().size()) throw Error(ErrorKind::NotAWall, "no such wall");
}

Rational min_edge_length(const Polytope& p, int vertex) {
  auto edges = edges_at_vertex(p, vertex);
  if (edges.empty()) throw Error(ErrorKind::Precondition, "vertex has no edges");
  Rational best = -1;
  for (const auto& e : edges) {
    Rational l = lattice_length(p.vertices()[vertex], p.vertices()[e.other]);
    if (best < 0 || l < best) best = l;
  }
  return best;
}

}  // namespace

TCartierDivisor TCartierDivisor::from_polytope(const Polytope& p) {
  if (!p.is_lattice()) throw Error(ErrorKind::InvalidArgument, "polytope has non-lattice vertices");
  NormalFan nf = normal_fan(p);
  TCartierDivisor d;
  d.fan_ = std::move(nf.fan);
  d.u_.resize(d.fan_.num_cones());
  for (std::size_t v = 0; v < p.vertices().size(); ++v) d.u_[nf.cone_of_vertex[v]] = to_lattice(p.vertices()[v]);
  d.finish();
  if (!d.ample_) throw Error(ErrorKind::Precondition, "normal fan divisor failed the ampleness check");
  return d;
}

TCartierDivisor TCartierDivisor::from_local_data(Fan fan, std::vector<LatticeVector> local_data) {
  if (local_data.size() != fan.num_cones())
    throw Error(ErrorKind::InvalidArgument, "need one local datum per maximal cone");
  for (const auto& u : local_data) require_same_dim(u.size(), fan.dim());
  const auto& cones = fan.maximal_cones();
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j)
      for (int r : cones[i]) {
        if (std::find(cones[j].begin(), cones[j].end(), r) == cones[j].end()) continue;
        if (dot(local_data[i] - local_data[j], fan.rays()[r]) != 0)
          throw Error(ErrorKind::Incompatible,
                      "local data of cones " + std::to_string(i) + " and " + std::to_string(j) +
                          " disagree on ray " + std::to_string(r));
      }
  TCartierDivisor d;
  d.fan_ = std::move(fan);
  d.u_ = std::move(local_data);
  d.finish();
  return d;
}

TCartierDivisor TCartierDivisor::from_coefficients(Fan fan, const std::vector<Rational>& coefficients) {
  TQDivisor q{fan, coefficients};
  auto data = q_cartier_local_data(q);
  if (!data) throw Error(ErrorKind::NotCartier, "coefficients are not Q-Cartier");
  std::vector<LatticeVector> u;
  for (const auto& x : *data) {
    if (!is_integral(x)) throw Error(ErrorKind::NotCartier, "divisor is Q-Cartier but not Cartier");
    u.push_back(to_lattice(x));
  }
  return from_local_data(std::move(fan), std::move(u));
}

void TCartierDivisor::finish() {
  ample_ = false;
  vertex_of_cone_.clear();
  if (!fan_.is_complete() || !fan_.all_top_dimensional() || fan_.dim() == 0) return;
  for (std::size_t w = 0; w < fan_.walls().size(); ++w)
    if (intersection_number(*this, w) <= 0) return;
  Polytope p = Polytope::from_lattice_points(u_);
  if (p.vertices().size() != u_.size()) return;
  std::vector<int> map;
  std::set<int> seen;
  for (const auto& u : u_) {
    int v = p.vertex_index(to_rational(u));
    if (v < 0 || !seen.insert(v).second) return;
    map.push_back(v);
  }
  polytope_ = std::move(p);
  vertex_of_cone_ = std::move(map);
  ample_ = true;
}

std::vector<Integer> TCartierDivisor::coefficients() const {
  std::vector<Integer> a(fan_.rays().size());
  std::vector<bool> set(a.size(), false);
  for (std::size_t c = 0; c < fan_.num_cones(); ++c)
    for (int r : fan_.maximal_cones()[c])
      if (!set[r]) {
        a[r] = -dot(u_[c], fan_.rays()[r]);
        set[r] = true;
      }
  return a;
}

const Polytope& TCartierDivisor::polytope() const {
  if (!ample_) throw Error(ErrorKind::NotAmple, "divisor is not ample");
  return polytope_;
}

int TCartierDivisor::vertex_of_cone(std::size_t cone) const {
  if (!ample_) throw Error(ErrorKind::NotAmple, "divisor is not ample");
  return vertex_of_cone_.at(cone);
}

int TCartierDivisor::cone_of_vertex(int vertex) const {
  if (!ample_) throw Error(ErrorKind::NotAmple, "divisor is not ample");
  for (std::size_t c = 0; c < vertex_of_cone_.size(); ++c)
    if (vertex_of_cone_[c] == vertex) return static_cast<int>(c);
  throw Error(ErrorKind::NotAVertex, "not a vertex of P_D");
}

TCartierDivisor TCartierDivisor::scaled(const Integer& m) const {
  std::vector<LatticeVector> u;
  for (const auto& x : u_) u.push_back(m * x);
  TCartierDivisor d;
  d.fan_ = fan_;
  d.u_ = std::move(u);
  d.finish();
  return d;
}

TCartierDivisor operator+(const TCartierDivisor& a, const TCartierDivisor& b) {
  if (!(a.fan_ == b.fan_)) throw Error(ErrorKind::InvalidArgument, "divisors live on different fans");
  TCartierDivisor d;
  d.fan_ = a.fan_;
  for (std::size_t i = 0; i < a.u_.size(); ++i) d.u_.push_back(a.u_[i] + b.u_[i]);
  d.finish();
  return d;
}

Rational psi(const TCartierDivisor& d, const RationalVector& v) {
  require_same_dim(v.size(), d.fan().dim());
  int c = d.fan().cone_containing(v);
  if (c < 0) throw Error(ErrorKind::OutsideCone, "vector outside the support of the fan");
  return dot(v, d.u(c));
}

Rational intersection_number(const TCartierDivisor& d, std::size_t wall) {
  check_wall_index(d.fan(), wall);
  return intersection_number(d, wall, d.fan().walls()[wall].v0_in_cone2);
}

namespace {

Rational wall_intersection(const Fan& fan, const RationalVector& u1, const RationalVector& u2, std::size_t wall,
                           int v0_ray) {
  fan.require_complete();
  check_wall_index(fan, wall);
  const Wall& w = fan.walls()[wall];
  const auto& c2 = fan.maximal_cones()[w.cone2];
  if (std::find(c2.begin(), c2.end(), v0_ray) == c2.end() ||
      std::find(w.rays.begin(), w.rays.end(), v0_ray) != w.rays.end())
    throw Error(ErrorKind::InvalidArgument, "v0 must be a ray of the second cone outside the wall");
  const LatticeVector& v0 = fan.rays()[v0_ray];
  auto tau = rays_of(fan, w.rays);
  auto with_v0 = tau;
  with_v0.push_back(v0);
  Rational ratio = Rational(multiplicity(tau)) / Rational(multiplicity(with_v0));
  return dot(u1 - u2, v0) * ratio;
}

}  // namespace

Rational intersection_number(const TCartierDivisor& d, std::size_t wall, int v0_ray) {
  check_wall_index(d.fan(), wall);
  const Wall& w = d.fan().walls()[wall];
  return wall_intersection(d.fan(), to_rational(d.u(w.cone1)), to_rational(d.u(w.cone2)), wall, v0_ray);
}

Rational intersection_number(const Fan& fan, std::span<const RationalVector> local_data, std::size_t wall) {
  if (local_data.size() != fan.num_cones()) throw Error(ErrorKind::InvalidArgument, "need one local datum per cone");
  check_wall_index(fan, wall);
  const Wall& w = fan.walls()[wall];
  return wall_intersection(fan, local_data[w.cone1], local_data[w.cone2], wall, w.v0_in_cone2);
}

EdgeReport edge_lengths(const TCartierDivisor& d) {
  const Polytope& p = d.polytope();
  const Fan& fan = d.fan();
  EdgeReport rep;
  for (const auto& [a, b] : p.edges()) {
    EdgeRow row;
    row.vertex_a = a;
    row.vertex_b = b;
    row.length = lattice_length(p.vertices()[a], p.vertices()[b]);
    int ca = d.cone_of_vertex(a), cb = d.cone_of_vertex(b);
    for (std::size_t w = 0; w < fan.walls().size(); ++w) {
      const Wall& wl = fan.walls()[w];
      if ((wl.cone1 == ca && wl.cone2 == cb) || (wl.cone1 == cb && wl.cone2 == ca)) {
        row.wall = static_cast<int>(w);
        row.intersection = intersection_number(d, w);
        break;
      }
    }
    if (row.wall < 0 || row.intersection != row.length) rep.consistent = false;
    rep.edges.push_back(std::move(row));
  }
  return rep;
}

Rational L_sigma(const TCartierDivisor& d, std::size_t cone) {
  return min_edge_length(d.polytope(), d.vertex_of_cone(cone));
}

Rational max_concavity(const TCartierDivisor& d) {
  const Fan& fan = d.fan();
  fan.require_complete();
  if (fan.walls().empty()) throw Error(ErrorKind::Precondition, "fan has no walls");
  std::optional<Rational> best;
  for (const Wall& w : fan.walls()) {
    // both orientations: <u_{σ1}, v0> - ψ(v0) over s0, with v0 in σ2 \ σ1
    for (int side = 0; side < 2; ++side) {
      int c1 = side == 0 ? w.cone1 : w.cone2;
      int c2 = side == 0 ? w.cone2 : w.cone1;
      int v0 = side == 0 ? w.v0_in_cone2 : w.v0_in_cone1;
      const LatticeVector& v = fan.rays()[v0];
      Rational gap = Rational(dot(d.u(c1), v) - dot(d.u(c2), v));
      Rational k = gap / Rational(transverse_index(fan, w, v0));
      if (!best || k < *best) best = k;
    }
  }
  return *best;
}

bool is_k_concave(const TCartierDivisor& d, const Rational& k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "k must be nonnegative");
  return k <= max_concavity(d);
}

Integer s_at_vertex(const Polytope& p, int vertex) {
  if (!p.is_lattice()) throw Error(ErrorKind::InvalidArgument, "polytope has non-lattice vertices");
  Rational l = min_edge_length(p, vertex);
  if (!is_integer(l)) throw Error(ErrorKind::Precondition, "non-integral edge length");
  return l.get_num();
}

Integer seshadri_invariant_point(const TCartierDivisor& d, std::size_t cone) {
  return s_at_vertex(d.polytope(), d.vertex_of_cone(cone));
}

Integer seshadri_global(const TCartierDivisor& d) {
  const Polytope& p = d.polytope();
  Integer best = -1;
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    Integer s = s_at_vertex(p, static_cast<int>(v));
    if (best < 0 || s < best) best = s;
  }
  return best;
}

TQDivisor canonical_divisor(const Fan& fan) {
  return TQDivisor{fan, std::vector<Rational>(fan.rays().size(), Rational(-1))};
}

TQDivisor to_q_divisor(const TCartierDivisor& d) {
  std::vector<Rational> a;
  for (const auto& x : d.coefficients()) a.emplace_back(x);
  return TQDivisor{d.fan(), std::move(a)};
}

std::optional<std::vector<RationalVector>> q_cartier_local_data(const TQDivisor& d) {
  if (d.coefficients.size() != d.fan.rays().size())
    throw Error(ErrorKind::InvalidArgument, "need one coefficient per ray");
  std::vector<RationalVector> out;
  for (const auto& cone : d.fan.maximal_cones()) {
    std::vector<LatticeVector> rows;
    std::vector<Rational> rhs;
    for (int r : cone) {
      rows.push_back(d.fan.rays()[r]);
      rhs.push_back(-d.coefficients[r]);
    }
    auto u = solve_dual(rows, rhs, d.fan.dim());
    if (!u) return std::nullopt;
    out.push_back(std::move(*u));
  }
  return out;
}

bool is_cartier(const TQDivisor& d) {
  auto data = q_cartier_local_data(d);
  if (!data) return false;
  return std::all_of(data->begin(), data->end(), [](const RationalVector& u) { return is_integral(u); });
}

bool projection_monotonicity_check(const Polytope& p, std::span<const int> xi, std::span<const int> tau) {
  int fx = p.face_index(xi), ft = p.face_index(tau);
  if (fx < 0 || ft < 0) throw Error(ErrorKind::NotAFace, "vertex set is not a face of the polytope");
  const Face& a = p.faces()[fx];
  const Face& b = p.faces()[ft];
  if (b.dim != a.dim + 1 || !std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(), a.vertices.end()))
    throw Error(ErrorKind::NotAFace, "need faces xi ⊂ tau with dim tau = dim xi + 1");
  if (static_cast<std::size_t>(b.dim) >= p.ambient_dim())
    throw Error(ErrorKind::Precondition, "tau must be a proper face");
  FaceProjection px = face_projection(p, a.vertices);
  FaceProjection pt = face_projection(p, b.vertices);
  return min_edge_length(px.polytope, px.vertex) <= min_edge_length(pt.polytope, pt.vertex);
}

}  // namespace toricjet

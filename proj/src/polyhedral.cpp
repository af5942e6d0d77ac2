#include "toricjet/polyhedral.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace toricjet {

namespace {

// Fraction-free Gaussian elimination (Bareiss) determinant.
Integer bareiss_determinant(std::vector<LatticeVector> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign_flip = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign_flip = -sign_flip;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign_flip * m[n - 1][n - 1];
}

// Generalized cross product of d-1 vectors in Z^d: a vector orthogonal to all
// of them, zero iff they are linearly dependent. Returned primitive.
std::optional<LatticeVector> orthogonal_vector(const std::vector<const LatticeVector*>& rows, std::size_t d) {
  LatticeVector n(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<LatticeVector> minor(rows.size(), LatticeVector(d - 1));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) minor[i][c++] = (*rows[i])[k];
    }
    n[j] = bareiss_determinant(std::move(minor));
    if (j % 2 == 1) n[j] = -n[j];
  }
  if (is_zero(n)) return std::nullopt;
  return primitive(n);
}

struct FullDimData {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> normals;
  bool pointed = true;
};

// gens: primitive, pairwise distinct, spanning Z^r.
FullDimData build_full_dimensional(const std::vector<LatticeVector>& gens, std::size_t r) {
  FullDimData out;
  if (r == 0) return out;
  if (r == 1) {
    bool pos = false, neg = false;
    for (const auto& g : gens) (g[0] > 0 ? pos : neg) = true;
    if (pos && neg) {
      out.pointed = false;
      out.rays = gens;
      return out;
    }
    out.rays = {gens.front()};
    out.normals = {gens.front()};
    return out;
  }
  std::set<LatticeVector> normals;
  const std::size_t m = gens.size();
  std::vector<std::size_t> idx(r - 1);
  for (std::size_t i = 0; i < r - 1; ++i) idx[i] = i;
  std::vector<const LatticeVector*> rows(r - 1);
  while (true) {
    for (std::size_t i = 0; i < r - 1; ++i) rows[i] = &gens[idx[i]];
    if (auto n = orthogonal_vector(rows, r)) {
      bool has_pos = false, has_neg = false;
      for (const auto& g : gens) {
        int s = sgn(dot(*n, g));
        if (s > 0) has_pos = true;
        if (s < 0) has_neg = true;
        if (has_pos && has_neg) break;
      }
      if (!(has_pos && has_neg)) {
        if (has_neg) {
          for (auto& x : *n) x = -x;
        }
        normals.insert(*n);
      }
    }
    // next combination
    std::size_t k = r - 1;
    while (k > 0 && idx[k - 1] == m - (r - 1) + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < r - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  out.normals.assign(normals.begin(), normals.end());
  out.pointed = rank(std::span<const LatticeVector>(out.normals)) == r;
  if (!out.pointed) {
    out.rays = gens;
    return out;
  }
  for (const auto& g : gens) {
    std::vector<LatticeVector> tight;
    for (const auto& n : out.normals)
      if (dot(n, g) == 0) tight.push_back(n);
    if (rank(std::span<const LatticeVector>(tight)) == r - 1) out.rays.push_back(g);
  }
  return out;
}

std::vector<LatticeVector> primitive_distinct(std::span<const LatticeVector> gens) {
  std::vector<LatticeVector> out;
  std::set<LatticeVector> seen;
  for (const auto& g : gens) {
    if (is_zero(g)) continue;
    LatticeVector p = primitive(g);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

// --- Cone -----------------------------------------------------------------

Cone::Cone(std::span<const LatticeVector> generators, std::size_t ambient_dim) : ambient_dim_(ambient_dim) {
  for (const auto& g : generators) require_same_dim(g.size(), ambient_dim);
  std::vector<LatticeVector> gens = primitive_distinct(generators);
  dim_ = rank(std::span<const LatticeVector>(gens));
  if (dim_ == ambient_dim_) {
    FullDimData data = build_full_dimensional(gens, dim_);
    rays_ = std::move(data.rays);
    normals_ = std::move(data.normals);
    pointed_ = data.pointed;
    return;
  }
  annihilator_ = integer_kernel(gens, ambient_dim_);
  span_basis_ = integer_kernel(annihilator_, ambient_dim_);
  std::vector<LatticeVector> coords;
  coords.reserve(gens.size());
  for (const auto& g : gens) coords.push_back(to_lattice(span_coordinates(to_rational(g))));
  FullDimData data = build_full_dimensional(coords, dim_);
  pointed_ = data.pointed;
  normals_ = std::move(data.normals);
  for (const auto& x : data.rays) {
    LatticeVector v = zero_lattice(ambient_dim_);
    for (std::size_t i = 0; i < dim_; ++i) v = v + x[i] * span_basis_[i];
    rays_.push_back(std::move(v));
  }
}

RationalVector Cone::span_coordinates(const RationalVector& u) const {
  std::vector<RationalVector> cols;
  cols.reserve(span_basis_.size());
  for (const auto& b : span_basis_) cols.push_back(to_rational(b));
  auto x = solve_combination(cols, u);
  if (!x) throw Error(ErrorKind::InvalidArgument, "vector outside the span of the cone");
  return *x;
}

bool Cone::is_smooth() const { return is_simplicial() && multiplicity() == 1; }

const std::vector<LatticeVector>& Cone::facet_normals() const {
  if (!is_full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "facet normals need a full-dimensional cone");
  return normals_;
}

bool Cone::contains(const LatticeVector& u) const {
  require_same_dim(u.size(), ambient_dim_);
  if (is_full_dimensional()) {
    return std::all_of(normals_.begin(), normals_.end(), [&](const LatticeVector& n) { return dot(n, u) >= 0; });
  }
  return contains(to_rational(u));
}

bool Cone::contains(const RationalVector& u) const {
  require_same_dim(u.size(), ambient_dim_);
  if (is_full_dimensional()) {
    return std::all_of(normals_.begin(), normals_.end(), [&](const LatticeVector& n) { return dot(u, n) >= 0; });
  }
  for (const auto& a : annihilator_)
    if (dot(u, a) != 0) return false;
  if (dim_ == 0) return true;
  RationalVector x = span_coordinates(u);
  return std::all_of(normals_.begin(), normals_.end(), [&](const LatticeVector& n) { return dot(x, n) >= 0; });
}

bool Cone::contains_in_interior(const LatticeVector& u) const {
  const auto& normals = facet_normals();
  return std::all_of(normals.begin(), normals.end(), [&](const LatticeVector& n) { return dot(n, u) > 0; });
}

Cone dual_cone(const Cone& c) {
  if (!c.is_full_dimensional()) {
    throw Error(ErrorKind::NotFullDimensional, "dual_cone requires a full-dimensional cone");
  }
  return Cone(c.facet_normals(), c.ambient_dim());
}

// --- Polytope ---------------------------------------------------------------

Polytope Polytope::from_lattice_points(std::span<const LatticeVector> points) {
  std::vector<RationalVector> pts;
  pts.reserve(points.size());
  for (const auto& p : points) pts.push_back(to_rational(p));
  return from_points(pts);
}

Polytope Polytope::from_points(std::span<const RationalVector> points) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "polytope needs at least one point");
  Polytope p;
  p.dim_ = points.front().size();
  std::vector<RationalVector> pts;
  {
    std::set<RationalVector> seen;
    for (const auto& x : points) {
      require_same_dim(x.size(), p.dim_);
      if (seen.insert(x).second) pts.push_back(x);
    }
  }
  if (p.dim_ == 0) {
    p.vertices_ = {RationalVector{}};
    p.build_faces();
    return p;
  }
  std::vector<RationalVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  if (rank(std::span<const RationalVector>(diffs)) != p.dim_) {
    throw Error(ErrorKind::NotFullDimensional, "not full-dimensional: points span a proper affine subspace");
  }

  std::vector<LatticeVector> homog;
  homog.reserve(pts.size());
  for (const auto& x : pts) {
    RationalVector h = x;
    h.emplace_back(1);
    homog.push_back(primitive_direction(h));
  }
  FullDimData cone = build_full_dimensional(homog, p.dim_ + 1);
  for (const auto& n : cone.normals) {
    LatticeVector a(n.begin(), n.end() - 1);
    if (is_zero(a)) continue;
    Integer g = 0;
    for (const auto& x : a) g = gcd(g, x);
    for (auto& x : a) x /= g;
    Rational offset(-n.back(), g);
    offset.canonicalize();
    p.facets_.push_back({std::move(a), offset});
  }
  std::sort(p.facets_.begin(), p.facets_.end(),
            [](const Facet& a, const Facet& b) { return a.normal < b.normal; });

  for (const auto& x : pts) {
    std::vector<LatticeVector> tight;
    for (const auto& f : p.facets_)
      if (dot(x, f.normal) == f.offset) tight.push_back(f.normal);
    if (rank(std::span<const LatticeVector>(tight)) == p.dim_) p.vertices_.push_back(x);
  }
  p.is_lattice_ = std::all_of(p.vertices_.begin(), p.vertices_.end(),
                              [](const RationalVector& v) { return is_integral(v); });
  p.build_faces();
  return p;
}

void Polytope::build_faces() {
  const int nv = static_cast<int>(vertices_.size());
  const int nf = static_cast<int>(facets_.size());
  std::vector<std::vector<int>> facet_vertices(nf);
  for (int f = 0; f < nf; ++f)
    for (int v = 0; v < nv; ++v)
      if (dot(vertices_[v], facets_[f].normal) == facets_[f].offset) facet_vertices[f].push_back(v);

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  std::vector<int> all(nv);
  for (int v = 0; v < nv; ++v) all[v] = v;
  seen.insert(all);
  queue.push_back(all);
  while (!queue.empty()) {
    std::vector<int> face = std::move(queue.front());
    queue.pop_front();
    for (int f = 0; f < nf; ++f) {
      std::vector<int> meet;
      std::set_intersection(face.begin(), face.end(), facet_vertices[f].begin(), facet_vertices[f].end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet.size() == face.size()) continue;
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  faces_.clear();
  edges_.clear();
  for (const auto& vs : seen) {
    Face face;
    face.vertices = vs;
    for (int f = 0; f < nf; ++f)
      if (std::includes(facet_vertices[f].begin(), facet_vertices[f].end(), vs.begin(), vs.end()))
        face.facets.push_back(f);
    std::vector<RationalVector> diffs;
    for (std::size_t i = 1; i < vs.size(); ++i) diffs.push_back(vertices_[vs[i]] - vertices_[vs[0]]);
    face.dim = static_cast<int>(rank(std::span<const RationalVector>(diffs)));
    faces_.push_back(std::move(face));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
  for (const auto& f : faces_)
    if (f.dim == 1) edges_.emplace_back(f.vertices[0], f.vertices[1]);
}

bool Polytope::contains(const RationalVector& x) const {
  require_same_dim(x.size(), dim_);
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(x, f.normal) >= f.offset; });
}

bool Polytope::contains(const LatticeVector& x) const {
  require_same_dim(x.size(), dim_);
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, x) >= f.offset; });
}

int Polytope::vertex_index(const RationalVector& x) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == x) return static_cast<int>(i);
  return -1;
}

int Polytope::face_index(std::span<const int> vertex_set) const {
  std::vector<int> key(vertex_set.begin(), vertex_set.end());
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  for (std::size_t i = 0; i < faces_.size(); ++i)
    if (faces_[i].vertices == key) return static_cast<int>(i);
  return -1;
}

Polytope Polytope::dilated(const Rational& factor) const {
  if (factor <= 0) throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive");
  Polytope p = *this;
  for (auto& v : p.vertices_) v = factor * v;
  for (auto& f : p.facets_) f.offset *= factor;
  p.is_lattice_ = std::all_of(p.vertices_.begin(), p.vertices_.end(),
                              [](const RationalVector& v) { return is_integral(v); });
  return p;
}

bool operator==(const Polytope& a, const Polytope& b) {
  if (a.dim_ != b.dim_ || a.vertices_.size() != b.vertices_.size()) return false;
  std::vector<RationalVector> va = a.vertices_, vb = b.vertices_;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

// --- Fan --------------------------------------------------------------------

Fan::Fan(std::vector<LatticeVector> rays, std::vector<std::vector<int>> maximal_cones)
    : cones_(std::move(maximal_cones)) {
  if (rays.empty()) throw Error(ErrorKind::InvalidArgument, "fan needs at least one ray");
  dim_ = rays.front().size();
  for (auto& r : rays) {
    require_same_dim(r.size(), dim_);
    rays_.push_back(primitive(r));
  }
  {
    std::set<LatticeVector> distinct(rays_.begin(), rays_.end());
    if (distinct.size() != rays_.size()) throw Error(ErrorKind::InvalidArgument, "fan has repeated rays");
  }
  if (cones_.empty()) throw Error(ErrorKind::InvalidArgument, "fan needs at least one maximal cone");
  top_dimensional_ = true;
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    const auto& c = cones_[i];
    if (c.empty()) throw Error(ErrorKind::InvalidArgument, "empty maximal cone");
    std::set<int> distinct;
    for (int r : c) {
      if (r < 0 || static_cast<std::size_t>(r) >= rays_.size())
        throw Error(ErrorKind::InvalidArgument, "ray index out of range in maximal cone " + std::to_string(i));
      distinct.insert(r);
    }
    if (distinct.size() != c.size()) throw Error(ErrorKind::InvalidArgument, "repeated ray in maximal cone");
    Cone cone(cone_rays(i), dim_);
    if (!cone.is_pointed() || cone.rays().size() != c.size())
      throw Error(ErrorKind::InvalidArgument,
                  "maximal cone " + std::to_string(i) + " is not pointed or lists a non-extreme ray");
    if (!cone.is_full_dimensional()) top_dimensional_ = false;
    cone_objects_.push_back(std::move(cone));
  }

  std::vector<std::vector<int>> sorted(cones_.size());
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    sorted[i] = cones_[i];
    std::sort(sorted[i].begin(), sorted[i].end());
  }
  for (std::size_t i = 0; i < cones_.size(); ++i) {
    for (std::size_t j = i + 1; j < cones_.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(), sorted[j].end(),
                            std::back_inserter(common));
      std::vector<LatticeVector> common_rays;
      for (int r : common) common_rays.push_back(rays_[r]);
      if (rank(std::span<const LatticeVector>(common_rays)) + 1 != dim_) continue;
      Wall w;
      w.cone1 = static_cast<int>(i);
      w.cone2 = static_cast<int>(j);
      w.rays = common;
      for (int r : cones_[j])
        if (!std::binary_search(common.begin(), common.end(), r)) {
          w.v0_in_cone2 = r;
          break;
        }
      for (int r : cones_[i])
        if (!std::binary_search(common.begin(), common.end(), r)) {
          w.v0_in_cone1 = r;
          break;
        }
      if (w.v0_in_cone1 < 0 || w.v0_in_cone2 < 0) continue;  // one cone inside the other: not a wall
      walls_.push_back(std::move(w));
    }
  }

  complete_ = top_dimensional_;
  for (std::size_t i = 0; i < cones_.size() && complete_; ++i) {
    for (const auto& n : cone_objects_[i].facet_normals()) {
      std::vector<int> facet;
      for (int r : sorted[i])
        if (dot(n, rays_[r]) == 0) facet.push_back(r);
      int matches = 0;
      for (const auto& w : walls_)
        if ((w.cone1 == static_cast<int>(i) || w.cone2 == static_cast<int>(i)) && w.rays == facet) ++matches;
      if (matches != 1) {
        complete_ = false;
        break;
      }
    }
  }
}

std::vector<LatticeVector> Fan::cone_rays(std::size_t i) const {
  std::vector<LatticeVector> out;
  for (int r : cones_.at(i)) out.push_back(rays_[r]);
  return out;
}

void Fan::require_complete() const {
  if (!complete_) throw Error(ErrorKind::NotComplete, "fan is not complete");
}

int Fan::cone_containing(const RationalVector& v) const {
  for (std::size_t i = 0; i < cone_objects_.size(); ++i)
    if (cone_objects_[i].contains(v)) return static_cast<int>(i);
  return -1;
}

// --- polytope operations ------------------------------------------------------

NormalFan normal_fan(const Polytope& p) {
  if (p.ambient_dim() == 0) throw Error(ErrorKind::NotFullDimensional, "not full-dimensional: a point");
  std::vector<LatticeVector> rays;
  for (const auto& f : p.facets()) rays.push_back(f.normal);
  std::vector<std::vector<int>> cones(p.vertices().size());
  for (const auto& face : p.faces())
    if (face.dim == 0) cones[face.vertices[0]] = face.facets;
  NormalFan nf{Fan(std::move(rays), std::move(cones)), {}};
  nf.cone_of_vertex.resize(p.vertices().size());
  for (std::size_t i = 0; i < p.vertices().size(); ++i) nf.cone_of_vertex[i] = static_cast<int>(i);
  return nf;
}

Cone cone_at_vertex(const Polytope& p, int vertex) {
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= p.vertices().size())
    throw Error(ErrorKind::NotAVertex, "not a vertex of the polytope");
  std::vector<LatticeVector> gens;
  for (std::size_t j = 0; j < p.vertices().size(); ++j)
    if (static_cast<int>(j) != vertex) gens.push_back(primitive_direction(p.vertices()[j] - p.vertices()[vertex]));
  return Cone(gens, p.ambient_dim());
}

std::vector<EdgeAtVertex> edges_at_vertex(const Polytope& p, int vertex) {
  if (vertex < 0 || static_cast<std::size_t>(vertex) >= p.vertices().size())
    throw Error(ErrorKind::NotAVertex, "not a vertex of the polytope");
  std::vector<EdgeAtVertex> out;
  for (std::size_t e = 0; e < p.edges().size(); ++e) {
    auto [a, b] = p.edges()[e];
    if (a == vertex) out.push_back({static_cast<int>(e), b});
    else if (b == vertex) out.push_back({static_cast<int>(e), a});
  }
  return out;
}

FaceProjection face_projection(const Polytope& p, std::span<const int> face_vertices) {
  int fi = p.face_index(face_vertices);
  if (fi < 0) throw Error(ErrorKind::NotAFace, "vertex set is not a face of the polytope");
  const Face& face = p.faces()[fi];
  const auto& verts = p.vertices();
  std::vector<LatticeVector> directions;
  for (std::size_t i = 1; i < face.vertices.size(); ++i)
    directions.push_back(primitive_direction(verts[face.vertices[i]] - verts[face.vertices[0]]));
  FaceProjection out;
  out.map = quotient_lattice_map(directions, p.ambient_dim());
  std::vector<RationalVector> image;
  image.reserve(verts.size());
  for (const auto& v : verts) image.push_back(out.map.apply(v));
  out.polytope = Polytope::from_points(image);
  out.vertex = out.polytope.vertex_index(out.map.apply(verts[face.vertices[0]]));
  if (out.vertex < 0) throw Error(ErrorKind::InvalidArgument, "projected face is not a vertex");
  return out;
}

std::vector<LatticeVector> lattice_points(const Polytope& p) {
  const std::size_t d = p.ambient_dim();
  if (d == 0) return {LatticeVector{}};
  LatticeVector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      if (v[i] < mn) mn = v[i];
      if (v[i] > mx) mx = v[i];
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
    if (lo[i] > hi[i]) return {};
  }
  std::vector<LatticeVector> out;
  LatticeVector x = lo;
  while (true) {
    if (p.contains(x)) out.push_back(x);
    std::size_t k = d;
    while (k > 0) {
      --k;
      if (x[k] < hi[k]) {
        ++x[k];
        for (std::size_t j = k + 1; j < d; ++j) x[j] = lo[j];
        break;
      }
      if (k == 0) return out;
    }
  }
}

}  // namespace toricjet

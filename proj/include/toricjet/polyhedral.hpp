#pragma once

// Rational polyhedral cones, lattice polytopes with their face lattices, and
// complete fans.

#include <optional>
#include <span>
#include <vector>

#include "toricjet/arith.hpp"
#include "toricjet/lattice.hpp"

namespace toricjet {

/// Rational polyhedral cone given by generators. Facet normals are inner
/// normals and are only available when the cone spans its ambient space.
class Cone {
 public:
  Cone() = default;
  Cone(std::span<const LatticeVector> generators, std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == ambient_dim_; }
  bool is_pointed() const { return pointed_; }
  bool is_simplicial() const { return pointed_ && rays_.size() == dim_; }
  /// Simplicial with primitive rays forming part of a lattice basis.
  bool is_smooth() const;

  /// Primitive generators of the extreme rays (pointed cones); for a
  /// non-pointed cone the deduplicated primitive generators.
  const std::vector<LatticeVector>& rays() const { return rays_; }
  /// Primitive inner facet normals, full-dimensional cones only.
  const std::vector<LatticeVector>& facet_normals() const;

  bool contains(const LatticeVector& u) const;
  bool contains(const RationalVector& u) const;
  /// Strictly positive on every facet normal; full-dimensional cones only.
  bool contains_in_interior(const LatticeVector& u) const;

  Integer multiplicity() const { return toricjet::multiplicity(rays_); }

 private:
  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  bool pointed_ = true;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> normals_;  // full-dim: in Z^d; else relative, in span coordinates
  std::vector<LatticeVector> span_basis_;
  std::vector<LatticeVector> annihilator_;

  RationalVector span_coordinates(const RationalVector& u) const;
};

/// Dual cone with primitive ray generators. Requires a full-dimensional cone.
Cone dual_cone(const Cone& c);

struct Facet {
  LatticeVector normal;  ///< primitive inner normal
  Rational offset;       ///< facet is <normal, x> = offset; polytope is >=
};

struct Face {
  std::vector<int> vertices;  ///< sorted vertex indices
  std::vector<int> facets;    ///< sorted indices of facets containing the face
  int dim = 0;
};

/// Full-dimensional polytope in Q^d (or the single point of Q^0).
class Polytope {
 public:
  Polytope() = default;
  /// Convex hull of the points; throws NotFullDimensional for degenerate input.
  static Polytope from_points(std::span<const RationalVector> points);
  static Polytope from_lattice_points(std::span<const LatticeVector> points);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }
  /// Faces of dimension one, as vertex index pairs.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool is_lattice() const { return is_lattice_; }

  bool contains(const RationalVector& x) const;
  bool contains(const LatticeVector& x) const;
  /// Index of the vertex equal to x, or -1.
  int vertex_index(const RationalVector& x) const;
  /// Index into faces() of the face with exactly these vertices, or -1.
  int face_index(std::span<const int> vertex_set) const;

  Polytope dilated(const Rational& factor) const;

  friend bool operator==(const Polytope& a, const Polytope& b);

 private:
  std::size_t dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::vector<std::pair<int, int>> edges_;
  bool is_lattice_ = true;

  void build_faces();
};

/// A shared facet tau between maximal cones cone1 and cone2.
struct Wall {
  int cone1 = -1;
  int cone2 = -1;
  std::vector<int> rays;  ///< ray indices of tau
  int v0_in_cone2 = -1;   ///< first listed ray of cone2 outside cone1
  int v0_in_cone1 = -1;   ///< first listed ray of cone1 outside cone2
};

class Fan {
 public:
  Fan() = default;
  /// Rays are replaced by their primitive vectors; cones index into rays.
  Fan(std::vector<LatticeVector> rays, std::vector<std::vector<int>> maximal_cones);

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& maximal_cones() const { return cones_; }
  std::size_t num_cones() const { return cones_.size(); }
  const Cone& cone(std::size_t i) const { return cone_objects_.at(i); }
  std::vector<LatticeVector> cone_rays(std::size_t i) const;

  const std::vector<Wall>& walls() const { return walls_; }
  /// Every facet of every maximal cone is shared with exactly one other
  /// maximal cone, which for full-dimensional cones forces support = N_R.
  bool is_complete() const { return complete_; }
  bool all_top_dimensional() const { return top_dimensional_; }
  void require_complete() const;

  /// A maximal cone containing v, or -1.
  int cone_containing(const RationalVector& v) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<std::vector<int>> cones_;
  std::vector<Cone> cone_objects_;
  std::vector<Wall> walls_;
  bool complete_ = false;
  bool top_dimensional_ = false;
};

struct NormalFan {
  Fan fan;
  std::vector<int> cone_of_vertex;  ///< vertex i of P <-> maximal cone cone_of_vertex[i]
};

/// Min convention: the cone at vertex u is {v : <u, v> = min over P of <., v>}.
NormalFan normal_fan(const Polytope& p);

/// cone(P - u) for a vertex u, generated by the directions to all other vertices.
Cone cone_at_vertex(const Polytope& p, int vertex);

struct EdgeAtVertex {
  int edge = -1;   ///< index into Polytope::edges()
  int other = -1;  ///< opposite endpoint
};
std::vector<EdgeAtVertex> edges_at_vertex(const Polytope& p, int vertex);

struct FaceProjection {
  Polytope polytope;    ///< image of P in the quotient lattice
  int vertex = -1;      ///< index of the image of the face, a vertex of `polytope`
  IntegerMatrix map;    ///< quotient map M -> Z^(d - dim face)
};

/// Projects P along the linear span of the face's edge directions.
FaceProjection face_projection(const Polytope& p, std::span<const int> face_vertices);

/// P intersected with Z^d, in lexicographic order.
std::vector<LatticeVector> lattice_points(const Polytope& p);

}  // namespace toricjet

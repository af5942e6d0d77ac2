#include <functional>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "toricjet/polyhedral.hpp"

using namespace toricjet;

namespace {

std::set<LatticeVector> as_set(const std::vector<LatticeVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("dual cone") {
  std::vector<LatticeVector> orth = {lv({1, 0}), lv({0, 1})};
  Cone c(orth, 2);
  CHECK(as_set(dual_cone(c).rays()) == as_set(orth));
  std::vector<LatticeVector> g = {lv({1, 0}), lv({1, 2})};
  Cone q(g, 2);
  CHECK(as_set(dual_cone(q).rays()) == std::set<LatticeVector>{lv({0, 1}), lv({2, -1})});
  for (int n = 2; n <= 4; ++n) {
    std::vector<LatticeVector> gens;
    for (int i = 0; i < n - 1; ++i) gens.push_back(unit_lattice(n, i));
    LatticeVector a(n, Integer(1));
    a[n - 1] = 3;
    gens.push_back(a);
    Cone qq(gens, n);
    CHECK(as_set(dual_cone(dual_cone(qq)).rays()) == as_set(gens));
  }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 80; ++t) {
    std::size_t d = 2 + t % 3;
    std::vector<LatticeVector> gens;
    for (int i = 0; i < 5; ++i) {
      LatticeVector v = oracle::random_vector(rng, d, 4);
      v[0] = abs(v[0]) + 1;  // keep everything in the half-space x0 > 0
      gens.push_back(v);
    }
    Cone cone(gens, d);
    if (!cone.is_full_dimensional()) continue;
    REQUIRE(cone.is_pointed());
    Cone dual = dual_cone(cone);
    for (const auto& w : dual.rays())
      for (const auto& v : gens) CHECK(dot(w, v) >= 0);
    CHECK(as_set(dual_cone(dual).rays()) == as_set(cone.rays()));
    for (const auto& v : gens) CHECK(cone.contains(v));
  }
}

TEST_CASE("cone basics") {
  Cone line(std::vector<LatticeVector>{lv({1, 0}), lv({-1, 0})}, 2);
  CHECK_FALSE(line.is_pointed());
  CHECK(line.dim() == 1);
  CHECK(line.contains(lv({-5, 0})));
  CHECK_FALSE(line.contains(lv({0, 1})));
  Cone half(std::vector<LatticeVector>{lv({1, 0}), lv({-1, 0}), lv({0, 1})}, 2);
  CHECK_FALSE(half.is_pointed());
  CHECK(half.contains(lv({-3, 2})));
  CHECK_FALSE(half.contains(lv({0, -1})));
  Cone flat(std::vector<LatticeVector>{lv({1, 0, 0}), lv({1, 2, 0})}, 3);
  CHECK(flat.dim() == 2);
  CHECK(flat.multiplicity() == 2);
  CHECK(flat.contains(lv({2, 1, 0})));
  CHECK_FALSE(flat.contains(lv({0, 1, 0})));
  CHECK_FALSE(flat.contains(lv({1, 1, 1})));
  Cone redundant(std::vector<LatticeVector>{lv({1, 0}), lv({0, 1}), lv({1, 1}), lv({2, 2})}, 2);
  CHECK(as_set(redundant.rays()) == std::set<LatticeVector>{lv({1, 0}), lv({0, 1})});
  CHECK(redundant.is_smooth());
}

TEST_CASE("normal fan") {
  auto square = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({1, 0}), lv({0, 1}), lv({1, 1})});
  auto nf = normal_fan(square);
  CHECK(nf.fan.num_cones() == 4);
  CHECK(nf.fan.is_complete());
  CHECK(as_set(nf.fan.rays()) == std::set<LatticeVector>{lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})});
  CHECK(nf.fan.walls().size() == 4);

  auto simplex = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({1, 0}), lv({0, 1})});
  auto sf = normal_fan(simplex);
  CHECK(as_set(sf.fan.rays()) == std::set<LatticeVector>{lv({1, 0}), lv({0, 1}), lv({-1, -1})});
  // the cone at vertex 0 is the positive quadrant
  int v0 = simplex.vertex_index(rv({0, 0}));
  CHECK(as_set(sf.fan.cone_rays(sf.cone_of_vertex[v0])) == std::set<LatticeVector>{lv({1, 0}), lv({0, 1})});

  auto line = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0}), lv({3})});
  CHECK(normal_fan(line).fan.is_complete());

  CHECK_THROWS_AS(Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({1, 1}), lv({2, 2})}), Error);

  // example31 with n = 3, r = 2: the vertex-0 cone has dual cone(e1, e2, a)
  auto p31 = Polytope::from_lattice_points(
      std::vector<LatticeVector>{lv({0, 0, 0}), lv({1, 0, 0}), lv({0, 1, 0}), lv({1, 1, 2})});
  auto f31 = normal_fan(p31);
  int z = p31.vertex_index(rv({0, 0, 0}));
  Cone dual = dual_cone(f31.fan.cone(f31.cone_of_vertex[z]));
  CHECK(as_set(dual.rays()) == std::set<LatticeVector>{lv({1, 0, 0}), lv({0, 1, 0}), lv({1, 1, 2})});
  CHECK(f31.fan.is_complete());
}

TEST_CASE("non-complete fan") {
  Fan f({lv({1, 0}), lv({0, 1}), lv({-1, 0})}, {{0, 1}, {1, 2}});
  CHECK_FALSE(f.is_complete());
  CHECK(f.walls().size() == 1);
  Fan p2({lv({1, 0}), lv({0, 1}), lv({-1, -1})}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(p2.is_complete());
  CHECK(p2.walls().size() == 3);
}

TEST_CASE("cone at vertex and edges") {
  auto square = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({1, 0}), lv({0, 1}), lv({1, 1})});
  int o = square.vertex_index(rv({0, 0}));
  CHECK(as_set(cone_at_vertex(square, o).rays()) == std::set<LatticeVector>{lv({1, 0}), lv({0, 1})});
  auto edges = edges_at_vertex(square, o);
  CHECK(edges.size() == 2);
  std::set<RationalVector> others;
  for (auto& e : edges) others.insert(square.vertices()[e.other]);
  CHECK(others == std::set<RationalVector>{rv({1, 0}), rv({0, 1})});

  auto tri = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({2, 0}), lv({1, 2})});
  CHECK(as_set(cone_at_vertex(tri, tri.vertex_index(rv({0, 0}))).rays()) ==
        std::set<LatticeVector>{lv({1, 0}), lv({1, 2})});

  auto tet = Polytope::from_lattice_points(
      std::vector<LatticeVector>{lv({0, 0, 0}), lv({1, 0, 0}), lv({0, 1, 0}), lv({0, 0, 1})});
  CHECK(edges_at_vertex(tet, 0).size() == 3);
  CHECK(tet.faces().size() == 15);

  auto p31 = Polytope::from_lattice_points(
      std::vector<LatticeVector>{lv({0, 0, 0}), lv({1, 0, 0}), lv({0, 1, 0}), lv({1, 1, 2})});
  std::set<RationalVector> nbrs;
  for (auto& e : edges_at_vertex(p31, p31.vertex_index(rv({0, 0, 0})))) nbrs.insert(p31.vertices()[e.other]);
  CHECK(nbrs == std::set<RationalVector>{rv({1, 0, 0}), rv({0, 1, 0}), rv({1, 1, 2})});
}

TEST_CASE("face projection") {
  auto square = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({1, 0}), lv({0, 1}), lv({1, 1})});
  int a = square.vertex_index(rv({0, 0})), b = square.vertex_index(rv({1, 0}));
  std::vector<int> vert = {a};
  auto fv = face_projection(square, vert);
  CHECK(fv.polytope == square);
  std::vector<int> edge = {a, b};
  auto fe = face_projection(square, edge);
  CHECK(fe.polytope.ambient_dim() == 1);
  CHECK(fe.polytope.vertices().size() == 2);
  CHECK(lattice_length(fe.polytope.vertices()[0], fe.polytope.vertices()[1]) == 1);
  std::vector<int> all = {0, 1, 2, 3};
  auto fp = face_projection(square, all);
  CHECK(fp.polytope.ambient_dim() == 0);
  std::vector<int> diag = {a, square.vertex_index(rv({1, 1}))};
  CHECK_THROWS_AS(face_projection(square, diag), Error);
}

TEST_CASE("lattice points") {
  auto square = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({1, 0}), lv({0, 1}), lv({1, 1})});
  CHECK(lattice_points(square).size() == 4);
  auto s2 = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({2, 0}), lv({0, 2})});
  CHECK(lattice_points(s2).size() == 6);
  auto t = Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({1, 0}), lv({1, 2})});
  CHECK(lattice_points(t) == std::vector<LatticeVector>{lv({0, 0}), lv({1, 0}), lv({1, 1}), lv({1, 2})});
}

TEST_CASE("polytope properties on random samples") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 40; ++t) {
    std::size_t d = 2 + t % 2;
    Polytope p = oracle::random_polytope(rng, d, 4);
    auto nf = normal_fan(p);
    REQUIRE(nf.fan.is_complete());
    // vertices are irredundant: removing any changes the polytope
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      std::vector<RationalVector> rest;
      for (std::size_t j = 0; j < p.vertices().size(); ++j)
        if (j != i) rest.push_back(p.vertices()[j]);
      bool same = false;
      try {
        same = Polytope::from_points(rest) == p;
      } catch (const Error&) {
      }
      CHECK_FALSE(same);
    }
    for (std::size_t v = 0; v < p.vertices().size(); ++v) {
      CHECK(edges_at_vertex(p, static_cast<int>(v)).size() >= d);
      Cone c = cone_at_vertex(p, static_cast<int>(v));
      CHECK(as_set(c.rays()) == as_set(dual_cone(nf.fan.cone(nf.cone_of_vertex[v])).rays()));
    }
    // random directions: the containing cone's vertex minimizes
    for (int s = 0; s < 10; ++s) {
      RationalVector dir = to_rational(oracle::random_vector(rng, d, 7));
      int c = nf.fan.cone_containing(dir);
      REQUIRE(c >= 0);
      Rational best = dot(p.vertices()[0], dir);
      for (auto& v : p.vertices()) best = std::min(best, dot(v, dir));
      CHECK(dot(p.vertices()[c], dir) == best);
    }
    // lattice points against a box scan using vertex hull membership by LP-free test:
    // a point is inside iff adding it does not change the hull
    auto pts = lattice_points(p);
    std::size_t brute = 0;
    LatticeVector x(d, Integer(0));
    std::function<void(std::size_t)> scan = [&](std::size_t k) {
      if (k == d) {
        std::vector<RationalVector> ext = p.vertices();
        ext.push_back(to_rational(x));
        if (Polytope::from_points(ext) == p) ++brute;
        return;
      }
      for (long c = 0; c <= 4; ++c) {
        x[k] = c;
        scan(k + 1);
      }
    };
    scan(0);
    CHECK(pts.size() == brute);
  }
}

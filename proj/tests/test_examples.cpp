#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "toricjet/examples.hpp"
#include "toricjet/jets.hpp"

using namespace toricjet;

namespace {

std::multiset<Rational> edge_multiset(const Polytope& p) {
  std::multiset<Rational> out;
  for (auto [a, b] : p.edges()) out.insert(lattice_length(p.vertices()[a], p.vertices()[b]));
  return out;
}

}  // namespace

TEST_CASE("example31 family") {
  auto ex = example_3_1(3, 2, 1);
  CHECK(ex.polytope.vertices().size() == 4);
  CHECK(ex.polytope.vertex_index(rv({1, 1, 2})) >= 0);
  CHECK(ex.g == ex.d);
  CHECK(ex.d.u(ex.vertex0_cone) == lv({0, 0, 0}));
  // vertex-0 dual cone is cone(e1, ..., e_{n-1}, a)
  auto q = DualConeData::dual_of(ex.d.fan().cone(ex.vertex0_cone));
  std::set<LatticeVector> rays(q.rays().begin(), q.rays().end());
  CHECK(rays == std::set<LatticeVector>{lv({1, 0, 0}), lv({0, 1, 0}), lv({1, 1, 2})});

  auto two = example_3_1(2, 1, 2);
  CHECK(two.polytope.vertices().size() == 3);
  CHECK(two.g == two.d);

  auto four = example_3_1(4, 3, 1);
  CHECK(four.polytope.vertices().size() == 5);
  CHECK(four.g == four.d.scaled(2));

  CHECK_THROWS_AS(example_3_1(1, 2, 1), Error);
  CHECK_THROWS_AS(example_3_1(3, 1, 1), Error);
  CHECK_THROWS_AS(example_3_1(3, 2, 0), Error);

  for (long n = 2; n <= 4; ++n)
    for (long r = std::max(1L, n - 1); r <= n + 3; ++r) {
      auto e = example_3_1(n, r, 1);
      auto dq = DualConeData::dual_of(e.d.fan().cone(e.vertex0_cone));
      CHECK(gamma_q(dq) == Rational(n - 2) - Rational(n - 2) / Rational(r));
    }
}

TEST_CASE("weighted projective spaces") {
  auto p2 = weighted_projective({1, 1, 1});
  CHECK(p2.l == 1);
  CHECK(edge_multiset(p2.polytope) == std::multiset<Rational>{1, 1, 1});
  REQUIRE(p2.polytope.vertices().size() == 3);
  const auto& pv = p2.polytope.vertices();
  CHECK(oracle::abs_det({to_lattice(pv[1] - pv[0]), to_lattice(pv[2] - pv[0])}) == 1);

  auto w = weighted_projective({2, 3, 5});
  CHECK(w.l == 30);
  CHECK(w.h == 15);
  CHECK(edge_multiset(w.polytope) == std::multiset<Rational>{2, 3, 5});
  CHECK(max_certified_k(TCartierDivisor::from_polytope(w.polytope)).value == 2);

  auto v = weighted_projective({1, 1, 2});
  CHECK(v.l == 2);
  CHECK(v.h == 2);
  CHECK(edge_multiset(v.polytope) == std::multiset<Rational>{1, 1, 2});
  CHECK(max_certified_k(TCartierDivisor::from_polytope(v.polytope)).value == 1);

  CHECK_THROWS_AS(weighted_projective({2, 4, 6}), Error);
  CHECK_THROWS_AS(weighted_projective({2, 2, 1}), Error);
  CHECK_THROWS_AS(weighted_projective({1, 1}), Error);
  try {
    weighted_projective({3, 6, 1, 9});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("3,6,9") != std::string::npos);
  }

  // per-edge formula on random reduced weights
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> dist(1, 7);
  int done = 0;
  while (done < 10) {
    std::size_t m = 3 + done % 2;
    std::vector<Integer> a(m);
    for (auto& x : a) x = dist(rng);
    try {
      auto wp = weighted_projective(a);
      const auto& p = wp.polytope;
      REQUIRE(p.vertices().size() == m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          // vertex i is the image of (l/a_i) e_i
          Rational len = lattice_length(p.vertices()[i], p.vertices()[j]);
          CHECK(len == Rational(wp.l / lcm(a[i], a[j])));
        }
      // same lengths in another basis
      auto u = oracle::random_unimodular(rng, m - 1);
      std::vector<LatticeVector> moved;
      for (const auto& x : p.vertices()) moved.push_back(oracle::apply(u, to_lattice(x)));
      CHECK(edge_multiset(Polytope::from_lattice_points(moved)) == edge_multiset(p));
      ++done;
    } catch (const Error&) {
    }
  }
}

TEST_CASE("standard polytopes") {
  auto s = simplex(2, 3);
  CHECK(s == Polytope::from_lattice_points(std::vector<LatticeVector>{lv({0, 0}), lv({3, 0}), lv({0, 3})}));
  auto c = cube({3, 2});
  CHECK(c.vertices().size() == 4);
  CHECK(c.vertex_index(rv({3, 2})) >= 0);
  CHECK(cube({1, 1, 1}).vertices().size() == 8);
  auto h = hirzebruch(1, 2, 3);
  auto d = TCartierDivisor::from_polytope(h);
  CHECK(d.is_ample());
  for (std::size_t w = 0; w < d.fan().walls().size(); ++w) CHECK(intersection_number(d, w) > 0);
  std::set<LatticeVector> rays(d.fan().rays().begin(), d.fan().rays().end());
  CHECK(rays == std::set<LatticeVector>{lv({1, 0}), lv({0, 1}), lv({0, -1}), lv({-1, -1})});
  CHECK_THROWS_AS(simplex(0, 1), Error);
  CHECK_THROWS_AS(cube({0, 1}), Error);
  CHECK_THROWS_AS(hirzebruch(1, 0, 1), Error);
}

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "toricjet/examples.hpp"
#include "toricjet/jets.hpp"
#include "toricjet/lattice.hpp"

using namespace toricjet;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  double t = seconds_since(t0);
  if (limit > 0 && t > limit) {
    std::ostringstream why;
    why << "runtime " << t << " s exceeds " << limit << " s";
    out.fail(why.str());
  }
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << name << "  ["
            << std::fixed << std::setprecision(2) << t << " s]  " << out.detail.str() << std::endl;
}

// Random full-dimensional lattice polytopes with at most max_points lattice points.
std::vector<Polytope> polytope_corpus(std::mt19937_64& rng, int count) {
  std::vector<Polytope> out;
  while (static_cast<int>(out.size()) < count) {
    std::size_t d = 2 + out.size() % 2;
    Polytope p = oracle::random_polytope(rng, d, d == 2 ? 5 : 3);
    if (lattice_points(p).size() <= 60) out.push_back(std::move(p));
  }
  return out;
}

TCartierDivisor polygon(std::vector<LatticeVector> pts) {
  return TCartierDivisor::from_polytope(Polytope::from_lattice_points(pts));
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  auto corpus = polytope_corpus(rng, 100);

  criterion(1, "Gamma regression on the example31 family", 0, [](Outcome& o) {
    const std::vector<std::pair<long, long>> grid{{2, 1}, {3, 2}, {3, 5}, {4, 3}, {4, 6}};
    for (auto [n, r] : grid) {
      auto t0 = Clock::now();
      auto ex = example_3_1(n, r, 1);
      Rational g = gamma_q(DualConeData::dual_of(ex.d.fan().cone(ex.vertex0_cone)));
      double t = seconds_since(t0);
      Rational want = Rational(n - 2) - Rational(n - 2) / Rational(r);
      o.detail << "(" << n << "," << r << ")=" << to_string(g) << " ";
      if (g != want) o.fail("(" + std::to_string(n) + "," + std::to_string(r) + ") gave " + to_string(g));
      if (t >= 1.0) o.fail("(" + std::to_string(n) + "," + std::to_string(r) + ") took over 1 s");
    }
  });

  criterion(2, "Smooth baseline Gamma_X = 0", 0, [](Outcome& o) {
    const std::vector<std::pair<std::string, Polytope>> cases{{"P2", simplex(2, 1)},
                                                              {"P1xP1", cube({1, 1})},
                                                              {"P3", simplex(3, 1)},
                                                              {"F1", hirzebruch(1, 1, 1)}};
    for (const auto& [name, p] : cases) {
      Rational g = gamma_x(normal_fan(p).fan);
      if (g != 0) o.fail(name + " gave " + to_string(g));
    }
    o.detail << "P2, P1xP1, P3, F1 all 0";
  });

  criterion(3, "0 <= Gamma_Q <= n-2 on random cones", 0, [&](Outcome& o) {
    int count = 0;
    Rational worst[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 210; ++i) {
      std::size_t d = 2 + i % 3;
      std::uniform_int_distribution<std::size_t> m(d, d + 2);
      Cone c = oracle::random_pointed_cone(rng, d, m(rng), 8);
      Rational g = gamma_q(DualConeData(c));
      ++count;
      worst[d] = std::max(worst[d], g);
      if (g < 0 || g > Rational(static_cast<long>(d) - 2)) o.fail("Gamma out of range in dim " + std::to_string(d));
      if (d == 2 && g != 0) o.fail("dim-2 cone with Gamma " + to_string(g));
    }
    o.detail << count << " cones; max Gamma by dim: 2:" << to_string(worst[2]) << " 3:" << to_string(worst[3])
             << " 4:" << to_string(worst[4]);
  });

  criterion(4, "Quadruple equivalence on random polytopes", 60, [&](Outcome& o) {
    for (const auto& p : corpus) {
      auto d = TCartierDivisor::from_polytope(p);
      Rational min_int = -1;
      for (std::size_t w = 0; w < d.fan().walls().size(); ++w) {
        Rational x = intersection_number(d, w);
        if (min_int < 0 || x < min_int) min_int = x;
      }
      Rational min_edge = -1;
      for (auto [a, b] : p.edges()) {
        Rational l = lattice_length(p.vertices()[a], p.vertices()[b]);
        if (min_edge < 0 || l < min_edge) min_edge = l;
      }
      Rational conc = max_concavity(d);
      Rational sesh(seshadri_global(d));
      if (!(min_int == min_edge && min_edge == conc && conc == sesh))
        o.fail("mismatch " + to_string(min_int) + "/" + to_string(min_edge) + "/" + to_string(conc) + "/" +
               to_string(sesh));
    }
    o.detail << corpus.size() << " polytopes";
  });

  criterion(5, "Certificate soundness against the oracle", 600, [&](Outcome& o) {
    int certified = 0, oracle_only = 0, counterexamples = 0;
    for (const auto& p : corpus) {
      auto d = TCartierDivisor::from_polytope(p);
      ConeCache cache(d.fan());
      for (long k = 0; k <= 3; ++k) {
        bool cert = certify(d, k, cache).certified;
        if (!cert) continue;
        ++certified;
        if (!oracle_jet_ample(d, k, k + 1, cache).ample) ++counterexamples;
      }
      for (long k = 0; k <= 1; ++k)
        if (!certify(d, k, cache).certified && oracle_jet_ample(d, k, k + 1, cache).ample) ++oracle_only;
    }
    if (counterexamples) o.fail(std::to_string(counterexamples) + " counterexamples");
    o.detail << certified << " certified instances confirmed; " << oracle_only
             << " instances (k <= 1) jet ample without a certificate";
  });

  criterion(6, "Sharpness of example31 at (n,r) = (3,10)", 60, [](Outcome& o) {
    const long n = 3, r = 10;
    for (long k = 1; k <= 2; ++k) {
      auto ex = example_3_1(n, r, k);
      ConeCache cache(ex.d.fan());
      auto res = oracle_jet_ample(ex.g, k, k + 1, cache);
      LatticeVector u = Integer(k - 1) * unit_lattice(n, 0) + lv({1, 1, 1});
      if (res.ample) {
        o.fail("(k+n-3)D reported k-jet ample for k=" + std::to_string(k));
        continue;
      }
      const auto& f = *res.failure;
      bool at_vertex0 = f.config == Configuration{{ex.vertex0_cone, k + 1}};
      bool has_u = false;
      for (const auto& [i, e] : f.unreachable) has_u = has_u || (i == 0 && e == u);
      if (!at_vertex0) o.fail("failing configuration is not the vertex-0 point");
      if (!has_u) o.fail("witness " + to_string(u) + " not reported");
      if (ex.g.polytope().contains(ex.g.u(ex.vertex0_cone) + u)) o.fail("witness section lies in P_G");
      auto bigger = ex.d.scaled(k + n - 2);
      if (!certify(bigger, k, cache).certified) o.fail("(k+n-2)D not certified for k=" + std::to_string(k));
      if (!oracle_jet_ample(bigger, k, k + 1, cache).ample)
        o.fail("oracle rejects (k+n-2)D for k=" + std::to_string(k));
      o.detail << "k=" << k << ": witness " << to_string(u) << " ";
    }
  });

  criterion(7, "Weighted projective spaces", 0, [](Outcome& o) {
    auto check = [&](std::vector<Integer> w, std::set<Rational> edges, long k) {
      auto wp = weighted_projective(w);
      std::set<Rational> got;
      for (auto [a, b] : wp.polytope.edges())
        got.insert(lattice_length(wp.polytope.vertices()[a], wp.polytope.vertices()[b]));
      Integer mk = max_certified_k(TCartierDivisor::from_polytope(wp.polytope)).value;
      std::ostringstream s;
      s << "(";
      for (std::size_t i = 0; i < w.size(); ++i) s << (i ? "," : "") << w[i];
      s << ") edges {";
      for (auto it = got.begin(); it != got.end(); ++it) s << (it == got.begin() ? "" : ",") << to_string(*it);
      s << "} max-k " << mk << " ";
      o.detail << s.str();
      if (got != edges) o.fail("edge lengths " + s.str());
      if (mk != k) o.fail("max certified k " + s.str());
    };
    check({2, 3, 5}, {5, 3, 2}, 2);
    check({1, 1, 2}, {2, 1}, 1);
  });

  criterion(8, "Fujita pipeline", 300, [](Outcome& o) {
    struct Instance {
      std::string name;
      TCartierDivisor d;
      long k;
    };
    std::vector<Instance> cases;
    for (long k = 0; k <= 2; ++k) {
      for (long b : {2 + k, 3 + k}) {
        // blow-up of P^2 at a point: edges a - b, a - b, a, b
        long a = 2 * b + (b - 2 - k);
        cases.push_back({"blowup(" + std::to_string(a) + "," + std::to_string(b) + ")",
                         polygon({lv({b, 0}), lv({a, 0}), lv({0, a}), lv({0, b})}), k});
        // P(1,1,2): edges m, m, 2m
        cases.push_back({"P(1,1,2) m=" + std::to_string(b), polygon({lv({0, 0}), lv({2 * b, 0}), lv({0, b})}), k});
      }
      for (long r : {2L, 3L}) {
        auto ex = example_3_1(3, r, 1);
        cases.push_back({"ex31 r=" + std::to_string(r) + " m=" + std::to_string(3 + k), ex.d.scaled(3 + k), k});
      }
    }
    int run = 0, skipped = 0, boundary = 0;
    for (const auto& c : cases) {
      const Fan& fan = c.d.fan();
      std::vector<TQDivisor> dprimes{TQDivisor{fan, std::vector<Rational>(fan.rays().size(), Rational(0))},
                                     canonical_divisor(fan)};
      for (std::size_t which = 0; which < dprimes.size(); ++which) {
        auto v = fujita_check(to_q_divisor(c.d), dprimes[which], c.k, true);
        std::string tag = c.name + (which ? " +K" : " +0") + " k=" + std::to_string(c.k);
        if (which == 1 && (!v.dprime_in_range || !v.cartier)) {
          ++skipped;
          continue;
        }
        ++run;
        if (!v.hypotheses_hold) o.fail(tag + ": hypotheses fail");
        else if (!v.certificate) {
          // D + D' nef but not ample: only the evaluation-map check applies
          if (!v.sum || v.sum->is_ample() || !v.oracle || !*v.oracle) o.fail(tag + ": " + v.note);
          --run;
          ++boundary;
        }
        else if (!v.certificate->certified) o.fail(tag + ": certify rejects D+D'");
        else if (!v.oracle || !*v.oracle) o.fail(tag + ": oracle rejects D+D'");
      }
    }
    if (run < 20) o.fail("only " + std::to_string(run) + " instances");
    o.detail << run << " instances confirmed by certify and oracle, " << boundary
             << " nef non-ample sums confirmed by oracle, " << skipped << " K_X choices not Cartier";
  });

  criterion(9, "Payne bound and interior weight inequality", 0, [&](Outcome& o) {
    int payne = 0, interior = 0, payne_bad = 0, interior_bad = 0;
    std::vector<TCartierDivisor> divisors;
    for (int i = 0; i < 40; ++i)
      divisors.push_back(TCartierDivisor::from_polytope(oracle::random_polytope(rng, 2, 5)).scaled(1 + i % 3));
    for (long r : {2L, 3L, 5L}) divisors.push_back(example_3_1(3, r, 1).d.scaled(4));
    for (const auto& d : divisors) {
      const Fan& fan = d.fan();
      std::vector<TQDivisor> dprimes{canonical_divisor(fan)};
      std::vector<Rational> half(fan.rays().size());
      for (auto& x : half) x = Rational(-static_cast<long>(rng() % 3)) / Rational(2);
      dprimes.push_back(TQDivisor{fan, half});
      for (const auto& dp : dprimes) {
        auto local = q_cartier_local_data(dp);
        if (!local) continue;
        for (std::size_t c = 0; c < fan.num_cones(); ++c) {
          bool ok;
          try {
            ok = payne_bound_check(to_q_divisor(d), dp, c);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::Precondition) throw;
            continue;
          }
          ++payne;
          if (!ok) ++payne_bad;
          auto q = DualConeData::dual_of(fan.cone(c));
          std::vector<LatticeVector> samples;
          while (samples.size() < 20) {
            LatticeVector u = oracle::random_vector(rng, fan.dim(), 8);
            if (q.cone().contains_in_interior(u)) samples.push_back(u);
          }
          ++interior;
          if (!interior_weight_check(q, (*local)[c], samples)) ++interior_bad;
        }
      }
    }
    if (payne < 50 || interior < 50) o.fail("too few valid instances");
    if (payne_bad) o.fail(std::to_string(payne_bad) + " Payne violations");
    if (interior_bad) o.fail(std::to_string(interior_bad) + " interior weight violations");
    o.detail << payne << " Payne instances, " << interior << " interior-weight instances (20 samples each)";
  });

  criterion(10, "Seshadri projection monotonicity", 0, [&](Outcome& o) {
    int pairs = 0, bad = 0;
    for (int i = 0; i < 50; ++i) {
      Polytope p = oracle::random_polytope(rng, 3, 4);
      for (const auto& a : p.faces())
        for (const auto& b : p.faces()) {
          if (a.dim > 1 || b.dim != a.dim + 1) continue;
          if (!std::includes(b.vertices.begin(), b.vertices.end(), a.vertices.begin(), a.vertices.end())) continue;
          ++pairs;
          if (!projection_monotonicity_check(p, a.vertices, b.vertices)) ++bad;
        }
    }
    if (bad) o.fail(std::to_string(bad) + " violations");
    o.detail << pairs << " incident face pairs on 50 polytopes";
  });

  criterion(11, "Duality/multiplicity identity", 0, [&](Outcome& o) {
    int cones = 0;
    while (cones < 120) {
      std::size_t d = 2 + cones % 3;
      std::vector<LatticeVector> gens;
      for (std::size_t i = 0; i < d; ++i) gens.push_back(oracle::random_vector(rng, d, 6));
      if (oracle::det(gens) == 0) continue;
      Cone sigma(gens, d);
      const auto& v = sigma.rays();
      Cone dual = dual_cone(sigma);
      for (std::size_t i = 0; i < d; ++i) {
        const LatticeVector* wi = nullptr;
        for (const auto& w : dual.rays()) {
          bool ok = true;
          for (std::size_t j = 0; j < d; ++j)
            if (j != i && dot(w, v[j]) != 0) ok = false;
          if (ok) wi = &w;
        }
        if (!wi) {
          o.fail("no dual ray for a facet");
          continue;
        }
        std::vector<LatticeVector> rest;
        for (std::size_t j = 0; j < d; ++j)
          if (j != i) rest.push_back(v[j]);
        Rational lhs(dot(v[i], *wi));
        Rational rhs = Rational(multiplicity(v)) / Rational(multiplicity(rest));
        if (lhs != rhs) o.fail("identity fails: " + to_string(lhs) + " vs " + to_string(rhs));
      }
      ++cones;
    }
    o.detail << cones << " simplicial cones in dims 2-4";
  });

  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << failures << " failing)" << std::endl;
  return failures ? 1 : 0;
}

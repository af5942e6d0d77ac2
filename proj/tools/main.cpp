// Command-line front end. Reports go to stdout; stderr carries diagnostics only.
// Exit codes: 0 success / certified, 1 negative verdict, 2 input or usage error.

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toricjet/examples.hpp"
#include "toricjet/io.hpp"

using namespace toricjet;

namespace {

struct Options {
  std::string format = "text";
  std::string in = "-";
  std::string cone_file;
  long k = 0;
  long max_r = -1;
  std::string dprime;
  bool no_oracle = false;
  long n = 0, r = 0, m = 1, dim = 2, a = 1, b = 1, c = 1;
  std::string weights, sides;
};

struct Failure {
  int code;
};

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Input, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Input, std::string("malformed JSON: ") + e.what());
  }
}

std::vector<long> parse_list(const std::string& s, const char* what) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      long v = std::stol(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Input, std::string("malformed ") + what + " list '" + s + "'");
    }
  }
  if (out.empty()) throw Error(ErrorKind::Input, std::string("empty ") + what + " list");
  return out;
}

std::string str(const Rational& q) { return to_string(q); }
std::string str(const Integer& z) { return to_string(z); }

class Runner {
 public:
  explicit Runner(Options& o) : o_(o) {}

  int emit(Json report, const std::function<void(std::ostream&)>& text, int code = 0) {
    if (o_.format == "json") std::cout << report.dump(2) << "\n";
    else text(std::cout);
    return code;
  }

  InputDocument input() { return parse_input(read_json(o_.in)); }

  Json head(const char* command, const InputDocument& doc) {
    Json j = Json::object();
    j["command"] = command;
    j["input"] = to_json(doc);
    return j;
  }

  int gamma_q_cmd() {
    if (o_.cone_file.empty()) throw Error(ErrorKind::Input, "--cone is required");
    Cone c = parse_cone(read_json(o_.cone_file));
    if (!c.is_full_dimensional() || !c.is_pointed())
      throw Error(ErrorKind::Precondition, "Γ_Q needs a pointed full-dimensional cone");
    DualConeData q(c);
    GammaResult g = gamma_q_detailed(q);
    Json rays = Json::array();
    for (const auto& r : q.rays()) rays.push_back(vector_json(r));
    Json j = {{"command", "gamma-q"},
              {"cone", {{"rays", rays}}},
              {"gamma", rational_json(g.gamma)},
              {"argmax", vector_json(g.argmax)},
              {"box_size", g.box_size}};
    return emit(j, [&](std::ostream& os) {
      os << "Gamma_Q = " << str(g.gamma) << "\n";
      os << "attained at " << to_string(g.argmax) << " (" << g.box_size << " box points)\n";
    });
  }

  int gamma_x_cmd() {
    InputDocument doc = input();
    Fan fan = document_fan(doc);
    ConeCache cache(fan);
    Json j = head("gamma-x", doc);
    Json cones = Json::array();
    for (std::size_t c = 0; c < fan.num_cones(); ++c) {
      if (!fan.cone(c).is_full_dimensional())
        throw Error(ErrorKind::NotFullDimensional, "maximal cone " + std::to_string(c) + " is not top-dimensional");
      Json rays = Json::array();
      for (int r : fan.maximal_cones()[c]) rays.push_back(r);
      cones.push_back({{"cone", c}, {"rays", rays}, {"gamma", rational_json(cache.gamma(c))}});
    }
    Rational gx = cache.gamma_x();
    j["gamma_x"] = rational_json(gx);
    j["cones"] = cones;
    return emit(j, [&](std::ostream& os) {
      os << std::left << std::setw(6) << "cone" << "gamma\n";
      for (std::size_t c = 0; c < fan.num_cones(); ++c) os << std::setw(6) << c << str(cache.gamma(c)) << "\n";
      os << "Gamma_X = " << str(gx) << "\n";
    });
  }

  int certify_cmd() {
    InputDocument doc = input();
    TCartierDivisor d = document_divisor(doc);
    JetCertificate cert = certify(d, o_.k);
    Json j = head("certify", doc);
    j["certificate"] = certificate_json(cert);
    return emit(
        j,
        [&](std::ostream& os) {
          os << std::left << std::setw(6) << "cone" << std::setw(10) << "L" << std::setw(10) << "Gamma"
             << "slack\n";
          for (const auto& r : cert.rows)
            os << std::setw(6) << r.cone << std::setw(10) << str(r.L) << std::setw(10) << str(r.gamma) << str(r.slack)
               << "\n";
          os << (cert.certified ? "certified" : "not certified") << ": " << o_.k << "-jet ampleness\n";
        },
        cert.certified ? 0 : 1);
  }

  int max_k_cmd() {
    InputDocument doc = input();
    TCartierDivisor d = document_divisor(doc);
    MaxK mk = max_certified_k(d);
    Json j = head("max-k", doc);
    j.update(max_k_json(mk));
    return emit(j, [&](std::ostream& os) {
      for (std::size_t c = 0; c < mk.per_cone.size(); ++c) os << "cone " << c << ": " << str(mk.per_cone[c]) << "\n";
      os << "global bound: " << str(mk.global) << "\n";
      os << "max certified k: " << str(mk.value) << "\n";
    });
  }

  int oracle_cmd() {
    InputDocument doc = input();
    TCartierDivisor d = document_divisor(doc);
    long max_r = o_.max_r < 0 ? o_.k + 1 : o_.max_r;
    JetAmpleResult res = oracle_jet_ample(d, o_.k, max_r);
    Json j = head("oracle", doc);
    j["result"] = jet_ample_json(res, o_.k, max_r);
    return emit(
        j,
        [&](std::ostream& os) {
          os << res.configurations << " configurations checked\n";
          if (res.failure) {
            const auto& f = *res.failure;
            os << "failing configuration:";
            for (const auto& p : f.config) os << " (cone " << p.cone << ", k " << p.mult << ")";
            os << "\n";
            if (f.witness == WitnessKind::Unreachable)
              os << "unreachable exponent " << to_string(f.exponent_a) << " at point " << f.part_a << ": section "
                 << to_string(f.section) << " is outside P_D\n";
            else
              os << "exponents " << to_string(f.exponent_a) << " (point " << f.part_a << ") and "
                 << to_string(f.exponent_b) << " (point " << f.part_b << ") share section " << to_string(f.section)
                 << "\n";
          }
          os << (res.ample ? "" : "not ") << o_.k << "-jet ample (configurations with up to " << max_r
             << " points)\n";
        },
        res.ample ? 0 : 1);
  }

  int intersections_cmd() {
    InputDocument doc = input();
    TCartierDivisor d = document_divisor(doc);
    EdgeReport rep = edge_lengths(d);
    Json j = head("intersections", doc);
    j.update(edge_report_json(rep, d));
    return emit(j, [&](std::ostream& os) {
      const auto& v = d.polytope().vertices();
      for (const auto& e : rep.edges)
        os << to_string(v[e.vertex_a]) << " -- " << to_string(v[e.vertex_b]) << "  length " << str(e.length)
           << "  wall " << e.wall << "  D.V(tau) " << str(e.intersection) << "\n";
      os << (rep.consistent ? "lengths match intersection numbers\n" : "MISMATCH between lengths and intersections\n");
    });
  }

  int seshadri_cmd() {
    InputDocument doc = input();
    TCartierDivisor d = document_divisor(doc);
    Json pts = Json::array();
    std::vector<Integer> vals;
    for (std::size_t c = 0; c < d.fan().num_cones(); ++c) {
      vals.push_back(seshadri_invariant_point(d, c));
      pts.push_back({{"cone", c}, {"vertex", vector_json(d.u(c))}, {"seshadri", integer_json(vals.back())}});
    }
    Integer g = seshadri_global(d);
    Json j = head("seshadri", doc);
    j["fixed_points"] = pts;
    j["global"] = integer_json(g);
    return emit(j, [&](std::ostream& os) {
      for (std::size_t c = 0; c < vals.size(); ++c)
        os << "cone " << c << " at " << to_string(d.u(c)) << ": " << str(vals[c]) << "\n";
      os << "global: " << str(g) << "\n";
    });
  }

  int concavity_cmd() {
    InputDocument doc = input();
    TCartierDivisor d = document_divisor(doc);
    Rational mc = max_concavity(d);
    Json j = head("concavity", doc);
    j["max_concavity"] = rational_json(mc);
    return emit(j, [&](std::ostream& os) {
      os << "max concavity: " << str(mc) << (mc < 0 ? " (not concave)" : "") << "\n";
    });
  }

  int fujita_cmd() {
    InputDocument doc = input();
    TQDivisor d = document_q_divisor(doc);
    TQDivisor dp;
    if (o_.dprime == "canonical") {
      dp = canonical_divisor(d.fan);
      doc.dprime = dp.coefficients;
    } else if (!o_.dprime.empty()) {
      throw Error(ErrorKind::Input, "--dprime accepts only 'canonical'");
    } else if (doc.dprime) {
      if (doc.dprime->size() != d.fan.rays().size())
        throw Error(ErrorKind::Input, "dprime.coefficients: expected one per ray");
      dp = TQDivisor{d.fan, *doc.dprime};
    } else {
      throw Error(ErrorKind::Input, "fujita needs \"dprime\" in the input or --dprime canonical");
    }
    FujitaVerdict v = fujita_check(d, dp, o_.k, !o_.no_oracle);
    bool ok = v.hypotheses_hold && (!v.certificate || v.certificate->certified) && v.oracle.value_or(true);
    Json j = head("fujita", doc);
    j["verdict"] = fujita_json(v, o_.k);
    return emit(
        j,
        [&](std::ostream& os) {
          auto yn = [](bool b) { return b ? "pass" : "fail"; };
          os << "H1 X is not P^n:            " << yn(v.not_projective_space) << "\n";
          os << "H2 0 >= D' >= K_X:          " << yn(v.dprime_in_range) << "\n";
          os << "H3 Q-Cartier, D+D' Cartier: " << yn(v.cartier) << "\n";
          os << "H4 D.C >= n+k on walls:     " << yn(v.intersections) << "\n";
          if (v.certificate) os << "certify(D+D', k): " << (v.certificate->certified ? "certified" : "not certified") << "\n";
          if (v.oracle) os << "oracle(D+D', k):  " << (*v.oracle ? "jet ample" : "not jet ample") << "\n";
          if (!v.note.empty()) os << v.note << "\n";
          os << (ok ? "D+D' is " : "no conclusion: D+D' ") << (ok ? std::to_string(o_.k) + "-jet ample" : "") << "\n";
        },
        ok ? 0 : 1);
  }

  int gen(const std::string& family) {
    Polytope p;
    if (family == "example31") {
      if (o_.k + o_.n - 3 < 1) throw Error(ErrorKind::InvalidArgument, "(k + n - 3) D is trivial for these parameters");
      p = example_3_1(o_.n, o_.r, o_.k).polytope.dilated(Rational(o_.k + o_.n - 3));
    } else if (family == "wps") {
      std::vector<Integer> w;
      for (long x : parse_list(o_.weights, "weights")) w.emplace_back(x);
      p = weighted_projective(w).polytope;
    } else if (family == "simplex") {
      p = simplex(static_cast<std::size_t>(o_.dim), o_.m);
    } else if (family == "cube") {
      p = cube(parse_list(o_.sides, "sides"));
    } else {
      p = hirzebruch(o_.a, o_.b, o_.c);
    }
    std::cout << to_json(document_from_polytope(p)).dump(o_.format == "json" ? 2 : -1) << "\n";
    return 0;
  }

 private:
  Options& o_;
};

int fail(const Error& e, int code = 2) {
  Json err = {{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
  std::cout << err.dump() << "\n";
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  Runner run(o);
  CLI::App app{"Exact k-jet ampleness certificates for toric divisors"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  std::function<int()> action;

  auto with_in = [&](CLI::App* s) { s->add_option("--in", o.in, "Input document (default: stdin)"); return s; };
  auto with_k = [&](CLI::App* s) { s->add_option("--k", o.k, "Jet order")->required()->check(CLI::NonNegativeNumber); return s; };

  auto* gq = app.add_subcommand("gamma-q", "Gamma of a cone given by ray generators");
  gq->add_option("--cone", o.cone_file, "Cone file {\"cone\": {\"rays\": [...]}}")->required();
  gq->callback([&] { action = [&] { return run.gamma_q_cmd(); }; });

  auto* gx = with_in(app.add_subcommand("gamma-x", "Gamma of every maximal cone and their maximum"));
  gx->callback([&] { action = [&] { return run.gamma_x_cmd(); }; });

  auto* ce = with_k(with_in(app.add_subcommand("certify", "Per-cone certificate L >= k + Gamma")));
  ce->callback([&] { action = [&] { return run.certify_cmd(); }; });

  auto* mk = with_in(app.add_subcommand("max-k", "Largest certified jet order"));
  mk->callback([&] { action = [&] { return run.max_k_cmd(); }; });

  auto* orc = with_k(with_in(app.add_subcommand("oracle", "Exact evaluation-map check at fixed-point configurations")));
  orc->add_option("--max-r", o.max_r, "Largest number of points (default k + 1)")->check(CLI::PositiveNumber);
  orc->callback([&] { action = [&] { return run.oracle_cmd(); }; });

  auto* in = with_in(app.add_subcommand("intersections", "Edge lengths against wall intersection numbers"));
  in->callback([&] { action = [&] { return run.intersections_cmd(); }; });

  auto* se = with_in(app.add_subcommand("seshadri", "Seshadri constants at fixed points"));
  se->callback([&] { action = [&] { return run.seshadri_cmd(); }; });

  auto* co = with_in(app.add_subcommand("concavity", "Largest k with psi_D k-concave"));
  co->callback([&] { action = [&] { return run.concavity_cmd(); }; });

  auto* fu = with_k(with_in(app.add_subcommand("fujita", "Fujita-type check for D + D'")));
  fu->add_option("--dprime", o.dprime, "Use 'canonical' for D' = K_X");
  fu->add_flag("--no-oracle", o.no_oracle, "Skip the oracle cross-check");
  fu->callback([&] { action = [&] { return run.fujita_cmd(); }; });

  auto* gen = app.add_subcommand("gen", "Write an input document for a standard family");
  gen->require_subcommand(1);
  auto* g31 = gen->add_subcommand("example31", "(k + n - 3) times conv(0, e_1..e_{n-1}, e_1+..+e_{n-1}+r e_n)");
  g31->add_option("--n", o.n)->required();
  g31->add_option("--r", o.r)->required();
  g31->add_option("--k", o.k)->required();
  g31->callback([&] { action = [&] { return run.gen("example31"); }; });
  auto* gw = gen->add_subcommand("wps", "Weighted projective space");
  gw->add_option("--weights", o.weights, "Comma-separated weights")->required();
  gw->callback([&] { action = [&] { return run.gen("wps"); }; });
  auto* gs = gen->add_subcommand("simplex", "m times the standard simplex");
  gs->add_option("--dim", o.dim);
  gs->add_option("--m", o.m);
  gs->callback([&] { action = [&] { return run.gen("simplex"); }; });
  auto* gc = gen->add_subcommand("cube", "Box with the given side lengths");
  gc->add_option("--sides", o.sides, "Comma-separated side lengths")->required();
  gc->callback([&] { action = [&] { return run.gen("cube"); }; });
  auto* gh = gen->add_subcommand("hirzebruch", "conv(0, (b + a c) e1, c e2, b e1 + c e2)");
  gh->add_option("--a", o.a);
  gh->add_option("--b", o.b);
  gh->add_option("--c", o.c);
  gh->callback([&] { action = [&] { return run.gen("hirzebruch"); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fail(Error(ErrorKind::Input, e.what()));
  }
  try {
    return action();
  } catch (const Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    return fail(Error(ErrorKind::Input, e.what()));
  }
}

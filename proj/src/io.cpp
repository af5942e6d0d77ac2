#include "toricjet/io.hpp"

#include <set>

namespace toricjet {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Input, what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

void only_keys(const Json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) bad(where + ": expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    if (!ok) bad(where + ": unexpected key \"" + k + "\"");
  }
}

Integer parse_integer(const Json& j, const std::string& where) {
  Rational q;
  try {
    q = parse_rational_json(j);
  } catch (const Error&) {
    bad(where + ": expected an integer");
  }
  if (!is_integer(q)) bad(where + ": expected an integer, got " + to_string(q));
  return q.get_num();
}

LatticeVector parse_lattice(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  LatticeVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

RationalVector parse_rational_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array");
  RationalVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      v.push_back(parse_rational_json(j[i]));
    } catch (const Error& e) {
      bad(where + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return v;
}

std::vector<LatticeVector> parse_lattice_list(const Json& j, const std::string& where, std::size_t dim) {
  if (!j.is_array()) bad(where + ": expected an array of vectors");
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_lattice(j[i], where + "[" + std::to_string(i) + "]"));
    if (dim && out.back().size() != dim) bad(where + "[" + std::to_string(i) + "]: wrong dimension");
  }
  return out;
}

std::vector<Rational> parse_coefficients(const Json& obj, const std::string& where) {
  only_keys(obj, {"coefficients"}, where);
  return parse_rational_vector(field(obj, "coefficients", where), where + ".coefficients");
}

Json coefficients_json(const std::vector<Rational>& a) {
  Json arr = Json::array();
  for (const auto& x : a) arr.push_back(rational_json(x));
  return arr;
}

}  // namespace

Rational parse_rational_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Input, "expected an integer or a \"p/q\" string, got " + j.dump());
}

Json rational_json(const Rational& q) { return to_string(q); }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

Json vector_json(const LatticeVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(integer_json(x));
  return arr;
}

Json vector_json(const RationalVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(is_integer(x) ? integer_json(x.get_num()) : rational_json(x));
  return arr;
}

InputDocument parse_input(const Json& j) {
  only_keys(j, {"polytope", "fan", "divisor", "dprime"}, "input");
  InputDocument doc;
  bool has_p = j.contains("polytope"), has_f = j.contains("fan");
  if (has_p == has_f) bad("input: exactly one of \"polytope\" and \"fan\" is required");
  if (has_p) {
    const Json& p = j.at("polytope");
    only_keys(p, {"dim", "vertices"}, "polytope");
    const Json& dim = field(p, "dim", "polytope");
    if (!dim.is_number_integer() || dim.get<long>() < 1) bad("polytope.dim: expected a positive integer");
    doc.dim = dim.get<std::size_t>();
    const Json& vs = field(p, "vertices", "polytope");
    if (!vs.is_array() || vs.empty()) bad("polytope.vertices: expected a nonempty array");
    doc.vertices.emplace();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      doc.vertices->push_back(parse_rational_vector(vs[i], "polytope.vertices[" + std::to_string(i) + "]"));
      if (doc.vertices->back().size() != doc.dim)
        bad("polytope.vertices[" + std::to_string(i) + "]: expected " + std::to_string(doc.dim) + " coordinates");
    }
    if (j.contains("divisor")) bad("input: \"divisor\" is only allowed with \"fan\"");
  } else {
    const Json& f = j.at("fan");
    only_keys(f, {"rays", "maximal_cones"}, "fan");
    FanSpec spec;
    spec.rays = parse_lattice_list(field(f, "rays", "fan"), "fan.rays", 0);
    if (spec.rays.empty()) bad("fan.rays: expected at least one ray");
    doc.dim = spec.rays.front().size();
    for (std::size_t i = 0; i < spec.rays.size(); ++i)
      if (spec.rays[i].size() != doc.dim || doc.dim == 0) bad("fan.rays[" + std::to_string(i) + "]: wrong dimension");
    const Json& mc = field(f, "maximal_cones", "fan");
    if (!mc.is_array() || mc.empty()) bad("fan.maximal_cones: expected a nonempty array");
    for (std::size_t i = 0; i < mc.size(); ++i) {
      const std::string where = "fan.maximal_cones[" + std::to_string(i) + "]";
      if (!mc[i].is_array() || mc[i].empty()) bad(where + ": expected a nonempty array of ray indices");
      std::vector<int> cone;
      for (const auto& x : mc[i]) {
        if (!x.is_number_integer()) bad(where + ": ray indices must be integers");
        long r = x.get<long>();
        if (r < 0 || r >= static_cast<long>(spec.rays.size())) bad(where + ": ray index out of range");
        cone.push_back(static_cast<int>(r));
      }
      spec.maximal_cones.push_back(std::move(cone));
    }
    doc.fan = std::move(spec);
    const Json& d = field(j, "divisor", "input");
    only_keys(d, {"local_data", "coefficients"}, "divisor");
    if (d.contains("local_data") == d.contains("coefficients"))
      bad("divisor: exactly one of \"local_data\" and \"coefficients\" is required");
    if (d.contains("local_data")) {
      doc.local_data = parse_lattice_list(d.at("local_data"), "divisor.local_data", doc.dim);
      if (doc.local_data->size() != doc.fan->maximal_cones.size())
        bad("divisor.local_data: expected one vector per maximal cone");
    } else {
      doc.coefficients = parse_rational_vector(d.at("coefficients"), "divisor.coefficients");
      if (doc.coefficients->size() != doc.fan->rays.size()) bad("divisor.coefficients: expected one per ray");
    }
  }
  if (j.contains("dprime")) {
    doc.dprime = parse_coefficients(j.at("dprime"), "dprime");
    std::size_t rays = doc.fan ? doc.fan->rays.size() : 0;
    if (doc.fan && doc.dprime->size() != rays) bad("dprime.coefficients: expected one per ray");
  }
  return doc;
}

Json to_json(const InputDocument& doc) {
  Json j = Json::object();
  if (doc.vertices) {
    Json vs = Json::array();
    for (const auto& v : *doc.vertices) vs.push_back(vector_json(v));
    j["polytope"] = Json{{"dim", doc.dim}, {"vertices", vs}};
  }
  if (doc.fan) {
    Json rays = Json::array();
    for (const auto& r : doc.fan->rays) rays.push_back(vector_json(r));
    j["fan"] = Json{{"rays", rays}, {"maximal_cones", doc.fan->maximal_cones}};
    Json d = Json::object();
    if (doc.local_data) {
      Json arr = Json::array();
      for (const auto& u : *doc.local_data) arr.push_back(vector_json(u));
      d["local_data"] = arr;
    }
    if (doc.coefficients) d["coefficients"] = coefficients_json(*doc.coefficients);
    j["divisor"] = d;
  }
  if (doc.dprime) j["dprime"] = Json{{"coefficients", coefficients_json(*doc.dprime)}};
  return j;
}

InputDocument document_from_polytope(const Polytope& p) {
  InputDocument doc;
  doc.dim = p.ambient_dim();
  doc.vertices = p.vertices();
  return doc;
}

namespace {

Polytope document_polytope(const InputDocument& doc) { return Polytope::from_points(*doc.vertices); }

}  // namespace

Fan document_fan(const InputDocument& doc) {
  if (doc.fan) return Fan(doc.fan->rays, doc.fan->maximal_cones);
  return normal_fan(document_polytope(doc)).fan;
}

TCartierDivisor document_divisor(const InputDocument& doc) {
  if (doc.vertices) return TCartierDivisor::from_polytope(document_polytope(doc));
  Fan fan = document_fan(doc);
  if (doc.local_data) return TCartierDivisor::from_local_data(std::move(fan), *doc.local_data);
  return TCartierDivisor::from_coefficients(std::move(fan), *doc.coefficients);
}

TQDivisor document_q_divisor(const InputDocument& doc) {
  if (doc.fan && doc.coefficients) return TQDivisor{document_fan(doc), *doc.coefficients};
  return to_q_divisor(document_divisor(doc));
}

Cone parse_cone(const Json& j) {
  only_keys(j, {"cone"}, "input");
  const Json& c = field(j, "cone", "input");
  only_keys(c, {"rays"}, "cone");
  auto rays = parse_lattice_list(field(c, "rays", "cone"), "cone.rays", 0);
  if (rays.empty()) bad("cone.rays: expected at least one ray");
  for (const auto& r : rays)
    if (r.size() != rays.front().size() || r.empty()) bad("cone.rays: inconsistent dimensions");
  return Cone(rays, rays.front().size());
}

// --- reports -------------------------------------------------------------------

Json certificate_json(const JetCertificate& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"cone", r.cone},
                    {"L", rational_json(r.L)},
                    {"gamma", rational_json(r.gamma)},
                    {"slack", rational_json(r.slack)}});
  return {{"k", c.k}, {"certified", c.certified}, {"rows", rows}};
}

Json max_k_json(const MaxK& m) {
  Json per = Json::array();
  for (std::size_t c = 0; c < m.per_cone.size(); ++c) per.push_back({{"cone", c}, {"k", integer_json(m.per_cone[c])}});
  return {{"max_k", integer_json(m.value)}, {"global_bound", integer_json(m.global)}, {"per_cone", per}};
}

Json oracle_json(const OracleReport& r) {
  Json cfg = Json::array();
  for (const auto& p : r.config) cfg.push_back({{"cone", p.cone}, {"k", p.mult}});
  Json j = {{"configuration", cfg}, {"surjective", r.surjective}};
  if (!r.unreachable.empty()) {
    Json un = Json::array();
    for (const auto& [i, e] : r.unreachable) un.push_back({{"point", i}, {"exponent", vector_json(e)}});
    j["unreachable"] = un;
  }
  if (r.witness == WitnessKind::Unreachable) {
    j["witness"] = {{"kind", "unreachable"},
                    {"point", r.part_a},
                    {"exponent", vector_json(r.exponent_a)},
                    {"section", vector_json(r.section)}};
  } else if (r.witness == WitnessKind::Collision) {
    j["witness"] = {{"kind", "collision"},
                    {"point_a", r.part_a},
                    {"exponent_a", vector_json(r.exponent_a)},
                    {"point_b", r.part_b},
                    {"exponent_b", vector_json(r.exponent_b)},
                    {"section", vector_json(r.section)}};
  }
  return j;
}

Json jet_ample_json(const JetAmpleResult& r, long k, long max_r) {
  Json j = {{"k", k}, {"max_r", max_r}, {"jet_ample", r.ample}, {"configurations_checked", r.configurations}};
  if (r.failure) j["failure"] = oracle_json(*r.failure);
  return j;
}

Json edge_report_json(const EdgeReport& r, const TCartierDivisor& d) {
  Json edges = Json::array();
  const auto& verts = d.polytope().vertices();
  for (const auto& e : r.edges) {
    Json row = {{"vertex_a", vector_json(verts[e.vertex_a])},
                {"vertex_b", vector_json(verts[e.vertex_b])},
                {"length", rational_json(e.length)},
                {"wall", e.wall}};
    if (e.wall >= 0) {
      const Wall& w = d.fan().walls()[e.wall];
      row["cones"] = {w.cone1, w.cone2};
      row["intersection"] = rational_json(e.intersection);
    }
    edges.push_back(std::move(row));
  }
  return {{"consistent", r.consistent}, {"edges", edges}};
}

Json fujita_json(const FujitaVerdict& v, long k) {
  Json walls = Json::array();
  for (const auto& x : v.wall_intersections) walls.push_back(rational_json(x));
  Json j = {{"k", k},
            {"hypotheses",
             {{"not_projective_space", v.not_projective_space},
              {"dprime_in_range", v.dprime_in_range},
              {"cartier", v.cartier},
              {"intersections", v.intersections}}},
            {"wall_intersections", walls},
            {"hypotheses_hold", v.hypotheses_hold}};
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
  if (v.oracle) j["oracle_jet_ample"] = *v.oracle;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace toricjet

#include "doctest.h"
#include "oracles.hpp"
#include "toricjet/examples.hpp"
#include "toricjet/io.hpp"

using namespace toricjet;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
  return Rational(num(rng)) / Rational(den(rng));
}

InputDocument random_document(std::mt19937_64& rng) {
  InputDocument doc;
  std::uniform_int_distribution<int> kind(0, 2);
  int k = kind(rng);
  doc.dim = 2 + rng() % 2;
  if (k == 0) {
    doc.vertices.emplace();
    for (int i = 0; i < 4; ++i) {
      RationalVector v(doc.dim);
      for (auto& x : v) x = random_rational(rng);
      doc.vertices->push_back(v);
    }
    return doc;
  }
  FanSpec fan;
  std::size_t rays = 3 + rng() % 3;
  for (std::size_t i = 0; i < rays; ++i) fan.rays.push_back(oracle::random_vector(rng, doc.dim, 1000000));
  fan.rays[0][0] = Integer("123456789012345678901234567890");
  for (std::size_t c = 0; c < 3; ++c) fan.maximal_cones.push_back({static_cast<int>(c), static_cast<int>((c + 1) % rays)});
  doc.fan = fan;
  if (k == 1) {
    doc.local_data.emplace();
    for (std::size_t c = 0; c < 3; ++c) doc.local_data->push_back(oracle::random_vector(rng, doc.dim, 9));
  } else {
    doc.coefficients.emplace();
    for (std::size_t i = 0; i < rays; ++i) doc.coefficients->push_back(random_rational(rng));
  }
  if (rng() % 2) {
    doc.dprime.emplace();
    for (std::size_t i = 0; i < rays; ++i) doc.dprime->push_back(random_rational(rng));
  }
  return doc;
}

}  // namespace

TEST_CASE("rationals on the wire") {
  CHECK(parse_rational_json(Json(3)) == 3);
  CHECK(parse_rational_json(Json(-7)) == -7);
  CHECK(parse_rational_json(Json("4/6")) == Rational(2, 3));
  CHECK(parse_rational_json(Json("-1/2")) == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational_json(Json(0.5)), Error);
  CHECK_THROWS_AS(parse_rational_json(Json("0.5")), Error);
  CHECK_THROWS_AS(parse_rational_json(Json("1/0")), Error);
  CHECK_THROWS_AS(parse_rational_json(Json(true)), Error);
  CHECK(rational_json(Rational(1, 2)) == Json("1/2"));
  CHECK(rational_json(Rational(-3)) == Json("-3"));
  CHECK(integer_json(Integer(5)) == Json(5));
  Integer huge("98765432109876543210");
  CHECK(integer_json(huge) == Json("98765432109876543210"));
  CHECK(parse_rational_json(integer_json(huge)) == Rational(huge));
}

TEST_CASE("document round trip") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    InputDocument doc = random_document(rng);
    Json j = to_json(doc);
    CHECK(parse_input(j) == doc);
    CHECK(parse_input(Json::parse(j.dump())) == doc);
  }
}

TEST_CASE("malformed documents") {
  auto rejects = [](const char* text) {
    try {
      parse_input(Json::parse(text));
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Input;
    }
    return false;
  };
  CHECK(rejects(R"({})"));
  CHECK(rejects(R"([1,2])"));
  CHECK(rejects(R"({"polytope":{"dim":2,"vertices":[[0,0],[1]]}})"));
  CHECK(rejects(R"({"polytope":{"dim":2,"vertices":[[0,0],[1,0.5]]}})"));
  CHECK(rejects(R"({"polytope":{"dim":2,"vertices":[[0,0]]},"fan":{}})"));
  CHECK(rejects(R"({"polytope":{"dim":2,"vertices":[[0,0]],"extra":1}})"));
  CHECK(rejects(R"({"fan":{"rays":[[1,0],[0,1]],"maximal_cones":[[0,1]]}})"));
  CHECK(rejects(R"({"fan":{"rays":[[1,0],[0,1]],"maximal_cones":[[0,2]]},"divisor":{"local_data":[[0,0]]}})"));
  CHECK(rejects(R"({"fan":{"rays":[[1,0],[0,1]],"maximal_cones":[[0,1]]},"divisor":{"local_data":[[0,0],[1,1]]}})"));
  CHECK(rejects(R"({"fan":{"rays":[[1,0],[0,1]],"maximal_cones":[[0,1]]},"divisor":{"coefficients":["1/2"]}})"));
  CHECK(rejects(R"({"fan":{"rays":[[1,0],[0,"x"]],"maximal_cones":[[0,1]]},"divisor":{"coefficients":[0,0]}})"));
  CHECK(rejects(R"({"fan":{"rays":[[1,0],[0,1]],"maximal_cones":[[0,1]]},"divisor":{"coefficients":[0,0]},"dprime":{"coefficients":[0]}})"));
  CHECK_FALSE(rejects(R"({"fan":{"rays":[[1,0],[0,1]],"maximal_cones":[[0,1]]},"divisor":{"coefficients":["-1/2",0]}})"));
}

TEST_CASE("documents to divisors") {
  auto doc = document_from_polytope(simplex(2, 3));
  auto d = document_divisor(parse_input(to_json(doc)));
  CHECK(d.polytope() == simplex(2, 3));

  InputDocument fan_doc;
  fan_doc.dim = 2;
  fan_doc.fan = FanSpec{d.fan().rays(), d.fan().maximal_cones()};
  fan_doc.local_data = d.local_data();
  CHECK(document_divisor(fan_doc) == d);
  fan_doc.local_data.reset();
  std::vector<Rational> a;
  for (const auto& x : d.coefficients()) a.emplace_back(x);
  fan_doc.coefficients = a;
  CHECK(document_divisor(fan_doc) == d);
  CHECK(document_q_divisor(fan_doc).coefficients == a);

  // Q-Cartier but not Cartier coefficients
  InputDocument q;
  q.dim = 2;
  q.fan = FanSpec{{lv({1, 0}), lv({0, 1}), lv({-1, -3})}, {{0, 1}, {1, 2}, {0, 2}}};
  q.coefficients = std::vector<Rational>(3, Rational(-1));
  CHECK_THROWS_AS(document_divisor(q), Error);
  CHECK(document_q_divisor(q).coefficients.size() == 3);

  Cone c = parse_cone(Json::parse(R"({"cone":{"rays":[[1,0],[1,2]]}})"));
  CHECK(c.rays().size() == 2);
  CHECK_THROWS_AS(parse_cone(Json::parse(R"({"cone":{"rays":[]}})")), Error);
  CHECK_THROWS_AS(parse_cone(Json::parse(R"({"rays":[[1,0]]})")), Error);
}

TEST_CASE("reports") {
  auto ex = example_3_1(3, 2, 1);
  auto cert = certify(ex.g, 1);
  Json j = certificate_json(cert);
  CHECK(j["certified"] == false);
  CHECK(j["rows"][ex.vertex0_cone]["slack"] == "-1/2");
  CHECK(j["rows"][ex.vertex0_cone]["gamma"] == "1/2");

  auto orc = oracle_jet_ample(ex.g, 1, 2);
  Json o = jet_ample_json(orc, 1, 2);
  CHECK(o["jet_ample"] == false);
  CHECK(o["failure"]["witness"]["kind"] == "unreachable");
  CHECK(o["failure"]["witness"]["exponent"] == Json::parse("[1,1,1]"));

  Json e = edge_report_json(edge_lengths(ex.d), ex.d);
  CHECK(e["consistent"] == true);
  CHECK(e["edges"].size() == 6);

  // a report's input echo reproduces the computation
  Json report = {{"command", "certify"}, {"input", to_json(document_from_polytope(ex.polytope))}};
  auto again = document_divisor(parse_input(report["input"]));
  CHECK(certificate_json(certify(again, 1)) == j);
}

#pragma once

// JSON input documents and machine-readable reports. Rationals travel as
// "p/q" strings (or bare integers on input); no floating point on the wire.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toricjet/divisor.hpp"
#include "toricjet/jets.hpp"

namespace toricjet {

using Json = nlohmann::ordered_json;

struct FanSpec {
  std::vector<LatticeVector> rays;
  std::vector<std::vector<int>> maximal_cones;
  friend bool operator==(const FanSpec&, const FanSpec&) = default;
};

struct InputDocument {
  std::optional<std::vector<RationalVector>> vertices;  ///< polytope form
  std::size_t dim = 0;
  std::optional<FanSpec> fan;                           ///< fan form
  std::optional<std::vector<LatticeVector>> local_data;
  std::optional<std::vector<Rational>> coefficients;
  std::optional<std::vector<Rational>> dprime;
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws Error(Input) on any schema violation.
InputDocument parse_input(const Json& j);
Json to_json(const InputDocument& doc);

InputDocument document_from_polytope(const Polytope& p);

/// The fan of the document (the normal fan for the polytope form).
Fan document_fan(const InputDocument& doc);
/// The Cartier divisor of the document; throws on Q-Cartier-only input.
TCartierDivisor document_divisor(const InputDocument& doc);
/// The divisor as ray coefficients, which also covers Q-Cartier input.
TQDivisor document_q_divisor(const InputDocument& doc);

/// {"cone": {"rays": [[...], ...]}}
Cone parse_cone(const Json& j);

Rational parse_rational_json(const Json& j);
Json rational_json(const Rational& q);
Json integer_json(const Integer& z);
Json vector_json(const LatticeVector& v);
Json vector_json(const RationalVector& v);

// --- reports ------------------------------------------------------------------

Json certificate_json(const JetCertificate& c);
Json max_k_json(const MaxK& m);
Json oracle_json(const OracleReport& r);
Json jet_ample_json(const JetAmpleResult& r, long k, long max_r);
Json edge_report_json(const EdgeReport& r, const TCartierDivisor& d);
Json fujita_json(const FujitaVerdict& v, long k);

}  // namespace toricjet

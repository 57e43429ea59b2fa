#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "geometry.hpp"
#include "ring.hpp"
#include "statement.hpp"
#include "tiling.hpp"

namespace absinc {

using Json = nlohmann::json;

/// Parse with Parse errors instead of nlohmann exceptions.
Json json_parse(const std::string& text, const std::string& what);

// ring descriptors:
//   {"type":"Q"} | {"type":"Fp","p":7}
//   {"type":"algebra","vars":[...],"rules":[{"lhs":"eps^2","rhs":"0"},...]}
//   algebra accepts an optional "base": {"type":"Fp","p":7} (default Q)
Json ring_to_json(const RingPtr& r);
RingPtr ring_from_json(const Json& j);

// elements: rationals as "num/den" strings, prime-field residues as numbers,
// algebra elements as coefficient lists on the canonical basis order
Json element_to_json(const RingElement& e);
RingElement element_from_json(const Json& j, const RingPtr& ring);

// matrices: {"ring": <descriptor>, "columns": [[e,e,e], ...]}
Json matrix_to_json(const PointMatrix& m);
PointMatrix matrix_from_json(const Json& j, const RingPtr& ring_override = nullptr);

// statements: {"n":13, "nondeg_pairs":"all"|[[i,j],...], "nondeg_triples":[...],
//              "collinear":[...], "conclusion":[i,j,k]}
Json statement_to_json(const IncidenceStatement& s);
IncidenceStatement statement_from_json(const Json& j);

Json report_to_json(const InstanceReport& r, bool verbose);

// tilings: {"black":[...], "white":[...], "classes":[[...],...],
//           "tiles":[{"cycle":[a,b,c,d]},...], "conclusion": tileIndex}
Json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

Json violations_to_json(const std::vector<TilingViolation>& v);
Json generated_to_json(const GeneratedStatement& g);
Json certificate_to_json(const CancellationCertificate& c);

}  // namespace absinc

#include "json_io.hpp"

#include <algorithm>

#include "poly.hpp"

namespace absinc {

Json json_parse(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrKind::Parse, what + ": malformed JSON");
  return j;
}

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& why) {
  fail(ErrKind::Parse, what + ": " + why);
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) bad(what, std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string poly_to_text(const std::vector<std::pair<Monomial, Rational>>& terms) {
  PolyQ p(QOps{});
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p.str();
}

}  // namespace

Json ring_to_json(const RingPtr& r) {
  Json j;
  switch (r->kind()) {
    case Ring::Kind::Rationals: j["type"] = "Q"; break;
    case Ring::Kind::PrimeField:
      j["type"] = "Fp";
      j["p"] = r->prime();
      break;
    case Ring::Kind::Algebra: {
      j["type"] = "algebra";
      if (r->prime() != 0) j["base"] = Json{{"type", "Fp"}, {"p", r->prime()}};
      j["vars"] = r->spec().vars;
      Json rules = Json::array();
      for (const auto& rule : r->spec().rules) {
        std::string lhs = rule.var;
        if (rule.power != 1) lhs += "^" + std::to_string(rule.power);
        rules.push_back(Json{{"lhs", lhs}, {"rhs", poly_to_text(rule.rhs)}});
      }
      j["rules"] = rules;
      break;
    }
  }
  return j;
}

RingPtr ring_from_json(const Json& j) {
  const std::string what = "ring descriptor";
  std::string type = field(j, "type", what).get<std::string>();
  if (type == "Q") return Ring::rationals();
  if (type == "Fp") {
    const Json& p = field(j, "p", what);
    if (!p.is_number_unsigned()) bad(what, "\"p\" must be a positive integer");
    return Ring::prime_field(p.get<std::uint64_t>());
  }
  if (type != "algebra") bad(what, "unknown type \"" + type + "\"");

  AlgebraSpec spec;
  if (j.contains("base")) {
    const Json& b = j.at("base");
    std::string bt = field(b, "type", what + " base").get<std::string>();
    if (bt == "Fp")
      spec.p = field(b, "p", what + " base").get<std::uint64_t>();
    else if (bt != "Q")
      bad(what, "algebra base must be Q or Fp");
  }
  const Json& vars = field(j, "vars", what);
  if (!vars.is_array()) bad(what, "\"vars\" must be an array");
  for (const auto& v : vars) spec.vars.push_back(v.get<std::string>());
  const Json& rules = field(j, "rules", what);
  if (!rules.is_array()) bad(what, "\"rules\" must be an array");
  for (const auto& rj : rules) {
    RewriteRule rule;
    auto [var, power] = parse_pure_power(field(rj, "lhs", what + " rule").get<std::string>());
    rule.var = var;
    rule.power = power;
    PolyQ rhs = parse_poly(field(rj, "rhs", what + " rule").get<std::string>());
    for (const auto& [m, c] : rhs.terms()) rule.rhs.emplace_back(m, c);
    spec.rules.push_back(std::move(rule));
  }
  return Ring::algebra(spec);
}

Json element_to_json(const RingElement& e) {
  const Ring& r = *e.ring();
  switch (r.kind()) {
    case Ring::Kind::Rationals: return rational_to_string(e.as_rational());
    case Ring::Kind::PrimeField: return e.as_residue();
    case Ring::Kind::Algebra: {
      Json a = Json::array();
      if (e.over_q()) {
        for (const auto& c : e.qcoeffs()) a.push_back(rational_to_string(c));
      } else {
        for (auto c : e.pcoeffs()) a.push_back(c);
      }
      return a;
    }
  }
  return {};
}

RingElement element_from_json(const Json& j, const RingPtr& ring) {
  const std::string what = "ring element";
  auto scalar_q = [&](const Json& v) -> Rational {
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    bad(what, "expected a rational string or integer");
  };
  auto scalar_p = [&](const Json& v) -> std::uint64_t {
    FpOps f{ring->prime()};
    if (v.is_number_integer()) {
      long long x = v.get<long long>();
      long long m = static_cast<long long>(ring->prime());
      return static_cast<std::uint64_t>(((x % m) + m) % m);
    }
    if (v.is_string()) return f.from_rational(rational_from_string(v.get<std::string>()));
    bad(what, "expected an integer residue");
  };
  if (ring->kind() == Ring::Kind::Algebra) {
    if (!j.is_array() || j.size() != ring->dim())
      bad(what, "expected a coefficient list of length " + std::to_string(ring->dim()));
    if (ring->base_is_rational()) {
      std::vector<Rational> c;
      for (const auto& v : j) c.push_back(scalar_q(v));
      return ring->from_coeffs_q(std::move(c));
    }
    std::vector<std::uint64_t> c;
    for (const auto& v : j) c.push_back(scalar_p(v));
    return ring->from_coeffs_p(std::move(c));
  }
  if (ring->kind() == Ring::Kind::Rationals) return ring->from_rational(scalar_q(j));
  return ring->from_coeffs_p({scalar_p(j)});
}

Json matrix_to_json(const PointMatrix& m) {
  Json j;
  j["ring"] = ring_to_json(m.ring());
  Json cols = Json::array();
  for (std::size_t i = 1; i <= m.cols(); ++i) {
    const Vec3& c = m.column(i);
    cols.push_back(Json::array({element_to_json(c[0]), element_to_json(c[1]), element_to_json(c[2])}));
  }
  j["columns"] = cols;
  return j;
}

PointMatrix matrix_from_json(const Json& j, const RingPtr& ring_override) {
  const std::string what = "matrix";
  RingPtr ring = ring_override;
  if (j.contains("ring"))
    ring = ring_from_json(j.at("ring"));
  if (!ring) bad(what, "no ring descriptor (supply one in the file or via --ring)");
  const Json& cols = field(j, "columns", what);
  if (!cols.is_array()) bad(what, "\"columns\" must be an array");
  std::vector<Vec3> columns;
  for (const auto& cj : cols) {
    if (!cj.is_array() || cj.size() != 3) bad(what, "each column must have exactly 3 entries");
    columns.emplace_back(element_from_json(cj[0], ring), element_from_json(cj[1], ring),
                         element_from_json(cj[2], ring));
  }
  return PointMatrix(ring, std::move(columns));
}

Json statement_to_json(const IncidenceStatement& s) {
  Json j;
  j["n"] = s.n;
  if (s.all_pairs) {
    j["nondeg_pairs"] = "all";
  } else {
    Json pairs = Json::array();
    for (const auto& p : s.nondeg_pairs) pairs.push_back(Json::array({p[0], p[1]}));
    j["nondeg_pairs"] = pairs;
  }
  Json nd = Json::array();
  for (const auto& t : s.nondeg_triples) nd.push_back(Json::array({t[0], t[1], t[2]}));
  j["nondeg_triples"] = nd;
  Json coll = Json::array();
  for (const auto& t : s.collinear) coll.push_back(Json::array({t[0], t[1], t[2]}));
  j["collinear"] = coll;
  j["conclusion"] = Json::array({s.conclusion[0], s.conclusion[1], s.conclusion[2]});
  return j;
}

IncidenceStatement statement_from_json(const Json& j) {
  const std::string what = "statement";
  IncidenceStatement s;
  const Json& n = field(j, "n", what);
  if (!n.is_number_integer()) bad(what, "\"n\" must be an integer");
  s.n = n.get<int>();
  const Json& pairs = field(j, "nondeg_pairs", what);
  if (pairs.is_string() && pairs.get<std::string>() == "all") {
    s.all_pairs = true;
  } else if (pairs.is_array()) {
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2) bad(what, "each nondeg pair must have 2 indices");
      s.nondeg_pairs.push_back(make_pair_sorted(p[0].get<int>(), p[1].get<int>()));
    }
    std::sort(s.nondeg_pairs.begin(), s.nondeg_pairs.end());
  } else {
    bad(what, "\"nondeg_pairs\" must be \"all\" or an array of pairs");
  }
  auto triples = [&](const char* key) {
    std::vector<IndexTriple> out;
    const Json& a = field(j, key, what);
    if (!a.is_array()) bad(what, std::string("\"") + key + "\" must be an array");
    for (const auto& t : a) {
      if (!t.is_array() || t.size() != 3)
        bad(what, std::string("each entry of \"") + key + "\" must have 3 indices");
      out.push_back(make_triple_sorted(t[0].get<int>(), t[1].get<int>(), t[2].get<int>()));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  s.nondeg_triples = triples("nondeg_triples");
  s.collinear = triples("collinear");
  const Json& c = field(j, "conclusion", what);
  if (!c.is_array() || c.size() != 3) bad(what, "\"conclusion\" must have 3 indices");
  s.conclusion = make_triple_sorted(c[0].get<int>(), c[1].get<int>(), c[2].get<int>());
  return s;
}

Json report_to_json(const InstanceReport& r, bool verbose) {
  Json j;
  j["verdict"] = verdict_name(r.verdict);
  j["hypotheses_ok"] = r.hypotheses_ok();
  j["conclusion"] = Json::array({r.conclusion[0], r.conclusion[1], r.conclusion[2]});
  j["conclusion_value"] = element_to_string(r.conclusion_value);
  j["conclusion_is_zero"] = is_zero(r.conclusion_value);

  Json cols = Json::array();
  for (const auto& c : r.column_checks) {
    if (!verbose && c.ok) continue;
    cols.push_back(Json{{"index", c.index}, {"ok", c.ok}});
  }
  j["columns"] = cols;
  Json pairs = Json::array();
  for (const auto& c : r.pair_checks) {
    if (!verbose && c.ok) continue;
    pairs.push_back(Json{{"pair", Json::array({c.pair[0], c.pair[1]})}, {"ok", c.ok}});
  }
  j["pairs"] = pairs;
  auto triples = [&](const std::vector<TripleCheck>& v) {
    Json a = Json::array();
    for (const auto& c : v) {
      if (!verbose && c.ok) continue;
      Json e{{"triple", Json::array({c.triple[0], c.triple[1], c.triple[2]})}, {"ok", c.ok}};
      if (verbose || !c.ok) e["value"] = element_to_string(c.value);
      a.push_back(e);
    }
    return a;
  };
  j["nondeg_triples"] = triples(r.triple_unit_checks);
  j["collinear"] = triples(r.collinear_checks);
  j["counts"] = Json{{"columns", r.column_checks.size()},
                     {"pairs", r.pair_checks.size()},
                     {"nondeg_triples", r.triple_unit_checks.size()},
                     {"collinear", r.collinear_checks.size()}};
  return j;
}

Json tiling_to_json(const Tiling& t) {
  Json j;
  j["black"] = t.black;
  j["white"] = t.white;
  j["classes"] = t.classes;
  Json tiles = Json::array();
  for (const auto& tile : t.tiles)
    tiles.push_back(Json{{"cycle", Json::array({tile.cycle[0], tile.cycle[1], tile.cycle[2],
                                                tile.cycle[3]})}});
  j["tiles"] = tiles;
  j["conclusion"] = t.conclusion_tile;
  return j;
}

Tiling tiling_from_json(const Json& j) {
  const std::string what = "tiling";
  Tiling t;
  auto strings = [&](const char* key) {
    std::vector<std::string> out;
    const Json& a = field(j, key, what);
    if (!a.is_array()) bad(what, std::string("\"") + key + "\" must be an array");
    for (const auto& v : a) out.push_back(v.get<std::string>());
    return out;
  };
  t.black = strings("black");
  t.white = strings("white");
  const Json& classes = field(j, "classes", what);
  if (!classes.is_array()) bad(what, "\"classes\" must be an array");
  for (const auto& c : classes) {
    std::vector<std::string> cls;
    for (const auto& v : c) cls.push_back(v.get<std::string>());
    t.classes.push_back(std::move(cls));
  }
  const Json& tiles = field(j, "tiles", what);
  if (!tiles.is_array()) bad(what, "\"tiles\" must be an array");
  for (const auto& tj : tiles) {
    const Json& cyc = field(tj, "cycle", what + " tile");
    if (!cyc.is_array() || cyc.size() != 4) bad(what, "each tile cycle must have 4 vertices");
    Tile tile;
    for (std::size_t i = 0; i < 4; ++i) tile.cycle[i] = cyc[i].get<std::string>();
    t.tiles.push_back(tile);
  }
  const Json& c = field(j, "conclusion", what);
  if (!c.is_number_integer()) bad(what, "\"conclusion\" must be a tile index");
  t.conclusion_tile = c.get<int>();
  return t;
}

Json violations_to_json(const std::vector<TilingViolation>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(Json{{"kind", x.kind}, {"detail", x.detail}});
  return a;
}

Json generated_to_json(const GeneratedStatement& g) {
  Json j;
  j["statement"] = statement_to_json(g.statement);
  j["labels"] = g.labels;
  return j;
}

namespace {

Json term_to_json(const EdgeTerm& t) { return Json{{"black", t.black}, {"class", t.cls}}; }
Json ref_to_json(const TermRef& r) { return Json{{"tile", r.tile}, {"slot", r.slot}}; }

}  // namespace

Json certificate_to_json(const CancellationCertificate& c) {
  Json j;
  Json eqs = Json::array();
  for (const auto& eq : c.equations) {
    Json left = Json::array(), right = Json::array();
    for (const auto& [term, ref] : eq.left) left.push_back(term_to_json(term));
    for (const auto& [term, ref] : eq.right) right.push_back(term_to_json(term));
    eqs.push_back(Json{{"tile", eq.tile},
                       {"mixed", eq.mixed},
                       {"is_conclusion", eq.conclusion},
                       {"left", left},
                       {"right", right}});
  }
  j["equations"] = eqs;
  Json pairing = Json::array();
  for (const auto& p : c.pairing)
    pairing.push_back(Json{{"term", term_to_json(p.term)},
                           {"left", ref_to_json(p.left)},
                           {"right", ref_to_json(p.right)}});
  j["pairing"] = pairing;
  Json residual = Json::array();
  for (const auto& r : c.residual)
    residual.push_back(Json{{"term", term_to_json(r.term)},
                            {"side", r.side},
                            {"at", ref_to_json(r.at)},
                            {"conclusion_side", r.conclusion_side}});
  j["residual"] = residual;
  return j;
}

}  // namespace absinc

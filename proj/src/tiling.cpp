#include "tiling.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace absinc {

namespace {

struct TilingIndex {
  std::set<std::string> black;
  std::set<std::string> white;
  std::map<std::string, std::string> class_rep;    // white vertex -> representative
  std::vector<std::string> class_reps_sorted;      // representatives, sorted
};

std::string tile_str(const Tile& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += t.cycle[i];
  }
  return s + "]";
}

// Local structural checks shared by certify_cancellation; global surface
// closure is validate-only (certify discovers closure defects as unmatched
// terms).
std::vector<TilingViolation> validate_local(const Tiling& t, TilingIndex* index) {
  std::vector<TilingViolation> out;
  TilingIndex idx;
  for (const auto& b : t.black) {
    if (!idx.black.insert(b).second)
      out.push_back({"DuplicateLabel", "black vertex " + b + " declared twice"});
  }
  for (const auto& w : t.white) {
    if (idx.black.count(w))
      out.push_back({"DuplicateLabel", "label " + w + " is both black and white"});
    if (!idx.white.insert(w).second)
      out.push_back({"DuplicateLabel", "white vertex " + w + " declared twice"});
  }

  std::set<std::string> seen;
  for (const auto& cls : t.classes) {
    if (cls.empty()) {
      out.push_back({"ClassPartition", "empty white class"});
      continue;
    }
    std::string rep = *std::min_element(cls.begin(), cls.end());
    for (const auto& w : cls) {
      if (!idx.white.count(w))
        out.push_back({"ClassPartition", "class member " + w + " is not a white vertex"});
      if (!seen.insert(w).second)
        out.push_back({"ClassPartition", "white vertex " + w + " is in two classes"});
      idx.class_rep[w] = rep;
    }
  }
  for (const auto& w : t.white)
    if (!seen.count(w))
      out.push_back({"ClassPartition", "white vertex " + w + " belongs to no class"});
  {
    std::set<std::string> reps;
    for (const auto& [w, r] : idx.class_rep) reps.insert(r);
    idx.class_reps_sorted.assign(reps.begin(), reps.end());
  }

  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const Tile& tile = t.tiles[ti];
    bool known = true;
    for (const auto& v : tile.cycle) {
      if (!idx.black.count(v) && !idx.white.count(v)) {
        out.push_back({"UnknownVertex", "tile " + std::to_string(ti) + " uses unknown vertex " + v});
        known = false;
      }
    }
    if (!known) continue;
    const bool starts_black = idx.black.count(tile.cycle[0]) > 0;
    bool alternates = true;
    for (std::size_t i = 0; i < 4; ++i) {
      const bool want_black = (i % 2 == 0) == starts_black;
      const bool is_black = idx.black.count(tile.cycle[i]) > 0;
      if (is_black != want_black) alternates = false;
    }
    if (!alternates) {
      out.push_back({"ColorAlternation",
                     "tile " + std::to_string(ti) + " " + tile_str(tile) +
                         " does not alternate black and white"});
      continue;
    }
    const std::size_t b0 = starts_black ? 0 : 1;
    if (tile.cycle[b0] == tile.cycle[b0 + 2])
      out.push_back({"TileShape", "tile " + std::to_string(ti) + " repeats black vertex " +
                                       tile.cycle[b0]});
    const std::size_t w0 = starts_black ? 1 : 0;
    if (tile.cycle[w0] == tile.cycle[w0 + 2])
      out.push_back({"TileShape", "tile " + std::to_string(ti) + " repeats white vertex " +
                                       tile.cycle[w0]});
  }

  if (t.conclusion_tile < 0 || t.conclusion_tile >= static_cast<int>(t.tiles.size())) {
    out.push_back({"ConclusionTile", "conclusion tile index " + std::to_string(t.conclusion_tile) +
                                         " out of range"});
  } else if (out.empty()) {
    const Tile& c = t.tiles[t.conclusion_tile];
    std::vector<std::string> whites;
    for (const auto& v : c.cycle)
      if (idx.white.count(v)) whites.push_back(v);
    if (whites.size() == 2 && idx.class_rep.at(whites[0]) == idx.class_rep.at(whites[1])) {
      bool any_mixed = false;
      for (const auto& tile : t.tiles) {
        std::vector<std::string> ws;
        for (const auto& v : tile.cycle)
          if (idx.white.count(v)) ws.push_back(v);
        if (ws.size() == 2 && idx.class_rep.at(ws[0]) != idx.class_rep.at(ws[1])) any_mixed = true;
      }
      out.push_back({"NoConclusionPossible",
                     any_mixed
                         ? "the conclusion tile's white vertices are equivalent"
                         : "no tile has white vertices in different classes"});
    }
  }

  if (index) *index = std::move(idx);
  return out;
}

struct DirectedEdgeUse {
  int tile;
  int slot;  // cycle position of the edge's source vertex
};

}  // namespace

std::vector<TilingViolation> validate_tiling(const Tiling& t) {
  TilingIndex idx;
  auto out = validate_local(t, &idx);
  if (!out.empty()) return out;

  // closed oriented surface: every undirected edge appears in exactly two
  // tiles, once in each direction
  std::map<std::pair<std::string, std::string>, std::vector<DirectedEdgeUse>> directed;
  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const auto& cyc = t.tiles[ti].cycle;
    for (int s = 0; s < 4; ++s)
      directed[{cyc[s], cyc[(s + 1) % 4]}].push_back({static_cast<int>(ti), s});
  }
  std::set<std::pair<std::string, std::string>> reported;
  for (const auto& [e, uses] : directed) {
    auto undirected = e.first < e.second ? e : std::make_pair(e.second, e.first);
    if (!reported.insert(undirected).second) continue;
    auto rev = directed.find({e.second, e.first});
    const std::size_t fwd = uses.size();
    const std::size_t bwd = rev == directed.end() ? 0 : rev->second.size();
    const std::string name = "{" + undirected.first + "," + undirected.second + "}";
    if (fwd + bwd != 2) {
      out.push_back({"SurfaceClosure", "edge " + name + " occurs in " +
                                           std::to_string(fwd + bwd) + " tile slots (expected 2)"});
    } else if (fwd != 1 || bwd != 1) {
      out.push_back({"SurfaceClosure",
                     "edge " + name + " is traversed twice in the same direction"});
    }
  }
  return out;
}

namespace {

struct TileShape {
  std::string black0, white0, black1, white1;  // cycle rotated to start black
};

TileShape shape_of(const Tile& tile, const TilingIndex& idx) {
  int start = idx.black.count(tile.cycle[0]) ? 0 : 1;
  return {tile.cycle[start], tile.cycle[(start + 1) % 4], tile.cycle[(start + 2) % 4],
          tile.cycle[(start + 3) % 4]};
}

}  // namespace

GeneratedStatement generate_statement(const Tiling& t) {
  auto violations = validate_tiling(t);
  if (!violations.empty())
    fail(ErrKind::InvalidTiling, violations.front().kind + ": " + violations.front().detail);

  TilingIndex idx;
  validate_local(t, &idx);

  GeneratedStatement g;
  auto add_point = [&](const std::string& label) {
    g.labels.push_back(label);
    g.index_of[label] = static_cast<int>(g.labels.size());
    return g.index_of[label];
  };
  for (const auto& b : t.black) add_point(b);
  std::map<std::string, std::pair<int, int>> st_of;  // class rep -> (s,t) indices
  for (const auto& rep : idx.class_reps_sorted) {
    int s = add_point("s(" + rep + ")");
    int tt = add_point("t(" + rep + ")");
    st_of[rep] = {s, tt};
  }

  // pairs of distinct classes sharing a tile, and per-tile data
  std::set<std::pair<std::string, std::string>> co_pairs;
  std::set<std::pair<std::string, std::string>> class_black;  // (rep, black) sharing a tile
  struct MixedTile {
    int tile;
    std::string b0, b1, rep0, rep1;
  };
  std::vector<MixedTile> mixed;
  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    TileShape sh = shape_of(t.tiles[ti], idx);
    const std::string r0 = idx.class_rep.at(sh.white0);
    const std::string r1 = idx.class_rep.at(sh.white1);
    class_black.insert({r0, sh.black0});
    class_black.insert({r0, sh.black1});
    class_black.insert({r1, sh.black0});
    class_black.insert({r1, sh.black1});
    if (r0 != r1) {
      co_pairs.insert(r0 < r1 ? std::make_pair(r0, r1) : std::make_pair(r1, r0));
      mixed.push_back({static_cast<int>(ti), sh.black0, sh.black1, r0, r1});
    }
  }
  std::map<std::pair<std::string, std::string>, int> r_of;
  for (const auto& pr : co_pairs) r_of[pr] = add_point("R(" + pr.first + "," + pr.second + ")");

  IncidenceStatement& s = g.statement;
  s.n = static_cast<int>(g.labels.size());
  std::set<IndexPair> pairs;
  std::set<IndexTriple> nd_triples, coll;

  for (const auto& [rep, st] : st_of) pairs.insert(make_pair_sorted(st.first, st.second));
  // every unordered pair of distinct classes contributes the four triples
  // on {s_i, t_i, s_j, t_j}
  for (std::size_t i = 0; i < idx.class_reps_sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < idx.class_reps_sorted.size(); ++j) {
      auto [si, ti] = st_of[idx.class_reps_sorted[i]];
      auto [sj, tj] = st_of[idx.class_reps_sorted[j]];
      int four[4] = {si, ti, sj, tj};
      for (int drop = 0; drop < 4; ++drop) {
        int tri[3], k = 0;
        for (int q = 0; q < 4; ++q)
          if (q != drop) tri[k++] = four[q];
        nd_triples.insert(make_triple_sorted(tri[0], tri[1], tri[2]));
      }
    }
  }
  for (const auto& [rep, blk] : class_black) {
    auto [si, ti] = st_of[rep];
    nd_triples.insert(make_triple_sorted(si, ti, g.index_of.at(blk)));
  }
  for (const auto& [pr, ridx] : r_of) {
    auto [si, ti] = st_of[pr.first];
    auto [sj, tj] = st_of[pr.second];
    coll.insert(make_triple_sorted(si, ti, ridx));
    coll.insert(make_triple_sorted(sj, tj, ridx));
  }
  for (const auto& mt : mixed) {
    auto pr = mt.rep0 < mt.rep1 ? std::make_pair(mt.rep0, mt.rep1)
                                : std::make_pair(mt.rep1, mt.rep0);
    IndexTriple tri = make_triple_sorted(g.index_of.at(mt.b0), g.index_of.at(mt.b1), r_of.at(pr));
    if (mt.tile == t.conclusion_tile)
      s.conclusion = tri;
    else
      coll.insert(tri);
  }

  s.nondeg_pairs.assign(pairs.begin(), pairs.end());
  s.nondeg_triples.assign(nd_triples.begin(), nd_triples.end());
  s.collinear.assign(coll.begin(), coll.end());
  return g;
}

CancellationCertificate certify_cancellation(const Tiling& t) {
  TilingIndex idx;
  auto local = validate_local(t, &idx);
  if (!local.empty())
    fail(ErrKind::InvalidTiling, local.front().kind + ": " + local.front().detail);

  CancellationCertificate cert;
  cert.equations.reserve(t.tiles.size());
  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    const auto& cyc = t.tiles[ti].cycle;
    TileEquation eq;
    eq.tile = static_cast<int>(ti);
    eq.conclusion = static_cast<int>(ti) == t.conclusion_tile;
    std::set<std::string> reps;
    for (int s = 0; s < 4; ++s) {
      const std::string& u = cyc[s];
      const std::string& v = cyc[(s + 1) % 4];
      TermRef ref{static_cast<int>(ti), s};
      if (idx.black.count(u)) {
        EdgeTerm term{u, idx.class_rep.at(v)};
        reps.insert(term.cls);
        eq.left.push_back({term, ref});
      } else {
        EdgeTerm term{v, idx.class_rep.at(u)};
        reps.insert(term.cls);
        eq.right.push_back({term, ref});
      }
    }
    eq.mixed = reps.size() == 2;
    cert.equations.push_back(std::move(eq));
  }

  // match the two directed occurrences of every undirected edge
  struct Occurrence {
    EdgeTerm term;
    TermRef ref;
    bool left;
    bool in_conclusion;
  };
  std::map<std::pair<std::string, std::string>, std::vector<Occurrence>> by_edge;
  for (const auto& eq : cert.equations) {
    for (const auto& [term, ref] : eq.left) {
      const auto& cyc = t.tiles[ref.tile].cycle;
      std::string w = cyc[(ref.slot + 1) % 4];
      by_edge[{term.black, w}].push_back({term, ref, true, eq.conclusion});
    }
    for (const auto& [term, ref] : eq.right) {
      const auto& cyc = t.tiles[ref.tile].cycle;
      std::string w = cyc[ref.slot];
      by_edge[{term.black, w}].push_back({term, ref, false, eq.conclusion});
    }
  }
  for (auto& [edge, occs] : by_edge) {
    const std::string name =
        "[s(" + (occs[0].term.cls) + "),t(" + occs[0].term.cls + ")," + edge.first + "]";
    if (occs.size() != 2)
      fail(ErrKind::CancellationFailure,
           "term " + name + " for edge {" + edge.first + "," + edge.second + "} occurs " +
               std::to_string(occs.size()) + " times (expected 2)");
    if (occs[0].left == occs[1].left)
      fail(ErrKind::CancellationFailure,
           "term " + name + " for edge {" + edge.first + "," + edge.second +
               "} appears twice on the same side (tile orientations disagree)");
    const Occurrence& l = occs[0].left ? occs[0] : occs[1];
    const Occurrence& r = occs[0].left ? occs[1] : occs[0];
    if (!l.in_conclusion && !r.in_conclusion) {
      cert.pairing.push_back({l.term, l.ref, r.ref});
    } else if (l.in_conclusion != r.in_conclusion) {
      const Occurrence& outside = l.in_conclusion ? r : l;
      cert.residual.push_back({outside.term, outside.left ? "left" : "right", outside.ref,
                               outside.left ? "right" : "left"});
    }
    // both occurrences inside the conclusion tile would need a repeated
    // vertex, which validate_local rejects
  }

  // the residual must be the conclusion tile's own equation, sides swapped
  const TileEquation& ceq = cert.equations[t.conclusion_tile];
  auto count_terms = [](auto begin, auto end) {
    std::map<EdgeTerm, int> m;
    for (auto it = begin; it != end; ++it) ++m[*it];
    return m;
  };
  std::vector<EdgeTerm> res_left, res_right, conc_left, conc_right;
  for (const auto& r : cert.residual)
    (r.side == "left" ? res_left : res_right).push_back(r.term);
  for (const auto& [term, ref] : ceq.left) conc_left.push_back(term);
  for (const auto& [term, ref] : ceq.right) conc_right.push_back(term);
  if (count_terms(res_right.begin(), res_right.end()) !=
          count_terms(conc_left.begin(), conc_left.end()) ||
      count_terms(res_left.begin(), res_left.end()) !=
          count_terms(conc_right.begin(), conc_right.end()))
    fail(ErrKind::CancellationFailure,
         "residual terms do not match the conclusion tile's equation");
  return cert;
}

InstanceReport verify_generated(const Tiling& t, const PointMatrix& m) {
  GeneratedStatement g = generate_statement(t);
  if (static_cast<int>(m.cols()) != g.statement.n)
    fail(ErrKind::SizeMismatch, "generated statement has " + std::to_string(g.statement.n) +
                                    " points but matrix has " + std::to_string(m.cols()) +
                                    " columns");
  InstanceReport rep = check_instance(g.statement, m);
  if (rep.verdict == Verdict::HypothesesFail) return rep;

  TilingIndex idx;
  validate_local(t, &idx);
  auto col = [&](int i) { return m.column(static_cast<std::size_t>(i)); };
  auto point = [&](const std::string& label) { return col(g.index_of.at(label)); };

  for (std::size_t ti = 0; ti < t.tiles.size(); ++ti) {
    if (static_cast<int>(ti) == t.conclusion_tile) continue;
    TileShape sh = shape_of(t.tiles[ti], idx);
    const std::string r0 = idx.class_rep.at(sh.white0);
    const std::string r1 = idx.class_rep.at(sh.white1);
    if (r0 == r1) continue;
    Vec3 s = point("s(" + r0 + ")");
    Vec3 tt = point("t(" + r0 + ")");
    Vec3 v = point("s(" + r1 + ")");
    Vec3 w = point("t(" + r1 + ")");
    Vec3 P = point(sh.black0);
    Vec3 Q = point(sh.black1);
    auto pr = r0 < r1 ? std::make_pair(r0, r1) : std::make_pair(r1, r0);
    Vec3 R = point("R(" + pr.first + "," + pr.second + ")");

    RingElement u = fundamental_unit(s, tt, v, w, R);
    RingElement lhs = sub(mul(bracket(s, tt, P), bracket(v, w, Q)),
                          mul(bracket(v, w, P), bracket(s, tt, Q)));
    RingElement rhs = mul(invert_unit(u), bracket(P, Q, R));
    if (!eq(lhs, rhs))
      fail(ErrKind::InternalInconsistency,
           "fundamental identity fails on tile " + std::to_string(ti));
  }
  return rep;
}

}  // namespace absinc

#include "corpus.hpp"

#include <map>

namespace absinc {

PolyQ SymbolicMatrix::minor(std::size_t i, std::size_t j, std::size_t k) const {
  auto col = [&](std::size_t c) -> const std::array<PolyQ, 3>& {
    if (c < 1 || c > columns.size())
      fail(ErrKind::IndexOutOfRange, "symbolic column " + std::to_string(c) + " out of range");
    return columns[c - 1];
  };
  if (i == j || i == k || j == k) fail(ErrKind::RepeatedIndex, "repeated symbolic column");
  std::array<std::array<PolyQ, 3>, 3> m{col(i), col(j), col(k)};
  return poly_det3(m);
}

namespace {

SymbolicMatrix symbolic_from_rows(std::vector<std::string> vars,
                                  const std::vector<std::vector<const char*>>& rows) {
  SymbolicMatrix m;
  m.vars = std::move(vars);
  const std::size_t n = rows[0].size();
  for (std::size_t c = 0; c < n; ++c)
    m.columns.push_back({parse_poly(rows[0][c]), parse_poly(rows[1][c]), parse_poly(rows[2][c])});
  return m;
}

// ---- the 13-point incidence statement and its witnesses ----

const std::vector<std::vector<const char*>>& counterexample_rows() {
  // symbolic in x and eps; evaluated at the generators of A (or with eps = 0)
  static const std::vector<std::vector<const char*>> rows = {
      {"1", "1", "0", "1", "0", "0", "1", "1", "1", "1", "1", "1", "1"},
      {"0", "1", "1", "1", "1", "0",
       "x + 1/14*eps - 1/56*eps*x",
       "1 + x - 3/28*eps - 9/56*eps*x",
       "0",
       "2 - 3/28*eps - 1/28*eps*x",
       "1 + x - 3/28*eps - 9/56*eps*x",
       "2 - 3/28*eps - 1/28*eps*x",
       "x + 1/14*eps - 1/56*eps*x"},
      {"0", "0", "0", "1", "1", "1",
       "1",
       "x - 3/28*eps - 9/56*eps*x",
       "2 - x + 1/7*eps + 5/56*eps*x",
       "x - 3/28*eps - 9/56*eps*x",
       "2 - 5/28*eps - 1/7*eps*x",
       "4 - 2*x",
       "0"}};
  return rows;
}

const std::vector<std::vector<const char*>>& solved_rows() {
  static const std::vector<std::vector<const char*>> rows = {
      {"1", "1", "0", "1", "0", "0", "1", "1", "1", "1", "1", "1", "1"},
      {"0", "1", "1", "1", "1", "0", "x", "x+1", "0", "2", "x+1", "2", "x"},
      {"0", "0", "0", "1", "1", "1", "1", "x", "2-x", "x", "2", "4-2*x", "0"}};
  return rows;
}

const std::vector<std::vector<const char*>>& family_rows() {
  static const std::vector<std::vector<const char*>> rows = {
      {"1", "1", "0", "1", "0", "0", "1", "1", "1", "1", "1", "1", "1"},
      {"0", "1", "1", "1", "1", "0", "x", "y+1", "0", "x*y", "y+1", "x*y", "x"},
      {"0", "0", "0", "1", "1", "1", "1", "y", "z", "y", "y+2-x", "w", "0"}};
  return rows;
}

PointMatrix evaluate_rows(const std::vector<std::vector<const char*>>& rows, const RingPtr& ring,
                          const std::map<std::string, RingElement>& assignment) {
  std::vector<Vec3> cols;
  const std::size_t n = rows[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::array<RingElement, 3> e;
    for (std::size_t r = 0; r < 3; ++r)
      e[r] = poly_evaluate(parse_poly(rows[r][c]), assignment);
    cols.emplace_back(e[0], e[1], e[2]);
  }
  return PointMatrix(ring, std::move(cols));
}

PointMatrix evaluate_rows_mod_p(const std::vector<std::vector<const char*>>& rows,
                                const RingPtr& ring,
                                const std::map<std::string, RingElement>& assignment) {
  std::vector<Vec3> cols;
  const std::size_t n = rows[0].size();
  for (std::size_t c = 0; c < n; ++c) {
    std::array<RingElement, 3> e;
    for (std::size_t r = 0; r < 3; ++r)
      e[r] = poly_evaluate(poly_reduce_mod_p(parse_poly(rows[r][c]), ring->prime()), assignment);
    cols.emplace_back(e[0], e[1], e[2]);
  }
  return PointMatrix(ring, std::move(cols));
}

IncidenceStatement thirteen_point_statement() {
  IncidenceStatement s;
  s.n = 13;
  s.all_pairs = true;  // "distinct points p_1, ..., p_13"
  s.collinear = thirteen_point_collinearities();
  s.conclusion = {11, 12, 13};
  return s;
}

// ---- Pappus ----

const std::vector<IndexTriple>& pappus_lines() {
  static const std::vector<IndexTriple> lines = {{1, 2, 3}, {1, 5, 7}, {1, 6, 8}, {2, 4, 7},
                                                 {2, 6, 9}, {3, 4, 8}, {3, 5, 9}, {4, 5, 6}};
  return lines;
}

IncidenceStatement pappus_statement() {
  IncidenceStatement s;
  s.n = 9;
  s.all_pairs = true;
  s.collinear = pappus_lines();
  s.conclusion = {7, 8, 9};
  // every triple that is neither a drawn line nor the conclusion is
  // nondegenerate
  for (int i = 1; i <= 9; ++i)
    for (int j = i + 1; j <= 9; ++j)
      for (int k = j + 1; k <= 9; ++k) {
        IndexTriple t{i, j, k};
        if (t == s.conclusion) continue;
        bool is_line = false;
        for (const auto& l : pappus_lines()) is_line = is_line || l == t;
        if (!is_line) s.nondeg_triples.push_back(t);
      }
  return s;
}

PointMatrix rational_matrix(const RingPtr& q, const std::vector<std::array<const char*, 3>>& cols) {
  std::vector<Vec3> columns;
  for (const auto& c : cols)
    columns.emplace_back(q->from_rational(rational_from_string(c[0])),
                         q->from_rational(rational_from_string(c[1])),
                         q->from_rational(rational_from_string(c[2])));
  return PointMatrix(q, std::move(columns));
}

PointMatrix fp_matrix(const RingPtr& fp, const std::vector<std::array<std::uint64_t, 3>>& cols) {
  std::vector<Vec3> columns;
  for (const auto& c : cols)
    columns.emplace_back(fp->from_coeffs_p({c[0]}), fp->from_coeffs_p({c[1]}),
                         fp->from_coeffs_p({c[2]}));
  return PointMatrix(fp, std::move(columns));
}

// classical 9-point configuration from two horizontal lines
PointMatrix pappus_matrix_q() {
  return rational_matrix(builtin_ring("Q"), {{"0", "0", "1"},
                                             {"2", "0", "1"},
                                             {"4", "0", "1"},
                                             {"1", "2", "1"},
                                             {"5/2", "2", "1"},
                                             {"5", "2", "1"},
                                             {"10", "8", "7"},
                                             {"40", "16", "16"},
                                             {"30", "8", "9"}});
}

PointMatrix pappus_matrix_f7() {
  return fp_matrix(builtin_ring("F7"), {{0, 0, 1},
                                        {1, 1, 2},
                                        {1, 1, 4},
                                        {1, 0, 1},
                                        {1, 2, 1},
                                        {1, 3, 1},
                                        {1, 2, 3},
                                        {1, 3, 3},
                                        {1, 6, 3}});
}

// torus tiling: three lines, six points, nine tiles; tile 2 is the conclusion
Tiling pappus_tiling() {
  Tiling t;
  t.black = {"P1", "P2", "P3", "P4", "P5", "P6"};
  t.white = {"L1", "L2", "L3"};
  t.classes = {{"L1"}, {"L2"}, {"L3"}};
  t.tiles = {
      {{"L3", "P1", "L1", "P6"}},
      {{"L3", "P6", "L2", "P5"}},
      {{"L3", "P5", "L1", "P2"}},
      {{"L3", "P2", "L2", "P3"}},
      {{"L3", "P3", "L1", "P4"}},
      {{"L3", "P4", "L2", "P1"}},
      {{"L1", "P3", "L2", "P6"}},
      {{"L2", "P4", "L1", "P5"}},
      {{"L1", "P1", "L2", "P2"}},
  };
  t.conclusion_tile = 2;
  return t;
}

// 15-point instances of the generated statement; columns follow the
// generated label order P1..P6, s/t per line, R per class pair
PointMatrix pappus_master_matrix_q() {
  return rational_matrix(builtin_ring("Q"), {{"1", "2", "1"},
                                             {"10", "8", "7"},
                                             {"0", "0", "1"},
                                             {"5", "2", "1"},
                                             {"30", "8", "9"},
                                             {"4", "0", "1"},
                                             {"42", "16", "17"},
                                             {"44", "16", "18"},
                                             {"9/2", "2", "2"},
                                             {"13/2", "2", "3"},
                                             {"85/2", "18", "17"},
                                             {"165/2", "34", "33"},
                                             {"2", "0", "1"},
                                             {"40", "16", "16"},
                                             {"5/2", "2", "1"}});
}

PointMatrix pappus_master_matrix_f7() {
  return fp_matrix(builtin_ring("F7"), {{1, 5, 0},
                                        {1, 6, 6},
                                        {1, 4, 6},
                                        {1, 5, 2},
                                        {1, 6, 4},
                                        {0, 1, 5},
                                        {0, 5, 6},
                                        {1, 5, 1},
                                        {2, 6, 1},
                                        {0, 5, 5},
                                        {0, 2, 5},
                                        {6, 4, 6},
                                        {1, 2, 3},
                                        {1, 6, 5},
                                        {1, 5, 6}});
}

PointMatrix remark_matrix() {
  const RingPtr dual = builtin_ring("dual");
  RingElement eps = dual->from_monomial(Monomial::var("eps"));
  auto q = [&](long long v) { return dual->from_integer(v); };
  std::vector<Vec3> cols;
  cols.emplace_back(q(1), q(0), q(0));
  cols.emplace_back(q(0), eps, q(0));
  cols.emplace_back(q(0), q(1), eps);
  cols.emplace_back(q(0), q(0), eps);
  cols.emplace_back(q(0), q(5), q(3));
  return PointMatrix(dual, std::move(cols));
}

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](CorpusEntry e) { out.push_back(std::move(e)); };

  {
    CorpusEntry e;
    e.name = "thm16-statement";
    e.kind = "statement";
    e.provenance = "built-in: the 13-point incidence statement with 20 collinearities";
    e.statement = thirteen_point_statement();
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "counterexample-matrix";
    e.kind = "matrix";
    e.provenance = "built-in: 13-point witness over Q[x,eps]/(eps^2, x^2-2-1/4*eps)";
    const RingPtr A = builtin_ring("A");
    e.matrix = evaluate_rows(counterexample_rows(), A,
                             {{"x", A->from_monomial(Monomial::var("x"))},
                              {"eps", A->from_monomial(Monomial::var("eps"))}});
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "solved-matrix-sqrt2";
    e.kind = "matrix";
    e.provenance = "built-in: the solved 13-point family over Q[x]/(x^2-2)";
    const RingPtr r = builtin_ring("sqrt2");
    e.matrix = evaluate_rows(solved_rows(), r, {{"x", r->from_monomial(Monomial::var("x"))}});
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "solved-matrix-f7";
    e.kind = "matrix";
    e.provenance = "built-in: the solved 13-point family over F7 with x = 3";
    e.matrix = solved_matrix_mod_p(7);
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "pappus-statement";
    e.kind = "statement";
    e.provenance = "built-in: the 9-point hexagon statement with full nondegeneracy";
    e.statement = pappus_statement();
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "pappus-matrix-q";
    e.kind = "matrix";
    e.provenance = "built-in: exact rational 9-point hexagon configuration";
    e.matrix = pappus_matrix_q();
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "pappus-matrix-f7";
    e.kind = "matrix";
    e.provenance = "built-in: 9-point hexagon configuration over F7 with no stray collinearity";
    e.matrix = pappus_matrix_f7();
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "pappus-tiling";
    e.kind = "tiling";
    e.provenance = "built-in: torus tiling with 9 tiles, 3 lines, 6 points";
    e.tiling = pappus_tiling();
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "pappus-master-matrix-q";
    e.kind = "matrix";
    e.provenance = "built-in: 15-point instance of the tiling-generated statement over Q";
    e.matrix = pappus_master_matrix_q();
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "pappus-master-matrix-f7";
    e.kind = "matrix";
    e.provenance = "built-in: 15-point instance of the tiling-generated statement over F7";
    e.matrix = pappus_master_matrix_f7();
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "remark-matrix";
    e.kind = "matrix";
    e.provenance = "built-in: 3x5 matrix over Q[eps]/(eps^2) whose nonzero minors violate exchange";
    e.matrix = remark_matrix();
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "thm16-symbolic-matrix";
    e.kind = "symbolicMatrix";
    e.provenance = "built-in: normalized 13-point family in x, y, z, w";
    e.symbolic = symbolic_from_rows({"x", "y", "z", "w"}, family_rows());
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "solved-symbolic-matrix";
    e.kind = "symbolicMatrix";
    e.provenance = "built-in: the solved 13-point family in x";
    e.symbolic = symbolic_from_rows({"x"}, solved_rows());
    add(std::move(e));
  }
  {
    CorpusEntry e;
    e.name = "pappus-symbolic-matrix";
    e.kind = "symbolicMatrix";
    e.provenance = "built-in: normalized hexagon configuration in a, b, c";
    e.symbolic = symbolic_from_rows(
        {"a", "b", "c"},
        {{"1", "0", "1", "0", "1", "1", "0", "1", "1"},
         {"0", "1", "a", "0", "1", "1", "1", "a", "c"},
         {"0", "0", "0", "1", "1", "b", "1", "a*b", "b"}});
    add(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

const CorpusEntry* corpus_find(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

RingPtr builtin_ring(const std::string& name) {
  static const std::map<std::string, RingPtr> rings = [] {
    std::map<std::string, RingPtr> m;
    m["Q"] = Ring::rationals();
    m["F7"] = Ring::prime_field(7);
    m["F11"] = Ring::prime_field(11);
    m["F101"] = Ring::prime_field(101);
    {
      AlgebraSpec spec;
      spec.vars = {"x", "eps"};
      spec.rules.push_back({"eps", 2, {}});
      spec.rules.push_back({"x", 2, {{Monomial(), Rational(2)}, {Monomial::var("eps"), Rational(1, 4)}}});
      m["A"] = Ring::algebra(spec);
    }
    {
      AlgebraSpec spec;
      spec.vars = {"x"};
      spec.rules.push_back({"x", 2, {{Monomial(), Rational(2)}}});
      m["sqrt2"] = Ring::algebra(spec);
    }
    {
      AlgebraSpec spec;
      spec.vars = {"eps"};
      spec.rules.push_back({"eps", 2, {}});
      m["dual"] = Ring::algebra(spec);
    }
    return m;
  }();
  auto it = rings.find(name);
  if (it == rings.end()) fail(ErrKind::Parse, "unknown built-in ring \"" + name + "\"");
  return it->second;
}

const std::vector<IndexTriple>& thirteen_point_collinearities() {
  static const std::vector<IndexTriple> triples = {
      {1, 2, 3},  {1, 2, 13}, {1, 3, 13}, {1, 4, 5},   {1, 6, 9},  {1, 7, 10}, {1, 8, 12},
      {2, 3, 13}, {2, 4, 6},  {2, 5, 8},  {2, 10, 11}, {3, 4, 7},  {3, 5, 6},  {3, 8, 10},
      {4, 9, 10}, {5, 7, 11}, {6, 7, 13}, {6, 8, 11},  {6, 10, 12}, {7, 9, 12}};
  return triples;
}

const std::vector<IndexTriple>& thirteen_point_degenerate_seeds() {
  static const std::vector<IndexTriple> seeds = {
      {1, 3, 4},  {1, 3, 6},  {1, 4, 6},  {3, 4, 6},  {3, 6, 7},  {3, 6, 8},
      {3, 6, 9},  {3, 6, 10}, {3, 6, 11}, {3, 6, 12}, {3, 6, 13}};
  return seeds;
}

const std::vector<IndexTriple>& thirteen_point_highlighted() {
  static const std::vector<IndexTriple> five = {
      {1, 7, 10}, {1, 8, 12}, {2, 10, 11}, {4, 9, 10}, {7, 9, 12}};
  return five;
}

PointMatrix counterexample_matrix_eps_zero() {
  const RingPtr r = builtin_ring("sqrt2");
  RingElement x = r->from_monomial(Monomial::var("x"));
  RingElement zero = r->zero();
  return evaluate_rows(counterexample_rows(), r, {{"x", x}, {"eps", zero}});
}

PointMatrix solved_matrix_mod_p(std::uint64_t p) {
  const RingPtr fp = Ring::prime_field(p);
  std::optional<std::uint64_t> root;
  for (std::uint64_t t = 0; t < p; ++t)
    if (t * t % p == 2 % p) {
      root = t;
      break;
    }
  if (!root)
    fail(ErrKind::HypothesisViolated,
         "2 has no square root mod " + std::to_string(p) + "; x cannot be chosen");
  return evaluate_rows_mod_p(solved_rows(), fp, {{"x", fp->from_coeffs_p({*root})}});
}

}  // namespace absinc

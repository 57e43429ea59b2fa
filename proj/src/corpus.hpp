#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "poly.hpp"
#include "statement.hpp"
#include "tiling.hpp"

namespace absinc {

/// 3 x n matrix of rational-coefficient polynomials, for symbolic minor
/// computations.
struct SymbolicMatrix {
  std::vector<std::string> vars;               // display order
  std::vector<std::array<PolyQ, 3>> columns;   // column i is point p_{i+1}

  std::size_t cols() const { return columns.size(); }
  /// Determinant of the 3x3 minor with 1-based columns i, j, k.
  PolyQ minor(std::size_t i, std::size_t j, std::size_t k) const;
};

struct CorpusEntry {
  std::string name;
  std::string kind;  // statement | matrix | tiling | symbolicMatrix
  std::string provenance;
  std::optional<IncidenceStatement> statement;
  std::optional<PointMatrix> matrix;
  std::optional<Tiling> tiling;
  std::optional<SymbolicMatrix> symbolic;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_find(const std::string& name);

/// Built-in coefficient rings by name: Q, F7, F11, F101, A (the rank-4
/// algebra Q[x,eps]/(eps^2, x^2-2-eps/4)), sqrt2 (Q[x]/(x^2-2)), dual
/// (Q[eps]/(eps^2)).
RingPtr builtin_ring(const std::string& name);

/// The 20 collinearity triples of the built-in 13-point statement.
const std::vector<IndexTriple>& thirteen_point_collinearities();
/// The 11 degenerate-case seed triples for the closure argument.
const std::vector<IndexTriple>& thirteen_point_degenerate_seeds();
/// The five collinearity minors singled out as the non-obvious checks.
const std::vector<IndexTriple>& thirteen_point_highlighted();

/// The 13-point witness matrix with its nilpotent part dropped: the same
/// rational data over Q[x]/(x^2-2) instead of A.
PointMatrix counterexample_matrix_eps_zero();

/// The solved 13-point family reduced mod p and evaluated at a square root
/// of 2; NotAUnit-style rejection (HypothesisViolated) when 2 has no square
/// root mod p.
PointMatrix solved_matrix_mod_p(std::uint64_t p);

}  // namespace absinc

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "statement.hpp"

namespace absinc {

/// Oriented quadrilateral tile: four vertex labels in cyclic order,
/// alternating black and white.
struct Tile {
  std::array<std::string, 4> cycle;
};

/// Quadrilateral tiling of a closed oriented surface with colored vertices,
/// an equivalence relation on the white vertices, and a designated
/// conclusion tile whose white vertices lie in different classes.
struct Tiling {
  std::vector<std::string> black;
  std::vector<std::string> white;
  std::vector<std::vector<std::string>> classes;
  std::vector<Tile> tiles;
  int conclusion_tile{-1};  // 0-based index into tiles
};

struct TilingViolation {
  std::string kind;  // UnknownVertex | TileShape | ColorAlternation | SurfaceClosure |
                     // ClassPartition | NoConclusionPossible | DuplicateLabel | ConclusionTile
  std::string detail;
};

/// Empty exactly when all Tiling invariants hold.
std::vector<TilingViolation> validate_tiling(const Tiling& t);

/// The statement generated by a valid tiling, plus the label map: point index
/// i (1-based) carries labels[i-1]. Black vertices keep their labels and come
/// first in input order; then s/t per white class (classes ordered by their
/// smallest member label); then one R per unordered pair of distinct classes
/// that share a tile, ordered by class-representative pair.
struct GeneratedStatement {
  IncidenceStatement statement;
  std::vector<std::string> labels;
  std::map<std::string, int> index_of;
};

GeneratedStatement generate_statement(const Tiling& t);

/// One bracket term [s_c, t_c, black] keyed by (black vertex, white class).
struct EdgeTerm {
  std::string black;
  std::string cls;  // class representative label
  friend bool operator==(const EdgeTerm&, const EdgeTerm&) = default;
  friend auto operator<=>(const EdgeTerm&, const EdgeTerm&) = default;
};

/// Location of a term occurrence inside the tile-equation system.
struct TermRef {
  int tile{-1};
  int slot{-1};  // 0..3, position of the directed edge in the tile's cycle
  friend bool operator==(const TermRef&, const TermRef&) = default;
};

struct TileEquation {
  int tile{-1};
  bool mixed{false};  // white classes differ
  bool conclusion{false};
  std::vector<std::pair<EdgeTerm, TermRef>> left;   // black -> white edges
  std::vector<std::pair<EdgeTerm, TermRef>> right;  // white -> black edges
};

struct PairingEntry {
  EdgeTerm term;
  TermRef left;   // occurrence on a left-hand side
  TermRef right;  // occurrence on a right-hand side
};

struct ResidualTerm {
  EdgeTerm term;
  std::string side;             // side the term carries in the multiplied-out product
  TermRef at;                   // its occurrence in a non-conclusion equation
  std::string conclusion_side;  // side of the matching term in the conclusion equation
};

/// The telescoping certificate: every term outside the conclusion tile is
/// paired left-against-right across the non-conclusion equations, and the
/// uncancelled residual is exactly the conclusion tile's own equation.
struct CancellationCertificate {
  std::vector<TileEquation> equations;  // one per tile, conclusion flagged
  std::vector<PairingEntry> pairing;
  std::vector<ResidualTerm> residual;
};

CancellationCertificate certify_cancellation(const Tiling& t);

/// check_instance on the generated statement, plus the per-tile unit
/// cross-check: for every non-conclusion mixed tile the two sides of the
/// fundamental identity are compared exactly. Columns of m follow the
/// generated label map.
InstanceReport verify_generated(const Tiling& t, const PointMatrix& m);

}  // namespace absinc

#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "ring.hpp"

namespace absinc {

using IndexPair = std::array<int, 2>;
using IndexTriple = std::array<int, 3>;

IndexPair make_pair_sorted(int a, int b);
IndexTriple make_triple_sorted(int a, int b, int c);

/// An incidence statement: n points, nondegeneracy pairs and triples,
/// collinearity triples, and one conclusion triple. Pairs and triples are
/// stored sorted ascending; indices are 1-based.
struct IncidenceStatement {
  int n{0};
  bool all_pairs{false};  // nondegeneracy pairs = every pair of distinct points
  std::vector<IndexPair> nondeg_pairs;
  std::vector<IndexTriple> nondeg_triples;
  std::vector<IndexTriple> collinear;
  IndexTriple conclusion{0, 0, 0};

  std::vector<IndexPair> effective_pairs() const;
};

/// Empty when every structural invariant holds; otherwise one message per
/// violation.
std::vector<std::string> statement_wellformed(const IncidenceStatement& s);

enum class Verdict { HypothesesFail, ConclusionHolds, ConclusionFails };

const char* verdict_name(Verdict v);

struct PairCheck {
  IndexPair pair;
  bool ok;
};
struct TripleCheck {
  IndexTriple triple;
  bool ok;
  RingElement value;  // minor value for collinearity checks
};
struct ColumnCheck {
  int index;
  bool ok;
};

/// Outcome of checking one statement against one matrix. Every hypothesis is
/// evaluated even after the first failure, for diagnosis.
struct InstanceReport {
  std::vector<ColumnCheck> column_checks;
  std::vector<PairCheck> pair_checks;
  std::vector<TripleCheck> triple_unit_checks;
  std::vector<TripleCheck> collinear_checks;
  RingElement conclusion_value;
  IndexTriple conclusion{0, 0, 0};
  Verdict verdict{Verdict::HypothesesFail};

  bool hypotheses_ok() const;
};

/// Evaluates the four hypothesis families (unit-ideal columns, unit-ideal
/// pair minors, unit nondegeneracy determinants, vanishing collinearity
/// determinants) and the conclusion determinant.
InstanceReport check_instance(const IncidenceStatement& s, const PointMatrix& m);

/// Least fixed point: start with the seed's members; while some triple has
/// two members on the line, add its third.
std::set<int> collinearity_closure(const std::vector<IndexTriple>& triples,
                                   const IndexTriple& seed);

}  // namespace absinc

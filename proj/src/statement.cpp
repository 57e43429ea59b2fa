#include "statement.hpp"

#include <algorithm>

namespace absinc {

IndexPair make_pair_sorted(int a, int b) {
  IndexPair p{a, b};
  std::sort(p.begin(), p.end());
  return p;
}

IndexTriple make_triple_sorted(int a, int b, int c) {
  IndexTriple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<IndexPair> IncidenceStatement::effective_pairs() const {
  if (!all_pairs) return nondeg_pairs;
  std::vector<IndexPair> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

namespace {

bool in_range(int i, int n) { return i >= 1 && i <= n; }

template <class Arr>
bool distinct(const Arr& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] == a[j]) return false;
  return true;
}

template <class Arr>
std::string show(const Arr& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "}";
}

}  // namespace

std::vector<std::string> statement_wellformed(const IncidenceStatement& s) {
  std::vector<std::string> out;
  if (s.n < 3) out.push_back("point count must be at least 3");
  auto check_members = [&](const auto& tuple, const char* what) {
    for (int v : tuple)
      if (!in_range(v, s.n))
        out.push_back(std::string(what) + " " + show(tuple) + " has an index outside 1.." +
                      std::to_string(s.n));
    if (!distinct(tuple))
      out.push_back(std::string(what) + " " + show(tuple) + " has repeated members");
  };
  for (const auto& p : s.nondeg_pairs) check_members(p, "nondegeneracy pair");
  for (const auto& t : s.nondeg_triples) check_members(t, "nondegeneracy triple");
  for (const auto& t : s.collinear) check_members(t, "collinearity triple");
  check_members(s.conclusion, "conclusion");

  for (const auto& t : s.collinear) {
    if (t == s.conclusion)
      out.push_back("conclusion " + show(t) + " duplicates a collinearity condition");
    for (const auto& nd : s.nondeg_triples)
      if (t == nd)
        out.push_back("triple " + show(t) + " is both a collinearity and a nondegeneracy condition");
  }
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HypothesesFail: return "HypothesesFail";
    case Verdict::ConclusionHolds: return "ConclusionHolds";
    case Verdict::ConclusionFails: return "ConclusionFails";
  }
  return "?";
}

bool InstanceReport::hypotheses_ok() const {
  for (const auto& c : column_checks)
    if (!c.ok) return false;
  for (const auto& c : pair_checks)
    if (!c.ok) return false;
  for (const auto& c : triple_unit_checks)
    if (!c.ok) return false;
  for (const auto& c : collinear_checks)
    if (!c.ok) return false;
  return true;
}

InstanceReport check_instance(const IncidenceStatement& s, const PointMatrix& m) {
  if (static_cast<int>(m.cols()) != s.n)
    fail(ErrKind::SizeMismatch, "statement has " + std::to_string(s.n) + " points but matrix has " +
                                    std::to_string(m.cols()) + " columns");
  InstanceReport rep;
  for (int i = 1; i <= s.n; ++i)
    rep.column_checks.push_back({i, column_nondegenerate(m, static_cast<std::size_t>(i))});
  for (const auto& p : s.effective_pairs())
    rep.pair_checks.push_back(
        {p, pair_nondegenerate(m, static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1]))});
  for (const auto& t : s.nondeg_triples) {
    RingElement v = triple_minor(m, t[0], t[1], t[2]);
    rep.triple_unit_checks.push_back({t, is_unit(v), v});
  }
  for (const auto& t : s.collinear) {
    RingElement v = triple_minor(m, t[0], t[1], t[2]);
    rep.collinear_checks.push_back({t, is_zero(v), v});
  }
  rep.conclusion = s.conclusion;
  rep.conclusion_value = triple_minor(m, s.conclusion[0], s.conclusion[1], s.conclusion[2]);
  if (!rep.hypotheses_ok())
    rep.verdict = Verdict::HypothesesFail;
  else
    rep.verdict = is_zero(rep.conclusion_value) ? Verdict::ConclusionHolds : Verdict::ConclusionFails;
  return rep;
}

std::set<int> collinearity_closure(const std::vector<IndexTriple>& triples,
                                   const IndexTriple& seed) {
  std::set<int> on_line(seed.begin(), seed.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : triples) {
      int have = 0;
      for (int v : t) have += on_line.count(v) ? 1 : 0;
      if (have >= 2 && have < 3) {
        for (int v : t) on_line.insert(v);
        changed = true;
      }
    }
  }
  return on_line;
}

}  // namespace absinc

#include "ring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "linalg.hpp"

namespace absinc {

namespace {

constexpr std::size_t kMaxDim = 64;
constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

// Basis listing order: total degree ascending, then higher powers of earlier
// declared variables first. For vars [x, eps] this yields 1, x, eps, eps*x.
bool basis_less(const std::vector<std::string>& vars, const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (const auto& v : vars) {
    unsigned ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea > eb;
  }
  return false;
}

// Rewrites a monomial to its normal form as a coefficient map over basis
// indices. Each substitution strictly lowers total degree, so this halts.
template <class F>
void normal_form(const F& f, const std::vector<std::string>& vars,
                 const std::map<std::string, unsigned>& bound,
                 const std::map<std::string, std::vector<std::pair<Monomial, typename F::Value>>>& rule_rhs,
                 const std::map<Monomial, std::size_t, GrlexLess>& index_of, const Monomial& m0,
                 const typename F::Value& c0, std::vector<typename F::Value>& acc) {
  using V = typename F::Value;
  std::vector<std::pair<Monomial, V>> work{{m0, c0}};
  while (!work.empty()) {
    auto [m, c] = work.back();
    work.pop_back();
    if (f.is_zero(c)) continue;
    const std::string* hot = nullptr;
    for (const auto& v : vars) {
      if (m.exponent(v) >= bound.at(v)) {
        hot = &v;
        break;
      }
    }
    if (!hot) {
      std::size_t idx = index_of.at(m);
      acc[idx] = f.add(acc[idx], c);
      continue;
    }
    Monomial rest = m;
    rest.set_exponent(*hot, m.exponent(*hot) - bound.at(*hot));
    for (const auto& [rm, rc] : rule_rhs.at(*hot))
      work.emplace_back(rest.times(rm), f.mul(c, rc));
  }
}

template <class F>
std::vector<std::vector<typename F::Value>> build_table(
    const F& f, const std::vector<std::string>& vars, const std::map<std::string, unsigned>& bound,
    const std::vector<RewriteRule>& rules, const std::vector<Monomial>& basis) {
  using V = typename F::Value;
  std::map<std::string, std::vector<std::pair<Monomial, V>>> rule_rhs;
  for (const auto& r : rules) {
    std::vector<std::pair<Monomial, V>> terms;
    for (const auto& [m, q] : r.rhs) {
      V v = f.from_rational(q);
      if (!f.is_zero(v)) terms.emplace_back(m, v);
    }
    rule_rhs[r.var] = std::move(terms);
  }
  std::map<Monomial, std::size_t, GrlexLess> index_of;
  for (std::size_t i = 0; i < basis.size(); ++i) index_of[basis[i]] = i;

  const std::size_t d = basis.size();
  std::vector<std::vector<V>> table(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      std::vector<V> acc(d, f.zero());
      normal_form(f, vars, bound, rule_rhs, index_of, basis[i].times(basis[j]), f.one(), acc);
      table[i * d + j] = acc;
      table[j * d + i] = std::move(acc);
    }
  }
  return table;
}

template <class F>
std::vector<typename F::Value> table_mul(const F& f,
                                         const std::vector<std::vector<typename F::Value>>& table,
                                         std::size_t d, const std::vector<typename F::Value>& a,
                                         const std::vector<typename F::Value>& b) {
  using V = typename F::Value;
  std::vector<V> out(d, f.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (f.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (f.is_zero(b[j])) continue;
      V c = f.mul(a[i], b[j]);
      const auto& row = table[i * d + j];
      for (std::size_t k = 0; k < d; ++k)
        if (!f.is_zero(row[k])) out[k] = f.add(out[k], f.mul(c, row[k]));
    }
  }
  return out;
}

template <class F>
void certify_table(const F& f, const std::vector<std::vector<typename F::Value>>& table,
                   std::size_t d) {
  using V = typename F::Value;
  auto unit_vec = [&](std::size_t i) {
    std::vector<V> e(d, f.zero());
    e[i] = f.one();
    return e;
  };
  // unit law and commutativity
  for (std::size_t j = 0; j < d; ++j) {
    if (table[0 * d + j] != unit_vec(j))
      fail(ErrKind::NonAssociative, "basis element 0 is not a multiplicative identity");
    for (std::size_t i = 0; i < d; ++i)
      if (table[i * d + j] != table[j * d + i])
        fail(ErrKind::NonAssociative, "multiplication table is not symmetric");
  }
  // associativity on all basis triples
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto lhs = table_mul(f, table, d, table[i * d + j], unit_vec(k));
        auto rhs = table_mul(f, table, d, unit_vec(i), table[j * d + k]);
        if (lhs != rhs)
          fail(ErrKind::NonAssociative,
               "rules are not confluent: (b" + std::to_string(i) + "*b" + std::to_string(j) +
                   ")*b" + std::to_string(k) + " != b" + std::to_string(i) + "*(b" +
                   std::to_string(j) + "*b" + std::to_string(k) + ")");
      }
}

}  // namespace

RingPtr Ring::rationals() {
  static RingPtr q = [] {
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = Kind::Rationals;
    r->dim_ = 1;
    r->basis_ = {Monomial()};
    r->labels_ = {"1"};
    return RingPtr(r);
  }();
  return q;
}

RingPtr Ring::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(ErrKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxPrime) fail(ErrKind::InvalidRule, "modulus too large (need p < 2^31)");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::PrimeField;
  r->p_ = p;
  r->dim_ = 1;
  r->basis_ = {Monomial()};
  r->labels_ = {"1"};
  return r;
}

RingPtr Ring::algebra(const AlgebraSpec& spec) {
  if (spec.p != 0) {
    if (!is_prime_u64(spec.p)) fail(ErrKind::NotPrime, std::to_string(spec.p) + " is not prime");
    if (spec.p > kMaxPrime) fail(ErrKind::InvalidRule, "modulus too large (need p < 2^31)");
  }
  std::set<std::string> declared;
  for (const auto& v : spec.vars) {
    if (v.empty()) fail(ErrKind::InvalidRule, "empty variable name");
    if (!declared.insert(v).second) fail(ErrKind::InvalidRule, "duplicate variable " + v);
  }
  std::map<std::string, unsigned> bound;
  for (const auto& r : spec.rules) {
    if (!declared.count(r.var)) fail(ErrKind::InvalidRule, "rule for undeclared variable " + r.var);
    if (r.power == 0) fail(ErrKind::InvalidRule, "rule power must be >= 1 for " + r.var);
    if (bound.count(r.var)) fail(ErrKind::InvalidRule, "duplicate rule for " + r.var);
    bound[r.var] = r.power;
    for (const auto& [m, q] : r.rhs) {
      for (const auto& [v, e] : m.exponents())
        if (!declared.count(v))
          fail(ErrKind::InvalidRule, "rule for " + r.var + " uses undeclared variable " + v);
      if (q != 0 && m.degree() >= r.power)
        fail(ErrKind::InvalidRule, "rule for " + r.var + "^" + std::to_string(r.power) +
                                       " has a right-hand monomial " + m.str() +
                                       " of total degree >= " + std::to_string(r.power));
    }
  }
  for (const auto& v : spec.vars)
    if (!bound.count(v))
      fail(ErrKind::InfiniteBasis, "no rule bounds the degree of variable " + v);

  std::size_t d = 1;
  for (const auto& v : spec.vars) {
    d *= bound[v];
    if (d > kMaxDim) fail(ErrKind::InvalidRule, "algebra dimension exceeds 64");
  }

  // enumerate normal-form monomials
  std::vector<Monomial> basis;
  basis.reserve(d);
  std::vector<unsigned> exps(spec.vars.size(), 0);
  for (;;) {
    Monomial m;
    for (std::size_t i = 0; i < spec.vars.size(); ++i) m.set_exponent(spec.vars[i], exps[i]);
    basis.push_back(m);
    std::size_t i = 0;
    while (i < exps.size()) {
      if (++exps[i] < bound[spec.vars[i]]) break;
      exps[i] = 0;
      ++i;
    }
    if (i == exps.size()) break;
  }
  std::sort(basis.begin(), basis.end(),
            [&](const Monomial& a, const Monomial& b) { return basis_less(spec.vars, a, b); });

  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Algebra;
  r->p_ = spec.p;
  r->dim_ = d;
  r->basis_ = basis;
  for (const auto& m : basis) r->labels_.push_back(m.str());
  r->spec_ = spec;
  if (spec.p == 0) {
    QOps f;
    r->qtable_ = build_table(f, spec.vars, bound, spec.rules, basis);
    certify_table(f, r->qtable_, d);
  } else {
    FpOps f{spec.p};
    r->ptable_ = build_table(f, spec.vars, bound, spec.rules, basis);
    certify_table(f, r->ptable_, d);
  }
  return r;
}

bool Ring::same(const Ring& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_ || p_ != o.p_ || dim_ != o.dim_) return false;
  if (kind_ == Kind::Algebra) {
    if (basis_ != o.basis_) return false;
    if (qtable_ != o.qtable_ || ptable_ != o.ptable_) return false;
  }
  return true;
}

std::string Ring::description() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
    case Kind::Algebra: {
      std::string base = p_ == 0 ? "Q" : "F" + std::to_string(p_);
      std::string vars;
      for (const auto& v : spec_.vars) {
        if (!vars.empty()) vars += ",";
        vars += v;
      }
      return base + "[" + vars + "] of dimension " + std::to_string(dim_);
    }
  }
  return "?";
}

RingElement Ring::zero() const {
  if (base_is_rational()) return from_coeffs_q(std::vector<Rational>(dim_, Rational(0)));
  return from_coeffs_p(std::vector<std::uint64_t>(dim_, 0));
}

RingElement Ring::one() const { return from_rational(Rational(1)); }

RingElement Ring::from_integer(long long v) const { return from_rational(Rational(v)); }

RingElement Ring::from_rational(const Rational& q) const {
  if (base_is_rational()) {
    std::vector<Rational> c(dim_, Rational(0));
    c[0] = q;
    return from_coeffs_q(std::move(c));
  }
  FpOps f{p_};
  std::vector<std::uint64_t> c(dim_, 0);
  c[0] = f.from_rational(q);
  return from_coeffs_p(std::move(c));
}

RingElement Ring::from_coeffs_q(std::vector<Rational> coeffs) const {
  if (!base_is_rational()) fail(ErrKind::RingMismatch, "rational coefficients for a mod-p ring");
  if (coeffs.size() != dim_)
    fail(ErrKind::SizeMismatch, "expected " + std::to_string(dim_) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
  return RingElement(shared_from_this(), std::move(coeffs));
}

RingElement Ring::from_coeffs_p(std::vector<std::uint64_t> coeffs) const {
  if (base_is_rational()) fail(ErrKind::RingMismatch, "mod-p coefficients for a Q-based ring");
  if (coeffs.size() != dim_)
    fail(ErrKind::SizeMismatch, "expected " + std::to_string(dim_) + " coefficients, got " +
                                    std::to_string(coeffs.size()));
  for (auto& c : coeffs) c %= p_;
  return RingElement(shared_from_this(), std::move(coeffs));
}

RingElement Ring::from_monomial(const Monomial& m) const {
  if (kind_ != Kind::Algebra) {
    if (m.is_one()) return one();
    fail(ErrKind::RingMismatch, "monomial " + m.str() + " in a base field");
  }
  RingElement acc = one();
  for (const auto& [v, e] : m.exponents()) {
    bool declared = false;
    for (const auto& dv : spec_.vars) declared = declared || dv == v;
    if (!declared) fail(ErrKind::RingMismatch, "unknown variable " + v);
    // locate the basis element equal to v (normal form of a bounded variable
    // with power >= 2 is itself)
    for (unsigned k = 0; k < e; ++k) {
      Monomial mv = Monomial::var(v);
      RingElement ev;
      bool found = false;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i] == mv) {
          if (base_is_rational()) {
            std::vector<Rational> c(dim_, Rational(0));
            c[i] = 1;
            ev = from_coeffs_q(std::move(c));
          } else {
            std::vector<std::uint64_t> c(dim_, 0);
            c[i] = 1;
            ev = from_coeffs_p(std::move(c));
          }
          found = true;
          break;
        }
      }
      if (!found) {
        // the variable is bounded at power 1, so rewrite it
        for (const auto& rule : spec_.rules) {
          if (rule.var == v) {
            RingElement s = zero();
            for (const auto& [rm, rq] : rule.rhs) s = add(s, mul(from_monomial(rm), from_rational(rq)));
            ev = s;
            found = true;
            break;
          }
        }
      }
      if (!found) fail(ErrKind::InternalInconsistency, "no normal form for variable " + v);
      acc = mul(acc, ev);
    }
  }
  return acc;
}

RingElement::RingElement(RingPtr ring, std::vector<Rational> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

RingElement::RingElement(RingPtr ring, std::vector<std::uint64_t> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {}

const Rational& RingElement::as_rational() const {
  if (!ring_ || ring_->kind() != Ring::Kind::Rationals)
    fail(ErrKind::RingMismatch, "element is not a plain rational");
  return qcoeffs()[0];
}

std::uint64_t RingElement::as_residue() const {
  if (!ring_ || ring_->kind() != Ring::Kind::PrimeField)
    fail(ErrKind::RingMismatch, "element is not a prime-field residue");
  return pcoeffs()[0];
}

void require_same_ring(const RingElement& a, const RingElement& b, const char* what) {
  if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring()))
    fail(ErrKind::RingMismatch, std::string(what) + ": operands live in different rings");
}

namespace {

template <class V, class F>
std::vector<V> zip(const F& f, const std::vector<V>& a, const std::vector<V>& b, bool subtract) {
  std::vector<V> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = subtract ? f.sub(a[i], b[i]) : f.add(a[i], b[i]);
  return out;
}

}  // namespace

RingElement add(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b, "add");
  if (a.over_q()) return RingElement(a.ring(), zip(QOps{}, a.qcoeffs(), b.qcoeffs(), false));
  return RingElement(a.ring(), zip(FpOps{a.ring()->prime()}, a.pcoeffs(), b.pcoeffs(), false));
}

RingElement sub(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b, "sub");
  if (a.over_q()) return RingElement(a.ring(), zip(QOps{}, a.qcoeffs(), b.qcoeffs(), true));
  return RingElement(a.ring(), zip(FpOps{a.ring()->prime()}, a.pcoeffs(), b.pcoeffs(), true));
}

RingElement neg(const RingElement& a) { return sub(a.ring()->zero(), a); }

namespace {

template <class F>
std::vector<typename F::Value> element_mul(const F& f, const Ring& ring,
                                           const std::vector<typename F::Value>& a,
                                           const std::vector<typename F::Value>& b,
                                           const std::vector<std::vector<typename F::Value>>& table) {
  const std::size_t d = ring.dim();
  if (d == 1) return {f.mul(a[0], b[0])};
  return table_mul(f, table, d, a, b);
}

}  // namespace

RingElement mul(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b, "mul");
  const Ring& r = *a.ring();
  if (a.over_q()) return RingElement(a.ring(), element_mul(QOps{}, r, a.qcoeffs(), b.qcoeffs(), r.qtable()));
  return RingElement(a.ring(), element_mul(FpOps{r.prime()}, r, a.pcoeffs(), b.pcoeffs(), r.ptable()));
}

bool is_zero(const RingElement& a) {
  if (a.over_q()) {
    for (const auto& c : a.qcoeffs())
      if (c != 0) return false;
    return true;
  }
  for (auto c : a.pcoeffs())
    if (c % a.ring()->prime() != 0) return false;
  return true;
}

bool eq(const RingElement& a, const RingElement& b) {
  if (!a.ring() || !b.ring() || !a.ring()->same(*b.ring())) return false;
  return is_zero(sub(a, b));
}

namespace {

// columns of multiplication-by-a on the canonical basis
template <class F>
std::vector<std::vector<typename F::Value>> regular_rep(const F& f, const Ring& r,
                                                        const std::vector<typename F::Value>& a,
                                                        const std::vector<std::vector<typename F::Value>>& table) {
  const std::size_t d = r.dim();
  std::vector<std::vector<typename F::Value>> cols;
  cols.reserve(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<typename F::Value> e(d, f.zero());
    e[j] = f.one();
    cols.push_back(element_mul(f, r, a, e, table));
  }
  return cols;
}

template <class F>
std::optional<std::vector<typename F::Value>> invert_impl(const F& f, const Ring& r,
                                                          const std::vector<typename F::Value>& a,
                                                          const std::vector<std::vector<typename F::Value>>& table) {
  auto cols = regular_rep(f, r, a, table);
  std::vector<typename F::Value> one(r.dim(), f.zero());
  one[0] = f.one();
  return solve_columns(f, cols, one);
}

}  // namespace

bool is_unit(const RingElement& a) {
  const Ring& r = *a.ring();
  if (r.dim() == 1) return !is_zero(a);
  if (a.over_q()) return columns_invertible(QOps{}, regular_rep(QOps{}, r, a.qcoeffs(), r.qtable()));
  FpOps f{r.prime()};
  return columns_invertible(f, regular_rep(f, r, a.pcoeffs(), r.ptable()));
}

RingElement invert_unit(const RingElement& a) {
  const Ring& r = *a.ring();
  if (r.dim() == 1) {
    if (is_zero(a)) fail(ErrKind::NotAUnit, "0 is not a unit");
    if (a.over_q()) return r.from_rational(Rational(1) / a.qcoeffs()[0]);
    FpOps f{r.prime()};
    return RingElement(a.ring(), std::vector<std::uint64_t>{f.inv(a.pcoeffs()[0])});
  }
  if (a.over_q()) {
    auto inv = invert_impl(QOps{}, r, a.qcoeffs(), r.qtable());
    if (!inv) fail(ErrKind::NotAUnit, element_to_string(a) + " is not a unit");
    RingElement y(a.ring(), std::move(*inv));
    if (!eq(mul(a, y), r.one()))
      fail(ErrKind::InternalInconsistency, "inverse verification failed");
    return y;
  }
  FpOps f{r.prime()};
  auto inv = invert_impl(f, r, a.pcoeffs(), r.ptable());
  if (!inv) fail(ErrKind::NotAUnit, element_to_string(a) + " is not a unit");
  RingElement y(a.ring(), std::move(*inv));
  if (!eq(mul(a, y), r.one()))
    fail(ErrKind::InternalInconsistency, "inverse verification failed");
  return y;
}

namespace {

template <class F>
std::optional<std::vector<typename F::Value>> combination_impl(
    const F& f, const Ring& r, const std::vector<RingElement>& gens,
    std::vector<typename F::Value> (*coeffs_of)(const RingElement&),
    const std::vector<std::vector<typename F::Value>>& table) {
  const std::size_t d = r.dim();
  std::vector<std::vector<typename F::Value>> cols;
  cols.reserve(gens.size() * d);
  for (const auto& g : gens) {
    auto gc = coeffs_of(g);
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<typename F::Value> e(d, f.zero());
      e[j] = f.one();
      cols.push_back(element_mul(f, r, gc, e, table));
    }
  }
  std::vector<typename F::Value> one(d, f.zero());
  one[0] = f.one();
  return solve_columns(f, cols, one);
}

std::vector<Rational> qcoeffs_of(const RingElement& e) { return e.qcoeffs(); }
std::vector<std::uint64_t> pcoeffs_of(const RingElement& e) { return e.pcoeffs(); }

}  // namespace

bool ideal_is_unit(const std::vector<RingElement>& gens) {
  if (gens.empty()) fail(ErrKind::EmptyGeneratorList, "ideal_is_unit of an empty list");
  for (std::size_t i = 1; i < gens.size(); ++i) require_same_ring(gens[0], gens[i], "ideal_is_unit");
  const Ring& r = *gens[0].ring();
  if (r.dim() == 1) {
    for (const auto& g : gens)
      if (!is_zero(g)) return true;
    return false;
  }
  if (gens[0].over_q())
    return combination_impl(QOps{}, r, gens, &qcoeffs_of, r.qtable()).has_value();
  FpOps f{r.prime()};
  return combination_impl(f, r, gens, &pcoeffs_of, r.ptable()).has_value();
}

std::vector<RingElement> one_combination(const std::vector<RingElement>& gens) {
  if (gens.empty()) fail(ErrKind::EmptyGeneratorList, "one_combination of an empty list");
  for (std::size_t i = 1; i < gens.size(); ++i) require_same_ring(gens[0], gens[i], "one_combination");
  const auto ring = gens[0].ring();
  const Ring& r = *ring;
  const std::size_t d = r.dim();

  std::vector<RingElement> out;
  if (d == 1) {
    for (std::size_t i = 0; i < gens.size(); ++i) out.push_back(ring->zero());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!is_zero(gens[i])) {
        out[i] = invert_unit(gens[i]);
        return out;
      }
    }
    fail(ErrKind::NotUnitIdeal, "all generators are zero");
  }

  auto assemble = [&](auto&& solved, auto make_elem) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out.push_back(make_elem(&solved[i * d], d));
    }
  };
  if (gens[0].over_q()) {
    auto sol = combination_impl(QOps{}, r, gens, &qcoeffs_of, r.qtable());
    if (!sol) fail(ErrKind::NotUnitIdeal, "generators do not generate the unit ideal");
    assemble(*sol, [&](const Rational* c, std::size_t n) {
      return ring->from_coeffs_q(std::vector<Rational>(c, c + n));
    });
  } else {
    FpOps f{r.prime()};
    auto sol = combination_impl(f, r, gens, &pcoeffs_of, r.ptable());
    if (!sol) fail(ErrKind::NotUnitIdeal, "generators do not generate the unit ideal");
    assemble(*sol, [&](const std::uint64_t* c, std::size_t n) {
      return ring->from_coeffs_p(std::vector<std::uint64_t>(c, c + n));
    });
  }
  RingElement check = ring->zero();
  for (std::size_t i = 0; i < gens.size(); ++i) check = add(check, mul(out[i], gens[i]));
  if (!eq(check, ring->one()))
    fail(ErrKind::InternalInconsistency, "one_combination does not sum to 1");
  return out;
}

std::string element_to_string(const RingElement& a) {
  const Ring& r = *a.ring();
  if (r.kind() == Ring::Kind::Rationals) return rational_to_string(a.qcoeffs()[0]);
  if (r.kind() == Ring::Kind::PrimeField) return std::to_string(a.pcoeffs()[0]);

  std::string s;
  auto append_term = [&](const std::string& coeff, bool negative, const std::string& label) {
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (label == "1") {
      s += coeff;
    } else if (coeff == "1") {
      s += label;
    } else {
      s += coeff + "*" + label;
    }
  };
  if (a.over_q()) {
    const auto& c = a.qcoeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      Rational abs = c[i] < 0 ? Rational(-c[i]) : c[i];
      append_term(rational_to_string(abs), c[i] < 0, r.basis_labels()[i]);
    }
  } else {
    const auto& c = a.pcoeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      append_term(std::to_string(c[i]), false, r.basis_labels()[i]);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace absinc

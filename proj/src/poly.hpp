#pragma once

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fieldops.hpp"
#include "monomial.hpp"
#include "ring.hpp"

namespace absinc {

/// Sparse multivariate polynomial over an exact field kernel F (QOps or
/// FpOps). Canonical form: no zero coefficients; terms ordered by graded-lex.
template <class F>
class Poly {
 public:
  using V = typename F::Value;
  using TermMap = std::map<Monomial, V, GrlexLess>;

  explicit Poly(F f = F{}) : f_(f) {}

  static Poly zero(F f) { return Poly(f); }
  static Poly constant(F f, const V& c) {
    Poly p(f);
    p.add_term(Monomial(), c);
    return p;
  }
  static Poly variable(F f, const std::string& name) {
    Poly p(f);
    p.add_term(Monomial::var(name), f.one());
    return p;
  }

  const F& field() const { return f_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  std::set<std::string> variables() const {
    std::set<std::string> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m.exponents()) vs.insert(v);
    return vs;
  }

  void add_term(const Monomial& m, const V& c) {
    if (f_.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = f_.add(it->second, c);
      if (f_.is_zero(it->second)) terms_.erase(it);
    }
  }

  V coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? f_.zero() : it->second;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_field(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_field(b);
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, b.f_.neg(c));
    return r;
  }
  friend Poly operator-(const Poly& a) { return Poly(a.f_) - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_field(b);
    Poly r(a.f_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), a.f_.mul(ca, cb));
    return r;
  }
  Poly pow(unsigned e) const {
    Poly r = constant(f_, f_.one());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  Poly scaled(const V& c) const {
    Poly r(f_);
    for (const auto& [m, cc] : terms_) r.add_term(m, f_.mul(cc, c));
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first)) return false;
      if (!a.f_.eq(ia->second, ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Leading term under graded-lex.
  std::pair<Monomial, V> leading() const {
    if (terms_.empty()) fail(ErrKind::DivisionByZero, "leading term of 0");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
  }

  /// Terms printed leading-first: "x^6 - 3*x^5 + ...".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      std::string coeff = f_.str(it->second);
      bool negative = !coeff.empty() && coeff[0] == '-';
      if (negative) coeff = coeff.substr(1);
      if (s.empty()) {
        if (negative) s += "-";
      } else {
        s += negative ? " - " : " + ";
      }
      const std::string label = it->first.str();
      if (label == "1")
        s += coeff;
      else if (coeff == "1")
        s += label;
      else
        s += coeff + "*" + label;
    }
    return s;
  }

 private:
  void check_field(const Poly& o) const {
    if constexpr (std::is_same_v<F, FpOps>) {
      if (f_.p != o.f_.p) fail(ErrKind::FieldMismatch, "polynomials over different prime fields");
    }
  }

  F f_;
  TermMap terms_;
};

using PolyQ = Poly<QOps>;
using PolyP = Poly<FpOps>;

/// Exact division: h with p = q * h, by repeated leading-term elimination
/// under the global graded-lex order. NotDivisible when no such h exists.
template <class F>
Poly<F> poly_exact_divide(const Poly<F>& p, const Poly<F>& q) {
  if (q.is_zero()) fail(ErrKind::DivisionByZero, "polynomial division by zero");
  const F f = p.field();
  Poly<F> rem = p;
  Poly<F> quot(f);
  auto [qm, qc] = q.leading();
  while (!rem.is_zero()) {
    auto [rm, rc] = rem.leading();
    if (!qm.divides(rm))
      fail(ErrKind::NotDivisible, "(" + q.str() + ") does not divide (" + p.str() + ")");
    Monomial tm = qm.divide_into(rm);
    auto tc = f.div(rc, qc);
    Poly<F> t(f);
    t.add_term(tm, tc);
    quot = quot + t;
    rem = rem - t * q;
  }
  return quot;
}

/// Determinant of a 3x3 matrix of polynomials (cofactor expansion along the
/// first column-triple layout: m[c] is column c, m[c][r] its row-r entry).
template <class F>
Poly<F> poly_det3(const std::array<std::array<Poly<F>, 3>, 3>& cols) {
  const auto& a = cols[0][0];
  const auto& b = cols[0][1];
  const auto& c = cols[0][2];
  const auto& d = cols[1][0];
  const auto& e = cols[1][1];
  const auto& ff = cols[1][2];
  const auto& g = cols[2][0];
  const auto& h = cols[2][1];
  const auto& i = cols[2][2];
  return a * (e * i - ff * h) - d * (b * i - c * h) + g * (b * ff - c * e);
}

/// Image of p under the evaluation homomorphism: every variable must be
/// assigned, all values in one ring whose base field matches p's coefficient
/// field.
template <class F>
RingElement poly_evaluate(const Poly<F>& p, const std::map<std::string, RingElement>& assignment) {
  RingPtr ring;
  for (const auto& [v, e] : assignment) {
    if (!ring) {
      ring = e.ring();
    } else if (!e.ring() || !e.ring()->same(*ring)) {
      fail(ErrKind::RingMismatch, "poly_evaluate: assigned values live in different rings");
    }
  }
  for (const auto& v : p.variables())
    if (!assignment.count(v)) fail(ErrKind::UnassignedVariable, "variable " + v + " is unassigned");
  if (!ring) {
    if (!p.variables().empty())
      fail(ErrKind::UnassignedVariable, "no assignment for a non-constant polynomial");
    ring = std::is_same_v<F, QOps> ? Ring::rationals() : Ring::prime_field(p.field().p);
  }
  if constexpr (std::is_same_v<F, QOps>) {
    if (!ring->base_is_rational())
      fail(ErrKind::RingMismatch, "rational-coefficient polynomial over a mod-p ring");
  } else {
    if (ring->base_is_rational() || ring->prime() != p.field().p)
      fail(ErrKind::RingMismatch, "mod-" + std::to_string(p.field().p) +
                                      " polynomial over an incompatible ring");
  }
  RingElement acc = ring->zero();
  for (const auto& [m, c] : p.terms()) {
    RingElement t = [&] {
      if constexpr (std::is_same_v<F, QOps>) return ring->from_rational(c);
      else return ring->from_rational(Rational(c));
    }();
    for (const auto& [v, e] : m.exponents()) {
      const RingElement& val = assignment.at(v);
      for (unsigned k = 0; k < e; ++k) t = mul(t, val);
    }
    acc = add(acc, t);
  }
  return acc;
}

/// Reduce a rational-coefficient polynomial mod p.
PolyP poly_reduce_mod_p(const PolyQ& p, std::uint64_t prime);

/// Parse the polynomial grammar: rational coefficients, + - * ^, parentheses,
/// identifiers [a-zA-Z][a-zA-Z0-9]*. Errors carry line and column.
PolyQ parse_poly(const std::string& text);

/// Parse a rule left side: a pure power "x^2" or bare variable "x".
std::pair<std::string, unsigned> parse_pure_power(const std::string& text);

}  // namespace absinc

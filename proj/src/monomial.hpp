#pragma once

#include <map>
#include <string>

namespace absinc {

/// Power product of named variables; the empty product is 1.
/// No zero exponents are stored.
class Monomial {
 public:
  Monomial() = default;

  static Monomial var(const std::string& name, unsigned e = 1) {
    Monomial m;
    if (e > 0) m.exps_[name] = e;
    return m;
  }

  unsigned exponent(const std::string& v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0u : it->second;
  }

  void set_exponent(const std::string& v, unsigned e) {
    if (e == 0)
      exps_.erase(v);
    else
      exps_[v] = e;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
  }

  bool is_one() const { return exps_.empty(); }

  Monomial times(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [v, e] : o.exps_) r.set_exponent(v, r.exponent(v) + e);
    return r;
  }

  bool divides(const Monomial& o) const {
    for (const auto& [v, e] : exps_)
      if (o.exponent(v) < e) return false;
    return true;
  }

  /// o / *this; caller must ensure divides(o).
  Monomial divide_into(const Monomial& o) const {
    Monomial r = o;
    for (const auto& [v, e] : exps_) r.set_exponent(v, r.exponent(v) - e);
    return r;
  }

  const std::map<std::string, unsigned>& exponents() const { return exps_; }

  /// Variables alphabetically, '^' for powers: "eps*x^2"; "1" for the unit.
  std::string str() const {
    if (exps_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : exps_) {
      if (!s.empty()) s += "*";
      s += v;
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::map<std::string, unsigned> exps_;
};

/// Graded lexicographic order: lower total degree first; ties broken by the
/// first variable (alphabetically) whose exponents differ, smaller exponent
/// meaning smaller monomial. A monomial order, so leading terms multiply.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.exponents().begin(), ea = a.exponents().end();
  auto ib = b.exponents().begin(), eb = b.exponents().end();
  while (ia != ea || ib != eb) {
    if (ia == ea) return true;  // a runs out: exponent 0 vs positive
    if (ib == eb) return false;
    if (ia->first != ib->first) {
      // the alphabetically earlier name has a positive exponent in one only
      return ia->first > ib->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;
}

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

}  // namespace absinc

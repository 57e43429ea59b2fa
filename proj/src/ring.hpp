#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "fieldops.hpp"
#include "monomial.hpp"
#include "rational.hpp"

namespace absinc {

/// One rewrite rule var^power -> polynomial with rational coefficients.
struct RewriteRule {
  std::string var;
  unsigned power{0};
  std::vector<std::pair<Monomial, Rational>> rhs;
};

/// Presentation of a finite-dimensional commutative algebra by rewrite rules.
/// p == 0 means the base field is Q, otherwise F_p.
struct AlgebraSpec {
  std::uint64_t p{0};
  std::vector<std::string> vars;
  std::vector<RewriteRule> rules;
};

class Ring;
class RingElement;
using RingPtr = std::shared_ptr<const Ring>;

/// A coefficient ring: Q, a prime field, or a finite-dimensional commutative
/// algebra over one of those, presented by structure constants derived from
/// rewrite rules. Immutable after construction.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  enum class Kind { Rationals, PrimeField, Algebra };

  static RingPtr rationals();
  static RingPtr prime_field(std::uint64_t p);

  /// Builds the algebra whose basis is the set of normal-form monomials of
  /// the rewrite system. Every variable must be bounded by a rule; right-hand
  /// sides must use strictly smaller total degree than their rule's power.
  /// Commutativity, the unit law, and associativity are certified on the
  /// finished multiplication table (rejecting non-confluent rule sets).
  static RingPtr algebra(const AlgebraSpec& spec);

  Kind kind() const { return kind_; }
  bool base_is_rational() const { return p_ == 0; }
  /// Base-field modulus; 0 when the base field is Q.
  std::uint64_t prime() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const AlgebraSpec& spec() const { return spec_; }

  bool same(const Ring& o) const;
  std::string description() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_integer(long long v) const;
  RingElement from_rational(const Rational& q) const;
  RingElement from_coeffs_q(std::vector<Rational> coeffs) const;
  RingElement from_coeffs_p(std::vector<std::uint64_t> coeffs) const;
  /// Class of a declared variable in the algebra (its normal form).
  RingElement from_monomial(const Monomial& m) const;

  // structure constants: row-major (i * dim + j), each a dim-vector
  const std::vector<std::vector<Rational>>& qtable() const { return qtable_; }
  const std::vector<std::vector<std::uint64_t>>& ptable() const { return ptable_; }

 private:
  Ring() = default;

  Kind kind_{Kind::Rationals};
  std::uint64_t p_{0};
  std::size_t dim_{1};
  std::vector<Monomial> basis_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> qtable_;
  std::vector<std::vector<std::uint64_t>> ptable_;
  AlgebraSpec spec_;
};

/// Element of a Ring: a coefficient vector on the canonical basis (length 1
/// for Q and prime fields). Immutable value type.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingPtr ring, std::vector<Rational> coeffs);
  RingElement(RingPtr ring, std::vector<std::uint64_t> coeffs);

  const RingPtr& ring() const { return ring_; }
  bool over_q() const { return std::holds_alternative<std::vector<Rational>>(coeffs_); }
  const std::vector<Rational>& qcoeffs() const { return std::get<std::vector<Rational>>(coeffs_); }
  const std::vector<std::uint64_t>& pcoeffs() const {
    return std::get<std::vector<std::uint64_t>>(coeffs_);
  }

  /// The unique rational value (Q only).
  const Rational& as_rational() const;
  /// The residue (prime field only).
  std::uint64_t as_residue() const;

 private:
  RingPtr ring_;
  std::variant<std::vector<Rational>, std::vector<std::uint64_t>> coeffs_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement sub(const RingElement& a, const RingElement& b);
RingElement neg(const RingElement& a);
RingElement mul(const RingElement& a, const RingElement& b);
bool is_zero(const RingElement& a);
bool eq(const RingElement& a, const RingElement& b);

/// Invertibility, decided for algebras by the regular representation
/// (multiplication-by-a as a dim x dim matrix over the base field).
bool is_unit(const RingElement& a);
/// The inverse of a unit; NotAUnit otherwise.
RingElement invert_unit(const RingElement& a);

/// Whether the ideal generated by gens is the whole ring. For a
/// d-dimensional algebra the ideal is the base-field span of
/// { g * b : g in gens, b basis }, and it is the unit ideal exactly when 1
/// lies in that span (decided by an exact linear solve).
bool ideal_is_unit(const std::vector<RingElement>& gens);

/// Coefficients r_i with sum r_i * g_i = 1; NotUnitIdeal when impossible.
std::vector<RingElement> one_combination(const std::vector<RingElement>& gens);

/// Human-readable form: "2/7*eps - 1/14*eps*x", "1 + eps", "0", "5", "3/4".
std::string element_to_string(const RingElement& a);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return sub(a, b); }
inline RingElement operator-(const RingElement& a) { return neg(a); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
inline bool operator==(const RingElement& a, const RingElement& b) { return eq(a, b); }
inline bool operator!=(const RingElement& a, const RingElement& b) { return !eq(a, b); }

void require_same_ring(const RingElement& a, const RingElement& b, const char* what);

}  // namespace absinc

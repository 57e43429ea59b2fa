#include "geometry.hpp"

namespace absinc {

Vec3::Vec3(RingElement x1, RingElement x2, RingElement x3)
    : c_{std::move(x1), std::move(x2), std::move(x3)} {
  require_same_ring(c_[0], c_[1], "Vec3");
  require_same_ring(c_[0], c_[2], "Vec3");
}

RingElement dot(const Vec3& x, const Vec3& y) {
  require_same_ring(x[0], y[0], "dot");
  return add(add(mul(x[0], y[0]), mul(x[1], y[1])), mul(x[2], y[2]));
}

Vec3 cross(const Vec3& x, const Vec3& y) {
  require_same_ring(x[0], y[0], "cross");
  return Vec3(sub(mul(x[1], y[2]), mul(x[2], y[1])), sub(mul(x[2], y[0]), mul(x[0], y[2])),
              sub(mul(x[0], y[1]), mul(x[1], y[0])));
}

RingElement bracket(const Vec3& x, const Vec3& y, const Vec3& z) {
  return dot(cross(x, y), z);
}

PointMatrix::PointMatrix(RingPtr ring, std::vector<Vec3> columns)
    : ring_(std::move(ring)), columns_(std::move(columns)) {
  if (columns_.size() < 3)
    fail(ErrKind::SizeMismatch, "a point matrix needs at least 3 columns");
  for (const auto& c : columns_)
    if (!c.ring() || !c.ring()->same(*ring_))
      fail(ErrKind::RingMismatch, "matrix column over a different ring");
}

const Vec3& PointMatrix::column(std::size_t i) const {
  if (i < 1 || i > columns_.size())
    fail(ErrKind::IndexOutOfRange, "column index " + std::to_string(i) + " out of 1.." +
                                       std::to_string(columns_.size()));
  return columns_[i - 1];
}

bool column_nondegenerate(const PointMatrix& m, std::size_t i) {
  return ideal_is_unit(m.column(i).entries());
}

bool pair_nondegenerate(const PointMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) fail(ErrKind::RepeatedIndex, "pair_nondegenerate needs distinct columns");
  // the three 2x2 minors of (col_i | col_j) are the entries of col_i x col_j
  return ideal_is_unit(cross(m.column(i), m.column(j)).entries());
}

RingElement triple_minor(const PointMatrix& m, std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || i == k || j == k)
    fail(ErrKind::RepeatedIndex, "triple_minor needs three distinct columns");
  return bracket(m.column(i), m.column(j), m.column(k));
}

RingElement solve_cross_multiple(const Vec3& v, const Vec3& s, const Vec3& t) {
  require_same_ring(v[0], s[0], "solve_cross_multiple");
  require_same_ring(v[0], t[0], "solve_cross_multiple");
  if (!is_zero(dot(v, s)) || !is_zero(dot(v, t)))
    fail(ErrKind::HypothesisViolated, "v is not orthogonal to both s and t");
  Vec3 c = cross(s, t);
  if (!ideal_is_unit(c.entries()))
    fail(ErrKind::HypothesisViolated, "entries of s x t do not generate the unit ideal");
  auto a = one_combination(c.entries());
  RingElement lambda =
      add(add(mul(a[0], v[0]), mul(a[1], v[1])), mul(a[2], v[2]));
  for (std::size_t i = 0; i < 3; ++i)
    if (!eq(v[i], mul(lambda, c[i])))
      fail(ErrKind::InternalInconsistency, "v != lambda (s x t) after solving");
  return lambda;
}

RingElement fundamental_unit(const Vec3& s, const Vec3& t, const Vec3& v, const Vec3& w,
                             const Vec3& R) {
  require_same_ring(s[0], t[0], "fundamental_unit");
  require_same_ring(s[0], v[0], "fundamental_unit");
  require_same_ring(s[0], w[0], "fundamental_unit");
  require_same_ring(s[0], R[0], "fundamental_unit");
  if (!is_unit(bracket(s, t, v)))
    fail(ErrKind::HypothesisViolated, "[s, t, v] is not a unit");
  if (!is_zero(bracket(s, t, R)) || !is_zero(bracket(v, w, R)))
    fail(ErrKind::HypothesisViolated, "[s, t, R] and [v, w, R] must both vanish");
  const bool vw_unit_ideal = ideal_is_unit(cross(v, w).entries());
  const bool r_unit_ideal = ideal_is_unit(R.entries());
  if (!vw_unit_ideal && !r_unit_ideal)
    fail(ErrKind::HypothesisViolated,
         "neither the entries of v x w nor the entries of R generate the unit ideal");

  Vec3 x = cross(cross(s, t), cross(v, w));
  if (!ideal_is_unit(x.entries())) {
    if (vw_unit_ideal)
      fail(ErrKind::InternalInconsistency,
           "(s x t) x (v x w) must generate the unit ideal when v x w does");
    fail(ErrKind::HypothesisViolated,
         "(s x t) x (v x w) does not generate the unit ideal (degenerate v, w)");
  }
  // R is orthogonal to s x t and to v x w, so R is a multiple of x
  auto a = one_combination(x.entries());
  RingElement u = add(add(mul(a[0], R[0]), mul(a[1], R[1])), mul(a[2], R[2]));
  for (std::size_t i = 0; i < 3; ++i)
    if (!eq(R[i], mul(u, x[i])))
      fail(ErrKind::InternalInconsistency, "R != u ((s x t) x (v x w)) after solving");
  if (!is_unit(u)) {
    if (r_unit_ideal)
      fail(ErrKind::InternalInconsistency, "scalar must be a unit when R generates the unit ideal");
    fail(ErrKind::HypothesisViolated, "scalar " + element_to_string(u) + " is not a unit");
  }
  return u;
}

}  // namespace absinc

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace absinc {

/// Element of R^3 over some coefficient ring.
class Vec3 {
 public:
  Vec3() = default;
  Vec3(RingElement x1, RingElement x2, RingElement x3);

  const RingElement& operator[](std::size_t i) const { return c_[i]; }
  const RingPtr& ring() const { return c_[0].ring(); }
  std::vector<RingElement> entries() const { return {c_[0], c_[1], c_[2]}; }

 private:
  std::array<RingElement, 3> c_;
};

RingElement dot(const Vec3& x, const Vec3& y);
Vec3 cross(const Vec3& x, const Vec3& y);
/// [x, y, z] = (x cross y) . z, the determinant with columns x, y, z.
RingElement bracket(const Vec3& x, const Vec3& y, const Vec3& z);

/// 3 x n matrix of ring elements; column i (1-based) represents point p_i.
class PointMatrix {
 public:
  PointMatrix(RingPtr ring, std::vector<Vec3> columns);

  const RingPtr& ring() const { return ring_; }
  std::size_t cols() const { return columns_.size(); }
  /// 1-based column access.
  const Vec3& column(std::size_t i) const;

 private:
  RingPtr ring_;
  std::vector<Vec3> columns_;
};

/// Entries of column i generate the unit ideal.
bool column_nondegenerate(const PointMatrix& m, std::size_t i);
/// The three 2x2 minors of columns i and j generate the unit ideal.
bool pair_nondegenerate(const PointMatrix& m, std::size_t i, std::size_t j);
/// Determinant of the 3x3 minor with columns i, j, k in that order.
RingElement triple_minor(const PointMatrix& m, std::size_t i, std::size_t j, std::size_t k);

/// Given v.s = v.t = 0 and unit-ideal entries of s x t, the unique scalar
/// lambda with v = lambda (s x t), built from a combination with
/// a1*c1 + a2*c2 + a3*c3 = 1 as lambda = a1*v1 + a2*v2 + a3*v3.
RingElement solve_cross_multiple(const Vec3& v, const Vec3& s, const Vec3& t);

/// The scalar u with R = u * ((s x t) x (v x w)), a unit under the stated
/// hypotheses: [s,t,v] a unit, [s,t,R] = [v,w,R] = 0, and unit-ideal entries
/// of v x w or of R. The returned value satisfies is_unit(u).
RingElement fundamental_unit(const Vec3& s, const Vec3& t, const Vec3& v, const Vec3& w,
                             const Vec3& R);

}  // namespace absinc

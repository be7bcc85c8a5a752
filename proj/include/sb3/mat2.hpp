#pragma once

#include <string>
#include <utility>

#include "sb3/laurent_poly.hpp"
#include "sb3/quad_int.hpp"

namespace sb3 {

/// 2x2 matrix over a commutative ring, row-major.
template <class Ring>
struct Mat2 {
  Ring m11, m12, m21, m22;

  static Mat2 identity(const Ring& one) {
    Ring zero = one - one;
    return {one, zero, zero, one};
  }

  Ring det() const { return m11 * m22 - m12 * m21; }

  Mat2 operator-() const { return {-m11, -m12, -m21, -m22}; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
  }
  Mat2& operator*=(const Mat2& b) { return *this = *this * b; }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  template <class F>
  auto map(F&& f) const -> Mat2<decltype(f(m11))> {
    return {f(m11), f(m12), f(m21), f(m22)};
  }
};

template <class Ring>
Mat2<Ring> mat_mul(const Mat2<Ring>& a, const Mat2<Ring>& b) {
  return a * b;
}

template <class Ring>
Ring mat_det(const Mat2<Ring>& a) {
  return a.det();
}

using PolyMatrix = Mat2<LaurentPoly>;
using QuadMatrix = Mat2<QuadInt>;

/// Canonical byte-string form "m11;m12;m21;m22", used as a formal-sum key.
template <class Ring>
std::string serialize(const Mat2<Ring>& m) {
  return m.m11.to_string() + ";" + m.m12.to_string() + ";" + m.m21.to_string() + ";" +
         m.m22.to_string();
}

}  // namespace sb3

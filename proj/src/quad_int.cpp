#include "sb3/quad_int.hpp"

#include "sb3/laurent_poly.hpp"

namespace sb3 {

QuadInt QuadInt::operator-() const { return {checked_mul(a, -1), checked_mul(b, -1)}; }

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) { return x + (-y); }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  // (a + bw)(c + dw) = (ac - 5bd) + (ad + bc)w
  return {checked_add(checked_mul(x.a, y.a), checked_mul(QuadInt::kOmegaSquared, checked_mul(x.b, y.b))),
          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.a))};
}

std::string QuadInt::to_string() const {
  if (b == 0) return std::to_string(a);
  std::string w = (b == 1) ? "w" : (b == -1) ? "-w" : std::to_string(b) + "*w";
  if (a == 0) return w;
  if (b < 0) {
    std::string mag = (b == -1) ? "w" : std::to_string(-b) + "*w";
    return std::to_string(a) + " - " + mag;
  }
  return std::to_string(a) + " + " + w;
}

}  // namespace sb3

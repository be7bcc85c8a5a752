#pragma once

#include <cstdint>
#include <string>

namespace sb3 {

/// a + b*w in Z[w] with w^2 = -5.
struct QuadInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static constexpr std::int64_t kOmegaSquared = -5;

  static QuadInt omega() { return {0, 1}; }

  QuadInt operator-() const;
  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  QuadInt& operator+=(const QuadInt& y) { return *this = *this + y; }
  QuadInt& operator*=(const QuadInt& y) { return *this = *this * y; }
  friend bool operator==(const QuadInt&, const QuadInt&) = default;

  /// "3", "-w", "1 + 2*w".
  std::string to_string() const;
};

}  // namespace sb3

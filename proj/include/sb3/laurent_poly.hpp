#pragma once

// Sparse integer polynomials in t^{±1}, y and the indexed variables y1..yM.
//
// A polynomial stores its non-zero terms sorted by exponent vector, compared
// lexicographically with t most significant, then y, then y1..yM. Two
// polynomials are equal iff their term lists are identical.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sb3 {

inline constexpr int kMaxIndexedVars = 16;

/// A variable of the polynomial ring: t, y, or one of y1..y16.
class Var {
 public:
  static constexpr Var t() { return Var(0); }
  static constexpr Var y() { return Var(1); }
  /// y_i for 1 <= i <= kMaxIndexedVars.
  static Var indexed(int i);

  constexpr int slot() const { return slot_; }
  constexpr bool is_t() const { return slot_ == 0; }
  constexpr bool is_indexed() const { return slot_ >= 2; }
  constexpr int index() const { return slot_ - 1; }

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  constexpr explicit Var(int slot) : slot_(slot) {}
  int slot_;
};

using Exponents = std::array<std::int16_t, 2 + kMaxIndexedVars>;

class LaurentPoly {
 public:
  using Term = std::pair<Exponents, std::int64_t>;

  /// The zero polynomial over t, y, y1..y{indexed_vars}.
  explicit LaurentPoly(int indexed_vars = 0);

  static LaurentPoly constant(std::int64_t c, int indexed_vars = 0);
  static LaurentPoly variable(Var v, int indexed_vars = 0);
  /// coeff * t^t_exp.
  static LaurentPoly t_power(int t_exp, std::int64_t coeff = 1, int indexed_vars = 0);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms, int indexed_vars = 0);

  int indexed_vars() const { return indexed_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Same ring, other universe. Fails if a dropped variable occurs.
  LaurentPoly with_universe(int indexed_vars) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned n) const;

  /// Largest exponent of v over all terms (0 for the zero polynomial).
  int max_degree(Var v) const;
  int min_degree(Var v) const;

  /// Replaces the variables named in `images`. Every image must live in
  /// `target_vars` indexed slots (default: this polynomial's universe); the
  /// image of t must be a unit +-t^k. Variables not replaced are carried over.
  LaurentPoly substitute(const std::map<Var, LaurentPoly>& images, int target_vars) const;
  LaurentPoly substitute(const std::map<Var, LaurentPoly>& images) const {
    return substitute(images, indexed_vars_);
  }

  /// Swaps indices of y1..yM according to `perm` (y_i -> y_{perm[i-1]+1}).
  LaurentPoly permute_indexed(const std::vector<int>& perm) const;

  /// Canonical text, e.g. "1 - y - t*y", "-t^-1", "y1*y2".
  std::string to_string() const;

 private:
  void check_universe(const LaurentPoly& other) const;
  void add_scaled(const LaurentPoly& other, std::int64_t sign);

  int indexed_vars_;
  std::vector<Term> terms_;
};

/// Exact-arithmetic helpers; throw std::overflow_error on int64 overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace sb3

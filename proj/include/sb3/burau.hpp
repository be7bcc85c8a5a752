#pragma once

// The singular Burau representation of SB3 into 2x2 matrices over
// Z[t, t^-1, y]:
//
//   s1 -> [[-t, 1], [0, 1]]    s2 -> [[1, 0], [t, -t]]    t1 -> [[1-y-ty, y], [0, 1]]
//
// The representation is faithful, so matrix equality decides equality of
// singular braids. Specializing t = -1, y = w (w^2 = -5) lands in PE2(Z[w]).

#include <cstdint>

#include "sb3/mat2.hpp"
#include "sb3/words.hpp"

namespace sb3 {

struct BurauImage {
  PolyMatrix matrix;
  std::int64_t exponent_sum = 0;
  std::int64_t singular_count = 0;
};

struct Pe2Image {
  QuadMatrix matrix;
};

/// Matrix of a single letter. t1^-1 is rejected with InputError.
PolyMatrix generator_matrix(Letter l);

/// 1 - y - t*y, the determinant of the singular generator.
LaurentPoly singular_determinant();

/// Left-to-right product of generator matrices.
BurauImage burau_eval(const Word& w);

/// Decides equality in SB3 by comparing Burau matrices.
bool burau_equal(const Word& w1, const Word& w2);

/// det = (-t)^e * (1 - y - t*y)^m for the tallied e and m.
bool det_invariant_check(const Word& w);

/// Evaluates at t = -1, y = w. Entries must not use indexed variables.
QuadInt specialize_pe2(const LaurentPoly& p);
Pe2Image specialize_pe2(const BurauImage& img);
QuadMatrix specialize_pe2(const PolyMatrix& m);

/// Equality in PSL2: M = N or M = -N.
bool projective_eq(const QuadMatrix& m, const QuadMatrix& n);

}  // namespace sb3

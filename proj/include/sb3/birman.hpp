#pragma once

// The Birman homomorphism and its shadow on Burau matrices.
//
//   eta : SB3 -> Z[B3],  t1 -> s1 - s1^-1, s_j -> s_j
//
// The modified Burau matrix gives the j-th singular crossing (in reading
// order) its own variable y_j; it is considered up to permutation of the
// y-indices. rho sums all 2^m resolutions y_j -> 1 (sign +) or y_j -> t^-1
// (sign -) in the group ring of matrices, and p sends every y_j to y. The
// square
//
//   SB3 --eta--> Z[B3]
//    |             |
//  beta~        Z[beta]
//    v             v
//   M2(t, y1..ym) --rho--> Z[M2(t)]
//
// commutes, and p . beta~ is the singular Burau representation.
//
// eta and rho have OpenMP kernels; the *_serial versions are the reference
// implementations they are tested against.

#include <cstdint>
#include <utility>
#include <vector>

#include "sb3/band.hpp"
#include "sb3/formal_sum.hpp"
#include "sb3/mat2.hpp"
#include "sb3/words.hpp"

namespace sb3 {

inline constexpr int kDefaultBirmanSingularCap = 8;

/// Singularity cap for eta and the modified Burau matrix: 8, or the value of
/// SB3_MAX_SING (clamped to kMaxIndexedVars).
int birman_singular_cap();

/// Element of Z[B3], keyed by rendered band normal forms.
class GroupRingElt {
 public:
  void add(const NormalForm& nf, std::int64_t coeff) { sum_.add(render_normal_form(nf), coeff); }
  const FormalSum& sum() const { return sum_; }
  std::vector<std::pair<NormalForm, std::int64_t>> entries() const;
  friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

 private:
  FormalSum sum_;
};

/// Element of Z[M2(Z[t, t^-1])], keyed by serialized matrices.
using MatrixRingSum = FormalSum;

struct ModifiedBurauOrbit {
  PolyMatrix canonical;  // over t, y1..ym
  int m = 0;
  friend bool operator==(const ModifiedBurauOrbit&, const ModifiedBurauOrbit&) = default;
};

GroupRingElt eta(const Word& w);
GroupRingElt eta_serial(const Word& w);

/// Product with the j-th tau mapped to [[1 - yj - t*yj, yj], [0, 1]], before
/// quotienting by index permutations.
PolyMatrix modified_burau_matrix(const Word& w);
/// Smallest relabeling of y1..ym under a fixed order: first the sequence of
/// relabeling-invariant index colours, then the sorted term lists.
ModifiedBurauOrbit canonicalize_orbit(const PolyMatrix& m, int indexed_vars);
ModifiedBurauOrbit modified_burau(const Word& w);

/// Substitutes y_j -> t^-1 where bit j-1 of `left_handed` is set, else 1.
PolyMatrix resolve(const PolyMatrix& m, int indexed_vars, std::uint64_t left_handed);

MatrixRingSum rho(const ModifiedBurauOrbit& orbit);
MatrixRingSum rho_serial(const ModifiedBurauOrbit& orbit);

/// Every y_j -> y.
PolyMatrix project_p(const ModifiedBurauOrbit& orbit);
PolyMatrix project_p(const PolyMatrix& m, int indexed_vars);

MatrixRingSum groupring_burau(const GroupRingElt& x);

bool check_diagram(const Word& w);

/// Largest exponent of any y_j in any entry.
int max_indexed_degree(const ModifiedBurauOrbit& orbit);

}  // namespace sb3

#pragma once

// Word-problem deciders for SB3 and SG3.
//
// recursion: peel the last singular crossing off both words. With
//   w1 = X t1 b,  w2 = Y t1 c   (b, c tau-free)
// the words are equal iff b c^-1 lies in H3 = <s1, (s2 s1)^3> (the
// centralizer of t1 in B3) and X b = Y c; the base case is B3 equality.
//
// pinch: SG3 is an HNN extension of B3 with stable letter t1 and associated
// subgroup H3. A word with tau letters is trivial only if it contains
// t1^-+1 C t1^+-1 with C in H3, which may be replaced by C (Britton).

#include <string>
#include <vector>

#include "sb3/words.hpp"

namespace sb3 {

enum class Method { Burau, Recursion, Pinch };

const char* method_name(Method m);

struct Verdict {
  bool equal = false;
  Method method = Method::Burau;
  std::vector<std::string> trace;
};

/// Solvers refuse inputs with more singular letters than this.
inline constexpr std::size_t kSolverSingularCap = 64;

Verdict equal_burau(const Word& w1, const Word& w2);
/// Monoid words only; group-mode input raises InputError.
Verdict equal_sb3(const Word& w1, const Word& w2);
Verdict is_trivial_sg3(const Word& w);
/// Monoid words are lifted to SG3.
Verdict equal_sg3(const Word& w1, const Word& w2);

Verdict decide(Method m, const Word& w1, const Word& w2);

}  // namespace sb3

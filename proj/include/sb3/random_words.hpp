#pragma once

// Seeded word generation.
//
// Rng is SplitMix64: next() adds 0x9E3779B97F4A7C15 to the state and returns
// the mixed value. Rng::stream(seed, i) starts a generator whose state is the
// (i+1)-th output of Rng(seed), so sample i of any seeded run is reproducible
// without generating samples 0..i-1. Draws over n choices take next() % n.

#include <cstddef>
#include <cstdint>

#include "sb3/words.hpp"

namespace sb3 {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

/// Length uniform in [0, max_len]; letters uniform over s1^+-1, s2^+-1, t1
/// (and t1^-1 in group mode). Once max_sing tau letters are placed, further
/// letters are drawn uniformly from the sigma letters.
Word random_word(Rng& rng, std::size_t max_len, Mode mode, std::size_t max_sing);
Word random_word(std::uint64_t seed, std::size_t max_len, Mode mode, std::size_t max_sing);

/// How a sample pair for the cross-check was built.
enum class PairKind : std::uint8_t {
  Independent,  // two unrelated random words
  Equal,        // same word with relation instances spliced in on each side
  NearMiss,     // an Equal pair with one letter of the second word replaced
};

const char* pair_kind_name(PairKind k);

struct SamplePair {
  Word w1;
  Word w2;
  PairKind kind = PairKind::Independent;
};

/// Base words carry at most this many singular letters; spliced relations add
/// at most kMaxSplices more.
inline constexpr std::size_t kSampleBaseSing = 4;
inline constexpr std::size_t kMaxSplices = 3;

/// Sample `index` of the run seeded with `seed` (kind cycles through index % 3).
SamplePair sample_pair(std::uint64_t seed, std::uint64_t index, std::size_t max_len);

/// Splices 1..kMaxSplices relation instances (lhs on one side, rhs on the other)
/// into a copy of w. The two results are equal in SB3.
std::pair<Word, Word> perturb_equal(Rng& rng, const Word& w);

}  // namespace sb3

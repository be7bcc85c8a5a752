#include "sb3/random_words.hpp"

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "sb3/presentation.hpp"

namespace sb3 {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::array<Letter, 4> kSigmaAlphabet{kS1, kS1Inv, kS2, kS2Inv};
constexpr std::array<Letter, 6> kAlphabet{kS1, kS1Inv, kS2, kS2Inv, kTau, kTauInv};

struct Splice {
  std::vector<Letter> lhs;
  std::vector<Letter> rhs;
};

std::vector<Splice> build_splices() {
  std::vector<Splice> out;
  for (std::string_view name : {"reduced", "classical"})
    for (const auto& r : relation_set(name).pairs)
      out.push_back({r.lhs.letters(), r.rhs.letters()});
  for (Letter g : kSigmaAlphabet) out.push_back({{g, g.inverse()}, {}});
  return out;
}

const std::vector<Splice>& splices() {
  static const std::vector<Splice> table = build_splices();
  return table;
}

}  // namespace

Rng Rng::stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(mix(seed + (index + 1) * kGamma));
}

std::uint64_t Rng::next() {
  state_ += kGamma;
  return mix(state_);
}

Word random_word(Rng& rng, std::size_t max_len, Mode mode, std::size_t max_sing) {
  const std::size_t len = static_cast<std::size_t>(rng.below(max_len + 1));
  const std::uint64_t alphabet = (mode == Mode::Group) ? 6 : 5;
  std::vector<Letter> letters;
  letters.reserve(len);
  std::size_t taus = 0;
  for (std::size_t i = 0; i < len; ++i) {
    Letter l = kAlphabet[rng.below(alphabet)];
    if (l.is_tau()) {
      if (taus >= max_sing) {
        l = kSigmaAlphabet[rng.below(kSigmaAlphabet.size())];
      } else {
        ++taus;
      }
    }
    letters.push_back(l);
  }
  return Word(std::move(letters), mode);
}

Word random_word(std::uint64_t seed, std::size_t max_len, Mode mode, std::size_t max_sing) {
  Rng rng(seed);
  return random_word(rng, max_len, mode, max_sing);
}

const char* pair_kind_name(PairKind k) {
  switch (k) {
    case PairKind::Independent: return "independent";
    case PairKind::Equal: return "equal";
    case PairKind::NearMiss: return "near-miss";
  }
  return "?";
}

std::pair<Word, Word> perturb_equal(Rng& rng, const Word& w) {
  // Segments pair up corresponding pieces of the two output words.
  std::vector<Splice> segments;
  for (const auto& l : w.letters()) segments.push_back({{l}, {l}});
  const auto& table = splices();
  const auto inserts = 1 + rng.below(kMaxSplices);
  for (std::uint64_t i = 0; i < inserts; ++i) {
    Splice s = table[rng.below(table.size())];
    if (rng.below(2) == 1) std::swap(s.lhs, s.rhs);
    const auto at = static_cast<std::ptrdiff_t>(rng.below(segments.size() + 1));
    segments.insert(segments.begin() + at, std::move(s));
  }
  std::vector<Letter> a, b;
  for (const auto& s : segments) {
    a.insert(a.end(), s.lhs.begin(), s.lhs.end());
    b.insert(b.end(), s.rhs.begin(), s.rhs.end());
  }
  return {Word(std::move(a), w.mode()), Word(std::move(b), w.mode())};
}

SamplePair sample_pair(std::uint64_t seed, std::uint64_t index, std::size_t max_len) {
  Rng rng = Rng::stream(seed, index);
  const auto kind = static_cast<PairKind>(index % 3);
  if (kind == PairKind::Independent) {
    Word a = random_word(rng, max_len, Mode::Monoid, kSampleBaseSing);
    Word b = random_word(rng, max_len, Mode::Monoid, kSampleBaseSing);
    return {std::move(a), std::move(b), kind};
  }
  auto [a, b] = perturb_equal(rng, random_word(rng, max_len, Mode::Monoid, kSampleBaseSing));
  if (kind == PairKind::NearMiss) {
    // a x c = a x' c forces x = x', so replacing one letter always breaks equality.
    std::vector<Letter> letters = b.letters();
    if (letters.empty()) {
      letters.push_back(kS1);
    } else {
      const auto at = rng.below(letters.size());
      Letter replacement = letters[at];
      while (replacement == letters[at]) replacement = kAlphabet[rng.below(5)];
      letters[at] = replacement;
    }
    b = Word(std::move(letters));
  }
  return {std::move(a), std::move(b), kind};
}

}  // namespace sb3

#pragma once

// Band-generator normal form for the braid group B3.
//
// With a1 = s1, a2 = s2, a3 = s2 s1 s2^-1 and delta = a2 a1 = a3 a2 = a1 a3,
// every element of B3 is uniquely delta^k P where P is a positive word in
// a1, a2, a3 containing none of a2 a1, a3 a2, a1 a3.
//
// Conjugation by delta cycles the band letters: delta a1 delta^-1 = a3,
// delta a2 delta^-1 = a1, delta a3 delta^-1 = a2. Hence a_i delta = delta a_{i+1}
// (indices mod 3), which is what lets all delta powers move to the front.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sb3/words.hpp"

namespace sb3 {

/// Band letter index: 1, 2 or 3.
using BandLetter = std::uint8_t;

/// One item of a raw band sequence: a delta^{+-1} or a band letter.
struct BandItem {
  enum class Kind : std::uint8_t { Delta, Atom } kind;
  std::int8_t value;  // delta: +1/-1; atom: 1..3

  static BandItem delta(int sign) { return {Kind::Delta, static_cast<std::int8_t>(sign)}; }
  static BandItem atom(int index) { return {Kind::Atom, static_cast<std::int8_t>(index)}; }
  friend bool operator==(const BandItem&, const BandItem&) = default;
};

struct NormalForm {
  std::int64_t delta_exp = 0;
  std::vector<BandLetter> tail;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

/// Witness that an element equals s1^k (s2 s1)^{3l}.
struct H3Witness {
  std::int64_t k = 0;
  std::int64_t l = 0;
  friend bool operator==(const H3Witness&, const H3Witness&) = default;
};

/// s1 -> a1, s2 -> a2, s1^-1 -> delta^-1 a2, s2^-1 -> delta^-1 a3. Rejects tau.
std::vector<BandItem> to_band(const Word& w);

NormalForm normalize_band(const std::vector<BandItem>& raw);

/// Normal form of a tau-free word.
NormalForm normal_form(const Word& w);

bool nf_equal(const Word& w1, const Word& w2);

/// Is the tail free of a2 a1, a3 a2 and a1 a3?
bool is_reduced_tail(const std::vector<BandLetter>& tail);

/// A sigma word for delta^k P (delta = s2 s1, a3 = s2 s1 s2^-1).
Word to_word(const NormalForm& nf);

/// "a2 a3 a1"; empty tail renders as "".
std::string render_tail(const std::vector<BandLetter>& tail);
/// "delta^2 a2 a3", "a1", "delta^-1", and "1" for the identity.
std::string render_normal_form(const NormalForm& nf);
/// Inverse of render_normal_form; throws ParseError.
NormalForm parse_normal_form(const std::string& text);

/// s1^k (s2 s1)^{3l} as a word.
Word h3_element(std::int64_t k, std::int64_t l);

/// Membership in H3 = <s1, (s2 s1)^3>, with the exponents as witness.
std::optional<H3Witness> membership_h3(const Word& w);
std::optional<H3Witness> membership_h3(const NormalForm& nf);

}  // namespace sb3

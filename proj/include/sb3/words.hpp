#pragma once

// Words over the generators s1, s2 (braid crossings) and t1 (the singular
// crossing), with the text grammar
//
//   word := "" | term (whitespace term)*
//   term := gen ("^" signed-int)?
//   gen  := "s1" | "s2" | "t1"
//
// A term with exponent k expands to |k| letters carrying sign(k).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sb3 {

enum class Generator : std::uint8_t { Sigma1, Sigma2, Tau };

/// Monoid words may not contain t1^-1; group words (SG3) may.
enum class Mode : std::uint8_t { Monoid, Group };

struct Letter {
  Generator gen;
  std::int8_t sign;  // +1 or -1

  Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  bool is_tau() const { return gen == Generator::Tau; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline constexpr Letter kS1{Generator::Sigma1, 1};
inline constexpr Letter kS1Inv{Generator::Sigma1, -1};
inline constexpr Letter kS2{Generator::Sigma2, 1};
inline constexpr Letter kS2Inv{Generator::Sigma2, -1};
inline constexpr Letter kTau{Generator::Tau, 1};
inline constexpr Letter kTauInv{Generator::Tau, -1};

class Word {
 public:
  Word() = default;
  /// Throws InputError if a monoid word would contain t1^-1.
  explicit Word(std::vector<Letter> letters, Mode mode = Mode::Monoid);

  const std::vector<Letter>& letters() const { return letters_; }
  Mode mode() const { return mode_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Number of tau letters counted with sign.
  std::int64_t singular_count() const;
  /// Number of tau letters regardless of sign.
  std::size_t tau_letters() const;
  /// Sum of sigma signs.
  std::int64_t exponent_sum() const;
  bool has_tau() const { return tau_letters() > 0; }
  bool has_tau_inverse() const;

  /// The same letters viewed as an element of SG3.
  Word as_group() const { return Word(letters_, Mode::Group); }
  /// Monoid view; throws InputError if t1^-1 is present.
  Word as_monoid() const { return Word(letters_, Mode::Monoid); }

  /// Concatenation; the result is a group word if either operand is.
  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
  Mode mode_ = Mode::Monoid;
};

/// Tau-free blocks b0..bm around m tau letters.
struct SplitForm {
  std::vector<Word> blocks;
  std::vector<std::int8_t> tau_signs;

  Word reassemble(Mode mode) const;
};

Word parse(std::string_view text, Mode mode = Mode::Monoid);
/// Run-length rendering, e.g. "s1^3 s2^-1 t1"; the empty word renders as "".
std::string render(const Word& w);

/// Reverse and flip every sign. Monoid words containing tau are rejected.
Word invert(const Word& w);
Word free_reduce(const Word& w);
SplitForm split_at_tau(const Word& w);

}  // namespace sb3

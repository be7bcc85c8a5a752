#include "sb3/words.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "sb3/errors.hpp"

namespace sb3 {

namespace {

// Single-letter words do not need more than this many letters per term.
constexpr long kMaxPower = 1 << 20;

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::Sigma1: return "s1";
    case Generator::Sigma2: return "s2";
    case Generator::Tau: return "t1";
  }
  return "?";
}

}  // namespace

Word::Word(std::vector<Letter> letters, Mode mode) : letters_(std::move(letters)), mode_(mode) {
  for (const auto& l : letters_) {
    if (l.sign != 1 && l.sign != -1) throw UsageError("letter sign must be +1 or -1");
    if (mode_ == Mode::Monoid && l.is_tau() && l.sign < 0)
      throw InputError("t1^-1 is not an element of the singular braid monoid");
  }
}

std::int64_t Word::singular_count() const {
  std::int64_t m = 0;
  for (const auto& l : letters_)
    if (l.is_tau()) m += l.sign;
  return m;
}

std::size_t Word::tau_letters() const {
  std::size_t n = 0;
  for (const auto& l : letters_)
    if (l.is_tau()) ++n;
  return n;
}

std::int64_t Word::exponent_sum() const {
  std::int64_t e = 0;
  for (const auto& l : letters_)
    if (!l.is_tau()) e += l.sign;
  return e;
}

bool Word::has_tau_inverse() const {
  for (const auto& l : letters_)
    if (l.is_tau() && l.sign < 0) return true;
  return false;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  Mode mode = (a.mode_ == Mode::Group || b.mode_ == Mode::Group) ? Mode::Group : Mode::Monoid;
  return Word(std::move(letters), mode);
}

Word SplitForm::reassemble(Mode mode) const {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) letters.push_back({Generator::Tau, tau_signs[i - 1]});
    const auto& b = blocks[i].letters();
    letters.insert(letters.end(), b.begin(), b.end());
  }
  return Word(std::move(letters), mode);
}

Word parse(std::string_view text, Mode mode) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (true) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    const std::size_t start = i;
    if (i + 1 >= n) throw ParseError("unknown token '" + std::string(text.substr(i)) + "'", start);
    Generator g;
    std::string_view head = text.substr(i, 2);
    if (head == "s1") g = Generator::Sigma1;
    else if (head == "s2") g = Generator::Sigma2;
    else if (head == "t1") g = Generator::Tau;
    else {
      std::size_t end = i;
      while (end < n && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
      throw ParseError("unknown token '" + std::string(text.substr(i, end - i)) + "'", start);
    }
    i += 2;
    long power = 1;
    if (i < n && text[i] == '^') {
      ++i;
      const std::size_t exp_start = i;
      const char* first = text.data() + i;
      const char* last = text.data() + n;
      auto [ptr, ec] = std::from_chars(first, last, power);
      if (ec != std::errc() || ptr == first)
        throw ParseError("malformed exponent", exp_start);
      i += static_cast<std::size_t>(ptr - first);
      if (std::labs(power) > kMaxPower) throw ParseError("exponent too large", exp_start);
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'", i);
    if (g == Generator::Tau && power < 0 && mode == Mode::Monoid)
      throw ParseError("negative power of t1 is not allowed in the monoid", start);
    const auto sign = static_cast<std::int8_t>(power < 0 ? -1 : 1);
    for (long k = 0; k < std::labs(power); ++k) letters.push_back({g, sign});
  }
  return Word(std::move(letters), mode);
}

std::string render(const Word& w) {
  std::ostringstream os;
  const auto& ls = w.letters();
  bool first = true;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long run = static_cast<long>(j - i) * ls[i].sign;
    if (!first) os << ' ';
    first = false;
    os << generator_name(ls[i].gen);
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

Word invert(const Word& w) {
  if (w.mode() == Mode::Monoid && w.has_tau())
    throw InputError("a monoid word containing t1 has no inverse; use group mode");
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out), w.mode());
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack), w.mode());
}

SplitForm split_at_tau(const Word& w) {
  SplitForm split;
  std::vector<Letter> current;
  for (const auto& l : w.letters()) {
    if (l.is_tau()) {
      split.blocks.emplace_back(std::move(current), w.mode());
      current.clear();
      split.tau_signs.push_back(l.sign);
    } else {
      current.push_back(l);
    }
  }
  split.blocks.emplace_back(std::move(current), w.mode());
  return split;
}

}  // namespace sb3

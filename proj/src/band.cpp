#include "sb3/band.hpp"

#include <sstream>

#include "sb3/errors.hpp"

namespace sb3 {

namespace {

int mod3(std::int64_t v) { return static_cast<int>(((v % 3) + 3) % 3); }

// Band letter a_i shifted by r places in the cycle a1 -> a2 -> a3 -> a1.
BandLetter rotate(int letter, std::int64_t r) {
  return static_cast<BandLetter>(mod3(letter - 1 + r) + 1);
}

// a2 a1, a3 a2 and a1 a3 all equal delta: second = first - 1 (mod 3).
bool contracts(BandLetter first, BandLetter second) {
  return rotate(first, -1) == second;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void append_power(std::vector<Letter>& out, Letter l, std::int64_t n) {
  for (std::int64_t i = 0; i < n; ++i) out.push_back(l);
}

}  // namespace

std::vector<BandItem> to_band(const Word& w) {
  std::vector<BandItem> raw;
  raw.reserve(w.size() * 2);
  for (const auto& l : w.letters()) {
    switch (l.gen) {
      case Generator::Sigma1:
        if (l.sign > 0) {
          raw.push_back(BandItem::atom(1));
        } else {
          raw.push_back(BandItem::delta(-1));
          raw.push_back(BandItem::atom(2));
        }
        break;
      case Generator::Sigma2:
        if (l.sign > 0) {
          raw.push_back(BandItem::atom(2));
        } else {
          raw.push_back(BandItem::delta(-1));
          raw.push_back(BandItem::atom(3));
        }
        break;
      case Generator::Tau:
        throw InputError("band normal form is defined for braid words without t1");
    }
  }
  return raw;
}

NormalForm normalize_band(const std::vector<BandItem>& raw) {
  // The tail is stored unrotated; its actual letters are rotate(stored, shift).
  std::vector<BandLetter> stored;
  std::int64_t k = 0;
  std::int64_t shift = 0;
  for (const auto& item : raw) {
    if (item.kind == BandItem::Kind::Delta) {
      if (item.value != 1 && item.value != -1) throw UsageError("delta item must carry +-1");
      k += item.value;
      shift += item.value;
      continue;
    }
    if (item.value < 1 || item.value > 3) throw UsageError("band letter index must be 1, 2 or 3");
    const auto letter = static_cast<BandLetter>(item.value);
    if (!stored.empty() && contracts(rotate(stored.back(), shift), letter)) {
      stored.pop_back();
      k += 1;
      shift += 1;
    } else {
      stored.push_back(rotate(letter, -shift));
    }
  }
  NormalForm nf{k, {}};
  nf.tail.reserve(stored.size());
  for (auto s : stored) nf.tail.push_back(rotate(s, shift));
  return nf;
}

NormalForm normal_form(const Word& w) { return normalize_band(to_band(w)); }

bool nf_equal(const Word& w1, const Word& w2) { return normal_form(w1) == normal_form(w2); }

bool is_reduced_tail(const std::vector<BandLetter>& tail) {
  for (std::size_t i = 0; i + 1 < tail.size(); ++i)
    if (contracts(tail[i], tail[i + 1])) return false;
  return true;
}

Word to_word(const NormalForm& nf) {
  std::vector<Letter> out;
  for (std::int64_t i = 0; i < nf.delta_exp; ++i) {
    out.push_back(kS2);
    out.push_back(kS1);
  }
  for (std::int64_t i = 0; i < -nf.delta_exp; ++i) {
    out.push_back(kS1Inv);
    out.push_back(kS2Inv);
  }
  for (auto a : nf.tail) {
    switch (a) {
      case 1: out.push_back(kS1); break;
      case 2: out.push_back(kS2); break;
      case 3:
        out.push_back(kS2);
        out.push_back(kS1);
        out.push_back(kS2Inv);
        break;
      default: throw UsageError("invalid band letter in normal form");
    }
  }
  return Word(std::move(out));
}

std::string render_tail(const std::vector<BandLetter>& tail) {
  std::string s;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (i > 0) s += ' ';
    s += 'a';
    s += static_cast<char>('0' + tail[i]);
  }
  return s;
}

std::string render_normal_form(const NormalForm& nf) {
  if (nf.delta_exp == 0 && nf.tail.empty()) return "1";
  std::string s;
  if (nf.delta_exp == 1) s = "delta";
  else if (nf.delta_exp != 0) s = "delta^" + std::to_string(nf.delta_exp);
  if (!nf.tail.empty()) {
    if (!s.empty()) s += ' ';
    s += render_tail(nf.tail);
  }
  return s;
}

NormalForm parse_normal_form(const std::string& text) {
  NormalForm nf;
  if (text == "1") return nf;
  std::istringstream is(text);
  std::string tok;
  std::size_t pos = 0;
  bool first = true;
  while (is >> tok) {
    pos = text.find(tok, pos);
    if (first && tok.rfind("delta", 0) == 0) {
      if (tok == "delta") {
        nf.delta_exp = 1;
      } else if (tok.size() > 6 && tok[5] == '^') {
        try {
          std::size_t used = 0;
          nf.delta_exp = std::stoll(tok.substr(6), &used);
          if (used != tok.size() - 6) throw ParseError("malformed delta exponent", pos);
        } catch (const std::logic_error&) {
          throw ParseError("malformed delta exponent", pos);
        }
      } else {
        throw ParseError("malformed delta token '" + tok + "'", pos);
      }
    } else if (tok.size() == 2 && tok[0] == 'a' && tok[1] >= '1' && tok[1] <= '3') {
      nf.tail.push_back(static_cast<BandLetter>(tok[1] - '0'));
    } else {
      throw ParseError("unknown normal-form token '" + tok + "'", pos);
    }
    first = false;
    pos += tok.size();
  }
  if (!is_reduced_tail(nf.tail)) throw ParseError("tail contains a contractible pair", 0);
  return nf;
}

Word h3_element(std::int64_t k, std::int64_t l) {
  std::vector<Letter> out;
  append_power(out, k >= 0 ? kS1 : kS1Inv, k >= 0 ? k : -k);
  for (std::int64_t i = 0; i < 3 * l; ++i) {
    out.push_back(kS2);
    out.push_back(kS1);
  }
  for (std::int64_t i = 0; i < -3 * l; ++i) {
    out.push_back(kS1Inv);
    out.push_back(kS2Inv);
  }
  return Word(std::move(out));
}

std::optional<H3Witness> membership_h3(const NormalForm& nf) {
  // H3 is abelian with (s2 s1)^3 = delta^3 central, and
  //   delta^{3l} s1^j              = delta^{3l} a1^j                      (j >= 0)
  //   delta^{3l} s1^{-3j}          = delta^{3l-3j}   (a3 a1 a2)^j
  //   delta^{3l} s1^{-3j-1}        = delta^{3l-3j-1} a2 (a3 a1 a2)^j
  //   delta^{3l} s1^{-3j-2}        = delta^{3l-3j-2} a1 a2 (a3 a1 a2)^j
  const auto& p = nf.tail;
  const std::int64_t K = nf.delta_exp;

  bool all_a1 = true;
  for (auto a : p) all_a1 = all_a1 && a == 1;
  if (all_a1) {
    if (mod3(K) != 0) return std::nullopt;
    return H3Witness{static_cast<std::int64_t>(p.size()), floor_div(K, 3)};
  }

  // Strip a prefix (a2 or a1 a2), then the remainder must be (a3 a1 a2)^j.
  std::size_t prefix = 0;
  std::int64_t offset = 0;
  if (p[0] == 2) {
    prefix = 1;
    offset = 1;
  } else if (p.size() >= 2 && p[0] == 1 && p[1] == 2) {
    prefix = 2;
    offset = 2;
  }
  if ((p.size() - prefix) % 3 != 0) return std::nullopt;
  for (std::size_t i = prefix; i < p.size(); i += 3)
    if (p[i] != 3 || p[i + 1] != 1 || p[i + 2] != 2) return std::nullopt;
  const auto j = static_cast<std::int64_t>((p.size() - prefix) / 3);
  // K = 3l - 3j - offset
  if (mod3(K + offset) != 0) return std::nullopt;
  return H3Witness{-3 * j - offset, (K + 3 * j + offset) / 3};
}

std::optional<H3Witness> membership_h3(const Word& w) { return membership_h3(normal_form(w)); }

}  // namespace sb3

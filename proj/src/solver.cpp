#include "sb3/solver.hpp"

#include "sb3/band.hpp"
#include "sb3/burau.hpp"
#include "sb3/errors.hpp"

namespace sb3 {

namespace {

void check_cap(const Word& w) {
  if (w.tau_letters() > kSolverSingularCap)
    throw InputError("word has " + std::to_string(w.tau_letters()) +
                     " singular letters; solvers accept at most " +
                     std::to_string(kSolverSingularCap));
}

std::string shown(const Word& w) {
  auto s = render(w);
  return s.empty() ? "1" : s;
}

std::string witness_text(const H3Witness& h) {
  return "s1^" + std::to_string(h.k) + " (s2 s1)^" + std::to_string(3 * h.l);
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::Burau: return "burau";
    case Method::Recursion: return "recursion";
    case Method::Pinch: return "pinch";
  }
  return "?";
}

Verdict equal_burau(const Word& w1, const Word& w2) {
  check_cap(w1);
  check_cap(w2);
  Verdict v{false, Method::Burau, {}};
  const auto a = burau_eval(w1);
  const auto b = burau_eval(w2);
  v.equal = a.matrix == b.matrix;
  v.trace.push_back("e=" + std::to_string(a.exponent_sum) + " m=" +
                    std::to_string(a.singular_count) + " vs e=" + std::to_string(b.exponent_sum) +
                    " m=" + std::to_string(b.singular_count));
  v.trace.push_back(v.equal ? "matrices identical" : "matrices differ");
  return v;
}

Verdict equal_sb3(const Word& w1, const Word& w2) {
  if (w1.mode() != Mode::Monoid || w2.mode() != Mode::Monoid)
    throw InputError("recursion solver takes monoid words; use the pinch solver for SG3");
  check_cap(w1);
  check_cap(w2);
  Verdict v{false, Method::Recursion, {}};
  SplitForm a = split_at_tau(w1);
  SplitForm b = split_at_tau(w2);
  const std::size_t m = a.tau_signs.size();
  if (m != b.tau_signs.size()) {
    v.trace.push_back("singular counts differ (" + std::to_string(m) + " vs " +
                      std::to_string(b.tau_signs.size()) + "): determinants separate them");
    return v;
  }
  for (std::size_t step = m; step > 0; --step) {
    const Word last_a = a.blocks.back();
    const Word last_b = b.blocks.back();
    const Word quotient = last_a * invert(last_b);
    const auto wit = membership_h3(quotient);
    if (!wit) {
      v.trace.push_back("tau #" + std::to_string(step) + ": b c^-1 = " + shown(quotient) +
                        " not in H3");
      return v;
    }
    v.trace.push_back("tau #" + std::to_string(step) + ": b c^-1 = " + shown(quotient) +
                      " in H3 as " + witness_text(*wit) + "; drop tau and merge blocks");
    a.blocks.pop_back();
    b.blocks.pop_back();
    a.tau_signs.pop_back();
    b.tau_signs.pop_back();
    a.blocks.back() = a.blocks.back() * last_a;
    b.blocks.back() = b.blocks.back() * last_b;
  }
  const auto nf_a = normal_form(a.blocks[0]);
  const auto nf_b = normal_form(b.blocks[0]);
  v.equal = nf_a == nf_b;
  v.trace.push_back("B3 base: " + render_normal_form(nf_a) + (v.equal ? " == " : " != ") +
                    render_normal_form(nf_b));
  return v;
}

namespace {

Verdict pinch_reduce(const Word& w) {
  Verdict v{false, Method::Pinch, {}};
  Word current = free_reduce(w.as_group());
  while (current.has_tau()) {
    SplitForm split = split_at_tau(current);
    bool pinched = false;
    for (std::size_t i = 1; i < split.tau_signs.size(); ++i) {
      if (split.tau_signs[i - 1] == split.tau_signs[i]) continue;
      const Word& inner = split.blocks[i];
      const auto wit = membership_h3(inner);
      if (!wit) continue;
      v.trace.push_back("pinch taus #" + std::to_string(i) + ",#" + std::to_string(i + 1) +
                        ": C = " + shown(inner) + " in H3 as " + witness_text(*wit));
      Word merged = split.blocks[i - 1] * inner * split.blocks[i + 1];
      split.blocks.erase(split.blocks.begin() + static_cast<std::ptrdiff_t>(i - 1),
                         split.blocks.begin() + static_cast<std::ptrdiff_t>(i + 2));
      split.blocks.insert(split.blocks.begin() + static_cast<std::ptrdiff_t>(i - 1), merged);
      split.tau_signs.erase(split.tau_signs.begin() + static_cast<std::ptrdiff_t>(i - 1),
                            split.tau_signs.begin() + static_cast<std::ptrdiff_t>(i + 1));
      current = free_reduce(split.reassemble(Mode::Group));
      pinched = true;
      break;
    }
    if (!pinched) {
      v.trace.push_back("no pinch in " + shown(current) + " with " +
                        std::to_string(current.tau_letters()) + " tau letters: nontrivial");
      return v;
    }
  }
  const auto nf = normal_form(current.as_monoid());
  v.equal = nf == NormalForm{};
  v.trace.push_back("B3 residue " + shown(current) + " has normal form " + render_normal_form(nf));
  return v;
}

}  // namespace

Verdict is_trivial_sg3(const Word& w) {
  check_cap(w);
  return pinch_reduce(w);
}

Verdict equal_sg3(const Word& w1, const Word& w2) {
  check_cap(w1);
  check_cap(w2);
  Verdict v = pinch_reduce(w1.as_group() * invert(w2.as_group()));
  v.trace.insert(v.trace.begin(), "test w1 w2^-1 = 1 in SG3");
  return v;
}

Verdict decide(Method m, const Word& w1, const Word& w2) {
  switch (m) {
    case Method::Burau: return equal_burau(w1, w2);
    case Method::Recursion: return equal_sb3(w1, w2);
    case Method::Pinch: return equal_sg3(w1, w2);
  }
  throw UsageError("unknown method");
}

}  // namespace sb3

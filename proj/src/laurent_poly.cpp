#include "sb3/laurent_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sb3/errors.hpp"

namespace sb3 {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

namespace {

std::int16_t narrow_exponent(long e) {
  if (e < std::numeric_limits<std::int16_t>::min() || e > std::numeric_limits<std::int16_t>::max())
    throw std::overflow_error("exponent out of range");
  return static_cast<std::int16_t>(e);
}

void check_vars(int indexed_vars) {
  if (indexed_vars < 0 || indexed_vars > kMaxIndexedVars)
    throw UsageError("indexed variable count " + std::to_string(indexed_vars) + " outside [0, " +
                     std::to_string(kMaxIndexedVars) + "]");
}

// Sorts by exponent vector, merges equal keys and drops zeros.
void canonicalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    auto key = terms[i].first;
    std::int64_t c = 0;
    for (; i < terms.size() && terms[i].first == key; ++i) c = checked_add(c, terms[i].second);
    if (c != 0) terms[out++] = {key, c};
  }
  terms.resize(out);
}

}  // namespace

Var Var::indexed(int i) {
  if (i < 1 || i > kMaxIndexedVars)
    throw UsageError("indexed variable y" + std::to_string(i) + " out of range");
  return Var(i + 1);
}

LaurentPoly::LaurentPoly(int indexed_vars) : indexed_vars_(indexed_vars) {
  check_vars(indexed_vars);
}

LaurentPoly LaurentPoly::constant(std::int64_t c, int indexed_vars) {
  LaurentPoly p(indexed_vars);
  if (c != 0) p.terms_.push_back({Exponents{}, c});
  return p;
}

LaurentPoly LaurentPoly::variable(Var v, int indexed_vars) {
  LaurentPoly p(indexed_vars);
  if (v.is_indexed() && v.index() > indexed_vars)
    throw UsageError("variable y" + std::to_string(v.index()) + " not in a universe of " +
                     std::to_string(indexed_vars) + " indexed variables");
  Exponents e{};
  e[v.slot()] = 1;
  p.terms_.push_back({e, 1});
  return p;
}

LaurentPoly LaurentPoly::t_power(int t_exp, std::int64_t coeff, int indexed_vars) {
  LaurentPoly p(indexed_vars);
  if (coeff != 0) {
    Exponents e{};
    e[0] = narrow_exponent(t_exp);
    p.terms_.push_back({e, coeff});
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms, int indexed_vars) {
  LaurentPoly p(indexed_vars);
  for (const auto& [e, c] : terms) {
    for (int s = 1; s < 2 + kMaxIndexedVars; ++s) {
      if (e[s] < 0) throw UsageError("negative exponent on a y variable");
      if (s >= 2 + indexed_vars && e[s] != 0)
        throw UsageError("term uses an indexed variable outside the universe");
    }
  }
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::with_universe(int indexed_vars) const {
  LaurentPoly p(indexed_vars);
  if (indexed_vars < indexed_vars_) {
    for (const auto& [e, c] : terms_)
      for (int s = 2 + indexed_vars; s < 2 + indexed_vars_; ++s)
        if (e[s] != 0) throw UsageError("cannot shrink universe: indexed variable in use");
  }
  p.terms_ = terms_;
  return p;
}

void LaurentPoly::check_universe(const LaurentPoly& other) const {
  if (indexed_vars_ != other.indexed_vars_)
    throw UsageError("mismatched variable universes (" + std::to_string(indexed_vars_) + " vs " +
                     std::to_string(other.indexed_vars_) + " indexed variables)");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.second = checked_mul(term.second, -1);
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, std::int64_t sign) {
  check_universe(other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back({b->first, checked_mul(b->second, sign)});
      ++b;
    } else {
      auto c = checked_add(a->second, checked_mul(b->second, sign));
      if (c != 0) merged.push_back({a->first, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_universe(b);
  std::vector<LaurentPoly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  const int slots = 2 + a.indexed_vars_;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      for (int s = 0; s < slots; ++s) e[s] = narrow_exponent(long{ea[s]} + eb[s]);
      products.push_back({e, checked_mul(ca, cb)});
    }
  }
  canonicalize(products);
  LaurentPoly p(a.indexed_vars_);
  p.terms_ = std::move(products);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(1, indexed_vars_);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

int LaurentPoly::max_degree(Var v) const {
  if (terms_.empty()) return 0;
  int best = std::numeric_limits<int>::min();
  for (const auto& term : terms_) best = std::max<int>(best, term.first[v.slot()]);
  return best;
}

int LaurentPoly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& term : terms_) best = std::min<int>(best, term.first[v.slot()]);
  return best;
}

LaurentPoly LaurentPoly::substitute(const std::map<Var, LaurentPoly>& images,
                                    int target_vars) const {
  check_vars(target_vars);
  std::array<const LaurentPoly*, 2 + kMaxIndexedVars> image_of{};
  bool all_monomial = true;
  for (const auto& [v, img] : images) {
    if (v.is_indexed() && v.index() > indexed_vars_)
      throw UsageError("substitution names a variable outside the universe");
    if (img.indexed_vars_ != target_vars)
      throw UsageError("substitution image lives in a different universe");
    if (v.is_t()) {
      bool unit = img.terms_.size() == 1 && (img.terms_[0].second == 1 || img.terms_[0].second == -1);
      if (unit) {
        const auto& e = img.terms_[0].first;
        for (int s = 1; s < 2 + kMaxIndexedVars; ++s) unit = unit && e[s] == 0;
      }
      if (!unit) throw UsageError("t may only be replaced by a unit +-t^k");
    }
    image_of[v.slot()] = &img;
    all_monomial = all_monomial && img.terms_.size() <= 1;
  }
  // Unreplaced variables must survive in the target universe.
  for (int s = 2 + target_vars; s < 2 + indexed_vars_; ++s) {
    if (image_of[s] != nullptr) continue;
    for (const auto& term : terms_)
      if (term.first[s] != 0)
        throw UsageError("unreplaced indexed variable does not fit the target universe");
  }

  LaurentPoly result(target_vars);
  if (all_monomial) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) {
      Exponents ne{};
      std::int64_t coeff = c;
      bool vanished = false;
      for (int s = 0; s < 2 + indexed_vars_ && !vanished; ++s) {
        if (e[s] == 0) continue;
        const LaurentPoly* img = image_of[s];
        if (img == nullptr) {
          ne[s] = narrow_exponent(long{ne[s]} + e[s]);
          continue;
        }
        if (img->is_zero()) {
          vanished = true;  // y variables only carry non-negative exponents
          break;
        }
        const auto& [ie, ic] = img->terms_[0];
        for (int k = 0; k < std::abs(e[s]); ++k) coeff = checked_mul(coeff, ic);
        for (int u = 0; u < 2 + target_vars; ++u)
          ne[u] = narrow_exponent(long{ne[u]} + long{ie[u]} * e[s]);
      }
      if (!vanished) out.push_back({ne, coeff});
    }
    canonicalize(out);
    result.terms_ = std::move(out);
    return result;
  }

  for (const auto& [e, c] : terms_) {
    LaurentPoly term = constant(c, target_vars);
    Exponents rest{};
    for (int s = 0; s < 2 + indexed_vars_; ++s) {
      if (e[s] == 0) continue;
      const LaurentPoly* img = image_of[s];
      if (img == nullptr) {
        rest[s] = e[s];
      } else if (s == 0 && e[s] < 0) {
        // unit image: (+-t^k)^{-n} = (+-1)^n t^{-kn}
        const auto& [ie, ic] = img->terms_[0];
        term *= t_power(-ie[0] * std::abs(e[s]), (std::abs(e[s]) % 2 == 1) ? ic : 1, target_vars);
      } else {
        term *= img->pow(static_cast<unsigned>(e[s]));
      }
    }
    term *= from_terms({{rest, 1}}, target_vars);
    result += term;
  }
  return result;
}

LaurentPoly LaurentPoly::permute_indexed(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != indexed_vars_)
    throw UsageError("permutation size does not match the indexed universe");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    for (int i = 0; i < indexed_vars_; ++i) ne[2 + perm[i]] = e[2 + i];
    out.push_back({ne, c});
  }
  canonicalize(out);
  LaurentPoly p(indexed_vars_);
  p.terms_ = std::move(out);
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::ostringstream mono;
    bool any = false;
    auto emit = [&](const std::string& name, int exp) {
      if (exp == 0) return;
      if (any) mono << '*';
      mono << name;
      if (exp != 1) mono << '^' << exp;
      any = true;
    };
    emit("t", e[0]);
    emit("y", e[1]);
    for (int i = 1; i <= indexed_vars_; ++i) emit("y" + std::to_string(i), e[1 + i]);

    if (!any) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace sb3

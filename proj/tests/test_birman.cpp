#include <doctest.h>

#include <bit>
#include <cstdlib>
#include <numeric>

#include "sb3/birman.hpp"
#include "sb3/burau.hpp"
#include "sb3/errors.hpp"
#include "sb3/random_words.hpp"
#include "sb3/solver.hpp"

using namespace sb3;

namespace {

LaurentPoly c(std::int64_t v, int m = 0) { return LaurentPoly::constant(v, m); }
LaurentPoly t(int e = 1, std::int64_t coeff = 1, int m = 0) { return LaurentPoly::t_power(e, coeff, m); }

std::int64_t coeff_of(const GroupRingElt& x, const char* word) {
  return x.sum().coefficient(render_normal_form(normal_form(parse(word))));
}

// Independent expansion of eta: multiply out (s1 - s1^-1) factors letter by
// letter as words, without normal forms, then compare by Burau matrix.
FormalSum eta_by_expansion(const Word& w) {
  std::vector<std::pair<std::vector<Letter>, std::int64_t>> terms{{{}, 1}};
  for (const auto& l : w.letters()) {
    std::vector<std::pair<std::vector<Letter>, std::int64_t>> next;
    for (auto& [word, coeff] : terms) {
      if (l.is_tau()) {
        auto a = word, b = word;
        a.push_back(kS1);
        b.push_back(kS1Inv);
        next.push_back({a, coeff});
        next.push_back({b, -coeff});
      } else {
        word.push_back(l);
        next.push_back({word, coeff});
      }
    }
    terms = std::move(next);
  }
  FormalSum out;
  for (const auto& [word, coeff] : terms) out.add(serialize(burau_eval(Word(word)).matrix), coeff);
  return out;
}

}  // namespace

TEST_CASE("eta examples") {
  const GroupRingElt e1 = eta(parse("t1"));
  CHECK(e1.sum().size() == 2);
  CHECK(coeff_of(e1, "s1") == 1);
  CHECK(coeff_of(e1, "s1^-1") == -1);

  const GroupRingElt e2 = eta(parse("s1"));
  CHECK(e2.sum().size() == 1);
  CHECK(coeff_of(e2, "s1") == 1);

  const GroupRingElt e3 = eta(parse("t1 t1"));
  CHECK(e3.sum().size() == 3);
  CHECK(coeff_of(e3, "s1^2") == 1);
  CHECK(coeff_of(e3, "") == -2);
  CHECK(coeff_of(e3, "s1^-2") == 1);
}

TEST_CASE("eta over the cap is rejected") {
  std::string w;
  for (int i = 0; i < kDefaultBirmanSingularCap + 1; ++i) w += "t1 ";
  unsetenv("SB3_MAX_SING");
  CHECK_THROWS_AS(eta(parse(w)), InputError);
  CHECK_THROWS_AS(modified_burau(parse(w)), InputError);
  setenv("SB3_MAX_SING", "9", 1);
  CHECK(birman_singular_cap() == 9);
  CHECK_NOTHROW(eta(parse(w)));
  setenv("SB3_MAX_SING", "1000", 1);
  CHECK(birman_singular_cap() == kMaxIndexedVars);
  unsetenv("SB3_MAX_SING");
  CHECK(birman_singular_cap() == kDefaultBirmanSingularCap);
}

TEST_CASE("modified_burau examples") {
  const ModifiedBurauOrbit one = modified_burau(parse("t1"));
  const auto y1 = LaurentPoly::variable(Var::indexed(1), 1);
  CHECK(one.m == 1);
  CHECK(one.canonical == PolyMatrix{c(1, 1) - y1 - t(1, 1, 1) * y1, y1, c(0, 1), c(1, 1)});

  const ModifiedBurauOrbit plain = modified_burau(parse("s1 s2"));
  CHECK(plain.m == 0);
  CHECK(plain.canonical == burau_eval(parse("s1 s2")).matrix);

  // Relabeling the two singularities lands in the same orbit.
  const PolyMatrix raw = modified_burau_matrix(parse("t1 s1 t1"));
  const PolyMatrix swapped = raw.map([](const LaurentPoly& p) { return p.permute_indexed({1, 0}); });
  CHECK(canonicalize_orbit(raw, 2) == canonicalize_orbit(swapped, 2));
}

TEST_CASE("rho examples") {
  const ModifiedBurauOrbit plain = modified_burau(parse("s2"));
  const MatrixRingSum r0 = rho(plain);
  CHECK(r0.size() == 1);
  CHECK(r0.coefficient(serialize(plain.canonical)) == 1);

  const MatrixRingSum r1 = rho(modified_burau(parse("t1")));
  CHECK(r1.size() == 2);
  CHECK(r1.coefficient(serialize(PolyMatrix{t(1, -1), c(1), c(0), c(1)})) == 1);
  CHECK(r1.coefficient(serialize(PolyMatrix{t(-1, -1), t(-1), c(0), c(1)})) == -1);

  // independent of the representative
  const PolyMatrix raw = modified_burau_matrix(parse("t1 s2 t1 s1^-1 t1"));
  const PolyMatrix permuted =
      raw.map([](const LaurentPoly& p) { return p.permute_indexed({2, 0, 1}); });
  CHECK(rho_serial({raw, 3}) == rho_serial({permuted, 3}));
  CHECK(rho({raw, 3}) == rho_serial(modified_burau(parse("t1 s2 t1 s1^-1 t1"))));
}

TEST_CASE("project_p examples") {
  CHECK(project_p(modified_burau(parse("t1"))) == burau_eval(parse("t1")).matrix);
  const ModifiedBurauOrbit plain = modified_burau(parse("s1 s2^-1"));
  CHECK(project_p(plain) == plain.canonical);
  CHECK(project_p(modified_burau(parse("t1 t1"))) == burau_eval(parse("t1 t1")).matrix);
}

TEST_CASE("groupring_burau examples") {
  GroupRingElt x;
  x.add(normal_form(parse("s1")), 1);
  MatrixRingSum image = groupring_burau(x);
  CHECK(image.coefficient(serialize(PolyMatrix{t(1, -1), c(1), c(0), c(1)})) == 1);

  GroupRingElt id;
  id.add(NormalForm{}, -2);
  CHECK(groupring_burau(id).coefficient(serialize(PolyMatrix::identity(c(1)))) == -2);

  const MatrixRingSum e = groupring_burau(eta(parse("t1")));
  CHECK(e.coefficient(serialize(generator_matrix(kS1))) == 1);
  CHECK(e.coefficient(serialize(generator_matrix(kS1Inv))) == -1);
}

TEST_CASE("diagram commutes") {
  CHECK(check_diagram(parse("t1 s2")));
  CHECK(check_diagram(Word()));
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Word w = random_word(seed, 14, Mode::Monoid, 3);
    CHECK(check_diagram(w));
    CHECK(groupring_burau(eta(w)) == eta_by_expansion(w));
  }
}

TEST_CASE("parallel kernels match the serial references") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Word w = random_word(seed, 20, Mode::Monoid, 6);
    CHECK(eta(w) == eta_serial(w));
    const auto orbit = modified_burau(w);
    CHECK(rho(orbit) == rho_serial(orbit));
  }
}

TEST_CASE("degree bound and resolution index") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Word w = random_word(seed, 14, Mode::Monoid, 3);
    const auto orbit = modified_burau(w);
    CHECK(max_indexed_degree(orbit) <= 1);
    const auto e = w.exponent_sum();
    const auto m = orbit.m;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << m); ++r) {
      const int mu = std::popcount(r);
      // det = (-t)^e (-t)^(m - mu) (-t^-1)^mu = (-1)^(e+m) t^(e+m-2mu)
      const auto det = resolve(orbit.canonical, m, r).det();
      CHECK(det == LaurentPoly::t_power(static_cast<int>(e + m - 2 * mu), (e + m) % 2 ? -1 : 1));
      CHECK((e + m - det.max_degree(Var::t())) / 2 == mu);
    }
  }
}

TEST_CASE("equal eta images exactly for equal braids") {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Word w = random_word(rng, 12, Mode::Monoid, 3);
    auto [a, b] = perturb_equal(rng, w);
    CHECK(eta(a) == eta(b));
    CHECK(rho(modified_burau(a)) == rho(modified_burau(b)));
    CHECK(project_p(modified_burau(a)) == project_p(modified_burau(b)));
    const Word u = random_word(rng, 12, Mode::Monoid, 3);
    CHECK((eta(w) == eta(u)) == equal_sb3(w, u).equal);
  }
}

namespace {

PolyMatrix relabeled(const PolyMatrix& mat, const std::vector<int>& perm) {
  return mat.map([&perm](const LaurentPoly& p) { return p.permute_indexed(perm); });
}

// Exhaustive orbit membership, independent of any canonical form.
bool same_orbit(const PolyMatrix& a, const PolyMatrix& b, int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabeled(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<int> random_perm(Rng& rng, int m) {
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
  return perm;
}

}  // namespace

TEST_CASE("orbit canonical form is a relabeling invariant") {
  Rng rng(77);
  std::vector<Word> words{parse("t1^8"), parse("t1^4 s2 t1^4"), parse("t1 s2 t1 s2 t1 s2 t1 s2 t1 s2 t1 s2 t1 s2 t1"),
                          parse("t1 s2 s1 t1 s2 s1 t1 s2 s1 t1 s2 s1 t1 s2 s1 t1 s2 s1 t1 s2 s1 t1")};
  for (std::uint64_t seed = 0; seed < 40; ++seed) words.push_back(random_word(seed, 24, Mode::Monoid, 8));
  for (const Word& w : words) {
    const int m = static_cast<int>(w.tau_letters());
    const PolyMatrix raw = modified_burau_matrix(w);
    const PolyMatrix canon = canonicalize_orbit(raw, m).canonical;
    for (int trial = 0; trial < 3; ++trial)
      CHECK(canonicalize_orbit(relabeled(raw, random_perm(rng, m)), m).canonical == canon);
  }
}

TEST_CASE("canonical forms agree exactly when the orbits agree") {
  Rng rng(78);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = random_word(rng, 10, Mode::Monoid, 4);
    const Word v = random_word(rng, 10, Mode::Monoid, 4);
    const int m = static_cast<int>(u.tau_letters());
    if (static_cast<int>(v.tau_letters()) != m) continue;
    const PolyMatrix a = modified_burau_matrix(u), b = modified_burau_matrix(v);
    const PolyMatrix c = relabeled(a, random_perm(rng, m));
    CHECK((canonicalize_orbit(a, m).canonical == canonicalize_orbit(b, m).canonical) == same_orbit(a, b, m));
    CHECK(canonicalize_orbit(c, m).canonical == canonicalize_orbit(a, m).canonical);
    CHECK(same_orbit(a, canonicalize_orbit(a, m).canonical, m));
  }
}

#include "sb3/birman.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sb3/burau.hpp"
#include "sb3/errors.hpp"

namespace sb3 {

namespace {

void check_birman_input(const Word& w) {
  if (w.mode() != Mode::Monoid) throw InputError("Birman maps take monoid words");
  const auto m = static_cast<int>(w.tau_letters());
  if (m > birman_singular_cap())
    throw InputError("word has " + std::to_string(m) + " singular letters; the cap is " +
                     std::to_string(birman_singular_cap()) + " (raise with SB3_MAX_SING)");
}

// The braid obtained by resolving the singular letters selected by `left_handed`
// to s1^-1 and the others to s1.
Word resolved_word(const Word& w, std::uint64_t left_handed) {
  std::vector<Letter> out;
  out.reserve(w.size());
  int j = 0;
  for (const auto& l : w.letters()) {
    if (l.is_tau()) {
      out.push_back(((left_handed >> j) & 1u) ? kS1Inv : kS1);
      ++j;
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

int sign_of(std::uint64_t left_handed) { return (std::popcount(left_handed) % 2 == 0) ? 1 : -1; }

PolyMatrix lift(const PolyMatrix& m, int indexed_vars) {
  return m.map([indexed_vars](const LaurentPoly& p) { return p.with_universe(indexed_vars); });
}

}  // namespace

int birman_singular_cap() {
  if (const char* env = std::getenv("SB3_MAX_SING")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) return static_cast<int>(std::min<long>(v, kMaxIndexedVars));
  }
  return kDefaultBirmanSingularCap;
}

std::vector<std::pair<NormalForm, std::int64_t>> GroupRingElt::entries() const {
  std::vector<std::pair<NormalForm, std::int64_t>> out;
  for (const auto& [key, c] : sum_.terms()) out.emplace_back(parse_normal_form(key), c);
  return out;
}

GroupRingElt eta_serial(const Word& w) {
  check_birman_input(w);
  const auto m = static_cast<int>(w.tau_letters());
  GroupRingElt out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << m); ++r)
    out.add(normal_form(resolved_word(w, r)), sign_of(r));
  return out;
}

GroupRingElt eta(const Word& w) {
  check_birman_input(w);
  const auto m = static_cast<int>(w.tau_letters());
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << m);
  std::vector<NormalForm> forms(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < count; ++r)
    forms[static_cast<std::size_t>(r)] = normal_form(resolved_word(w, static_cast<std::uint64_t>(r)));
  GroupRingElt out;
  for (std::int64_t r = 0; r < count; ++r)
    out.add(forms[static_cast<std::size_t>(r)], sign_of(static_cast<std::uint64_t>(r)));
  return out;
}

PolyMatrix modified_burau_matrix(const Word& w) {
  check_birman_input(w);
  const auto m = static_cast<int>(w.tau_letters());
  PolyMatrix acc = PolyMatrix::identity(LaurentPoly::constant(1, m));
  int j = 0;
  for (const auto& l : w.letters()) {
    if (!l.is_tau()) {
      acc *= lift(generator_matrix(l), m);
      continue;
    }
    ++j;
    const auto yj = LaurentPoly::variable(Var::indexed(j), m);
    const auto one = LaurentPoly::constant(1, m);
    const auto t = LaurentPoly::t_power(1, 1, m);
    acc *= PolyMatrix{one - yj - t * yj, yj, LaurentPoly(m), one};
  }
  return acc;
}

ModifiedBurauOrbit canonicalize_orbit(const PolyMatrix& mat, int indexed_vars) {
  const int m = indexed_vars;
  if (m <= 1) return {mat, m};
  const std::array<const LaurentPoly*, 4> entries{&mat.m11, &mat.m12, &mat.m21, &mat.m22};

  // Colour refinement: an index's colour is the rank of the terms it occurs
  // in, described without reference to any index label. Colours are
  // therefore invariant under relabeling.
  using Feature = std::tuple<int, int, int, int, std::int64_t, std::vector<std::pair<int, int>>>;
  std::vector<int> colour(static_cast<std::size_t>(m), 0);
  for (int classes = 1;;) {
    std::vector<std::pair<int, std::vector<Feature>>> keys(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) keys[static_cast<std::size_t>(j)].first = colour[static_cast<std::size_t>(j)];
    for (int e = 0; e < 4; ++e) {
      for (const auto& [ex, c] : entries[static_cast<std::size_t>(e)]->terms()) {
        std::vector<std::pair<int, int>> present;
        for (int j = 0; j < m; ++j)
          if (ex[static_cast<std::size_t>(2 + j)] != 0)
            present.push_back({colour[static_cast<std::size_t>(j)], ex[static_cast<std::size_t>(2 + j)]});
        std::sort(present.begin(), present.end());
        for (int j = 0; j < m; ++j) {
          const int d = ex[static_cast<std::size_t>(2 + j)];
          if (d != 0) keys[static_cast<std::size_t>(j)].second.emplace_back(e, ex[0], ex[1], d, c, present);
        }
      }
    }
    for (auto& k : keys) std::sort(k.second.begin(), k.second.end());
    auto ranked = keys;
    std::sort(ranked.begin(), ranked.end());
    ranked.erase(std::unique(ranked.begin(), ranked.end()), ranked.end());
    for (int j = 0; j < m; ++j)
      colour[static_cast<std::size_t>(j)] = static_cast<int>(
          std::lower_bound(ranked.begin(), ranked.end(), keys[static_cast<std::size_t>(j)]) - ranked.begin());
    if (static_cast<int>(ranked.size()) == classes) break;
    classes = static_cast<int>(ranked.size());
  }

  // Orbit key: the colour sequence y1..ym, then the sorted term lists of the
  // four entries. Only relabelings listing colours in ascending order can be
  // minimal, so the search runs over permutations within colour classes.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)]; });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t k = i;
    while (k < order.size() &&
           colour[static_cast<std::size_t>(order[k])] == colour[static_cast<std::size_t>(order[i])])
      ++k;
    classes.push_back({i, k});
    i = k;
  }

  // A class whose full symmetric group fixes the matrix contributes nothing
  // to the search. A transposition and a full cycle generate that group.
  auto fixed_by = [&](const std::vector<int>& perm) {
    return mat.map([&perm](const LaurentPoly& p) { return p.permute_indexed(perm); }) == mat;
  };
  std::vector<std::pair<std::size_t, std::size_t>> moving;
  for (const auto& [lo, hi] : classes) {
    if (hi - lo < 2) continue;
    std::vector<int> swap(static_cast<std::size_t>(m)), cycle(static_cast<std::size_t>(m));
    std::iota(swap.begin(), swap.end(), 0);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::swap(swap[static_cast<std::size_t>(order[lo])], swap[static_cast<std::size_t>(order[lo + 1])]);
    for (std::size_t i = lo; i < hi; ++i)
      cycle[static_cast<std::size_t>(order[i])] = order[i + 1 < hi ? i + 1 : lo];
    if (!fixed_by(swap) || !fixed_by(cycle)) moving.push_back({lo, hi});
  }
  classes = std::move(moving);

  using Terms = std::vector<LaurentPoly::Term>;
  auto relabel = [&](const std::vector<int>& seq, std::array<Terms, 4>& out) {
    // seq[p] is the old index that receives the new label p.
    for (int e = 0; e < 4; ++e) {
      Terms& terms = out[static_cast<std::size_t>(e)];
      terms = entries[static_cast<std::size_t>(e)]->terms();
      for (auto& [ex, c] : terms) {
        const auto old = ex;
        for (int p = 0; p < m; ++p)
          ex[static_cast<std::size_t>(2 + p)] = old[static_cast<std::size_t>(2 + seq[static_cast<std::size_t>(p)])];
      }
      std::sort(terms.begin(), terms.end());
    }
  };

  std::vector<int> best_seq = order;
  std::array<Terms, 4> best, candidate;
  relabel(best_seq, best);
  std::vector<int> seq = order;
  for (auto& [lo, hi] : classes) std::sort(seq.begin() + static_cast<std::ptrdiff_t>(lo), seq.begin() + static_cast<std::ptrdiff_t>(hi));
  for (;;) {
    relabel(seq, candidate);
    if (candidate < best) {
      best.swap(candidate);
      best_seq = seq;
    }
    // odometer over the permutations of each colour class
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      const auto lo = seq.begin() + static_cast<std::ptrdiff_t>(classes[c].first);
      const auto hi = seq.begin() + static_cast<std::ptrdiff_t>(classes[c].second);
      if (std::next_permutation(lo, hi)) break;
    }
    if (c == classes.size()) break;
  }

  std::vector<int> perm(static_cast<std::size_t>(m));
  for (int p = 0; p < m; ++p) perm[static_cast<std::size_t>(best_seq[static_cast<std::size_t>(p)])] = p;
  return {mat.map([&perm](const LaurentPoly& p) { return p.permute_indexed(perm); }), m};
}

ModifiedBurauOrbit modified_burau(const Word& w) {
  return canonicalize_orbit(modified_burau_matrix(w), static_cast<int>(w.tau_letters()));
}

PolyMatrix resolve(const PolyMatrix& mat, int indexed_vars, std::uint64_t left_handed) {
  std::map<Var, LaurentPoly> images;
  for (int j = 1; j <= indexed_vars; ++j) {
    images.emplace(Var::indexed(j), ((left_handed >> (j - 1)) & 1u) ? LaurentPoly::t_power(-1)
                                                                     : LaurentPoly::constant(1));
  }
  return mat.map([&images](const LaurentPoly& p) { return p.substitute(images, 0); });
}

MatrixRingSum rho_serial(const ModifiedBurauOrbit& orbit) {
  MatrixRingSum out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << orbit.m); ++r)
    out.add(serialize(resolve(orbit.canonical, orbit.m, r)), sign_of(r));
  return out;
}

MatrixRingSum rho(const ModifiedBurauOrbit& orbit) {
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << orbit.m);
  std::vector<std::string> keys(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t r = 0; r < count; ++r)
    keys[static_cast<std::size_t>(r)] =
        serialize(resolve(orbit.canonical, orbit.m, static_cast<std::uint64_t>(r)));
  MatrixRingSum out;
  for (std::int64_t r = 0; r < count; ++r)
    out.add(keys[static_cast<std::size_t>(r)], sign_of(static_cast<std::uint64_t>(r)));
  return out;
}

PolyMatrix project_p(const PolyMatrix& mat, int indexed_vars) {
  std::map<Var, LaurentPoly> images;
  for (int j = 1; j <= indexed_vars; ++j) images.emplace(Var::indexed(j), LaurentPoly::variable(Var::y()));
  return mat.map([&images](const LaurentPoly& p) { return p.substitute(images, 0); });
}

PolyMatrix project_p(const ModifiedBurauOrbit& orbit) { return project_p(orbit.canonical, orbit.m); }

MatrixRingSum groupring_burau(const GroupRingElt& x) {
  MatrixRingSum out;
  for (const auto& [nf, c] : x.entries()) out.add(serialize(burau_eval(to_word(nf)).matrix), c);
  return out;
}

bool check_diagram(const Word& w) {
  const auto orbit = modified_burau(w);
  if (!fs_eq(rho(orbit), groupring_burau(eta(w)))) return false;
  return project_p(orbit) == burau_eval(w).matrix;
}

int max_indexed_degree(const ModifiedBurauOrbit& orbit) {
  int best = 0;
  for (const auto* p : {&orbit.canonical.m11, &orbit.canonical.m12, &orbit.canonical.m21,
                        &orbit.canonical.m22})
    for (int j = 1; j <= orbit.m; ++j) best = std::max(best, p->max_degree(Var::indexed(j)));
  return best;
}

}  // namespace sb3

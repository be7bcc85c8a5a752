#include "sb3/burau.hpp"

#include "sb3/errors.hpp"

namespace sb3 {

namespace {

LaurentPoly c(std::int64_t v) { return LaurentPoly::constant(v); }
LaurentPoly t_pow(int e, std::int64_t coeff = 1) { return LaurentPoly::t_power(e, coeff); }

struct GeneratorTable {
  PolyMatrix s1, s1_inv, s2, s2_inv, tau;

  GeneratorTable() {
    const LaurentPoly y = LaurentPoly::variable(Var::y());
    s1 = {t_pow(1, -1), c(1), c(0), c(1)};
    // inverse of [[-t,1],[0,1]]
    s1_inv = {t_pow(-1, -1), t_pow(-1), c(0), c(1)};
    s2 = {c(1), c(0), t_pow(1), t_pow(1, -1)};
    // inverse of [[1,0],[t,-t]]
    s2_inv = {c(1), c(0), c(1), t_pow(-1, -1)};
    tau = {c(1) - y - t_pow(1) * y, y, c(0), c(1)};
  }
};

const GeneratorTable& table() {
  static const GeneratorTable tbl;
  return tbl;
}

}  // namespace

LaurentPoly singular_determinant() { return table().tau.m11; }

PolyMatrix generator_matrix(Letter l) {
  const auto& tbl = table();
  switch (l.gen) {
    case Generator::Sigma1: return l.sign > 0 ? tbl.s1 : tbl.s1_inv;
    case Generator::Sigma2: return l.sign > 0 ? tbl.s2 : tbl.s2_inv;
    case Generator::Tau:
      if (l.sign < 0)
        throw InputError("t1^-1 has no image over Z[t, t^-1, y]; use the pinch solver for SG3 words");
      return tbl.tau;
  }
  throw UsageError("unknown generator");
}

BurauImage burau_eval(const Word& w) {
  BurauImage img{PolyMatrix::identity(c(1)), 0, 0};
  for (const auto& l : w.letters()) {
    img.matrix *= generator_matrix(l);
    if (l.is_tau()) {
      img.singular_count += 1;
    } else {
      img.exponent_sum += l.sign;
    }
  }
  return img;
}

bool burau_equal(const Word& w1, const Word& w2) {
  return burau_eval(w1).matrix == burau_eval(w2).matrix;
}

bool det_invariant_check(const Word& w) {
  const BurauImage img = burau_eval(w);
  const auto e = img.exponent_sum;
  LaurentPoly expected = t_pow(static_cast<int>(e), (e % 2 == 0) ? 1 : -1);
  expected *= singular_determinant().pow(static_cast<unsigned>(img.singular_count));
  return img.matrix.det() == expected;
}

QuadInt specialize_pe2(const LaurentPoly& p) {
  QuadInt sum;
  for (const auto& [e, coeff] : p.terms()) {
    for (int s = 2; s < 2 + p.indexed_vars(); ++s)
      if (e[s] != 0) throw UsageError("cannot specialize a polynomial with indexed variables");
    QuadInt term{(e[0] % 2 == 0) ? coeff : checked_mul(coeff, -1), 0};
    for (int k = 0; k < e[1]; ++k) term *= QuadInt::omega();
    sum += term;
  }
  return sum;
}

QuadMatrix specialize_pe2(const PolyMatrix& m) {
  return m.map([](const LaurentPoly& p) { return specialize_pe2(p); });
}

Pe2Image specialize_pe2(const BurauImage& img) { return {specialize_pe2(img.matrix)}; }

bool projective_eq(const QuadMatrix& m, const QuadMatrix& n) { return m == n || m == -n; }

}  // namespace sb3

#include <doctest.h>

#include "qball/error.hpp"
#include "qball/qmatrix.hpp"
#include "qball/uqact.hpp"

using namespace qball;

namespace {

const VScalar v = VScalar::v_pow(1);
VScalar q(int k) { return VScalar::q_pow(k); }

GeneratorId z(int a, int al) { return {GenClass::z, a, al}; }
GeneratorId zs(int a, int al) { return {GenClass::zs, a, al}; }

UqGen E(int i) { return {UqKind::E, i}; }
UqGen F(int i) { return {UqKind::F, i}; }
UqGen K(int i) { return {UqKind::K, i}; }
UqGen Ki(int i) { return {UqKind::Kinv, i}; }

}  // namespace

TEST_CASE("pol action table examples") {
  for (int n : {1, 2}) {
    auto m = pol_module(n);
    const Algebra& A = *m->algebra();
    const NCPoly znn = A.generator_poly(z(n, n));
    CHECK(m->act(F(n), znn) == NCPoly(v));
    CHECK(m->act(E(n), znn) == A.normalize({z(n, n), z(n, n)}, -v));
    CHECK(m->act(K(n), znn) == znn * q(2));
    CHECK(m->act(Ki(n), znn) == znn * q(-2));
    // Leibniz with K_n z = q^2 z
    const NCPoly sq = A.power(znn, 2);
    CHECK(m->act(E(n), sq) == A.power(znn, 3) * (-v * (VScalar(1) + q(2))));
  }
  auto m = pol_module(2);
  const Algebra& A = *m->algebra();
  CHECK(m->act(E(2), A.generator_poly(z(1, 1))) ==
        A.normalize({z(1, 2), z(2, 1)}, -v * q(-1)));
  CHECK(m->act(E(2), A.generator_poly(z(1, 2))) == A.normalize({z(2, 2), z(1, 2)}, -v));
  CHECK(m->act(F(1), A.generator_poly(z(1, 2))) == A.generator_poly(z(2, 2)) * v);
  CHECK(m->act(E(1), A.generator_poly(z(2, 2))) == A.generator_poly(z(1, 2)) * v.inverse());
  CHECK(m->act(F(3), A.generator_poly(z(2, 1))) == A.generator_poly(z(2, 2)) * v);
  CHECK(m->act(E(3), A.generator_poly(z(2, 2))) == A.generator_poly(z(2, 1)) * v.inverse());
  CHECK(m->act(E(1), NCPoly::one()).is_zero());
  CHECK(m->act(F(3), NCPoly::one()).is_zero());
  CHECK(m->act(K(2), NCPoly::one()) == NCPoly::one());
  CHECK_THROWS_AS(m->act(E(4), NCPoly::one()), Error);
  CHECK_THROWS_AS(m->act(E(0), NCPoly::one()), Error);
}

TEST_CASE("rectangular action table") {
  auto m = column_module(2, 4);
  const Algebra& A = *m->algebra();
  auto t = [&](int i, int j) { return A.generator_poly({GenClass::t, i, j}); };
  CHECK(m->act(F(1), t(1, 1)) == t(1, 2) * v);
  CHECK(m->act(E(1), t(1, 2)) == t(1, 1) * v.inverse());
  CHECK(m->act(E(1), t(1, 1)).is_zero());
  CHECK(m->act(K(2), t(2, 2)) == t(2, 2) * q(1));
  CHECK(m->act(K(2), t(2, 3)) == t(2, 3) * q(-1));
  CHECK(m->act(K(2), t(2, 4)) == t(2, 4));
}

TEST_CASE("antiholomorphic entries agree with the hand-derived formulas") {
  // E_j(z*) = -s_j q^{-2} (F_j z)*,  F_j(z*) = -s_j q^2 (E_j z)*,  K(z*) = (K^{-1} z)*
  for (int n : {1, 2}) {
    auto m = pol_module(n);
    const Algebra& A = *m->algebra();
    for (int a = 1; a <= n; ++a) {
      for (int al = 1; al <= n; ++al) {
        const NCPoly zz = A.generator_poly(z(a, al));
        const NCPoly zzs = A.generator_poly(zs(a, al));
        for (int j = 1; j < 2 * n; ++j) {
          const VScalar s = j == n ? VScalar(-1) : VScalar(1);
          CHECK(m->act(E(j), zzs) == star(A, m->act(F(j), zz)) * (-s * q(-2)));
          CHECK(m->act(F(j), zzs) == star(A, m->act(E(j), zz)) * (-s * q(2)));
          CHECK(m->act(K(j), zzs) == star(A, m->act(Ki(j), zz)));
        }
      }
    }
  }
}

TEST_CASE("star structure on generators") {
  CHECK(ustar(K(1), 2) == UqExpr(K(1)));
  UqExpr en;
  en.add({K(2), F(2)}, VScalar(-1));
  CHECK(ustar(E(2), 2) == en);
  UqExpr e1;
  e1.add({K(1), F(1)}, VScalar(1));
  CHECK(ustar(E(1), 2) == e1);
  UqExpr f2;
  f2.add({E(2), Ki(2)}, VScalar(-1));
  CHECK(ustar(F(2), 2) == f2);
  // * is an involution on generators
  for (const UqGen& g : chevalley_generators(3)) {
    CHECK(ustar(ustar(UqExpr(g), 2), 2) == UqExpr(g));
  }
  CHECK(counit(E(1)).is_zero());
  CHECK(counit(K(1)) == VScalar(1));
}

TEST_CASE("(a f)* = (S(a))* f* on every generator") {
  for (int n : {1, 2}) {
    auto m = pol_module(n);
    const Algebra& A = *m->algebra();
    for (const GeneratorId& x : A.alphabet()) {
      const NCPoly f = A.generator_poly(x);
      for (const UqGen& g : chevalley_generators(2 * n - 1)) {
        const NCPoly lhs = star(A, m->act(g, f));
        const NCPoly rhs = m->act(ustar(antipode(g), n), star(A, f));
        CHECK_MESSAGE(lhs == rhs, to_string(g) << " on " << to_string(x));
      }
    }
  }
}

TEST_CASE("weights and H_0 grading") {
  auto m1 = pol_module(1);
  const Algebra& A1 = *m1->algebra();
  const Word z1 = A1.generator_poly(z(1, 1)).begin()->first;
  CHECK(m1->weight(z1) == std::vector<int>{2});
  CHECK(h0_grade(m1->weight(z1), 1) == 1);
  CHECK(h0_grade(m1->weight(Word()), 1) == 0);

  auto m2 = pol_module(2);
  const Algebra& A2 = *m2->algebra();
  const Word z11 = A2.generator_poly(z(1, 1)).begin()->first;
  CHECK(m2->weight(z11) == std::vector<int>{1, 0, 1});
  CHECK(h0_grade(m2->weight(z11), 2) == 1);
  CHECK(m2->weight(Word()) == std::vector<int>{0, 0, 0});
  // every generator z has r = 1, every z* has r = -1; weights add up
  for (const GeneratorId& x : A2.alphabet()) {
    const Word w = A2.generator_poly(x).begin()->first;
    CHECK(h0_grade(m2->weight(w), 2) == (is_antiholomorphic(x.cls) ? -1 : 1));
  }
  for (const Word& w : wick_monomials(A2, 2, 2, 1)) {
    std::vector<int> sum(3, 0);
    for (std::size_t k = 0; k < w.size(); ++k) {
      const auto wk = m2->weight(Word(std::string(1, static_cast<char>(w[k]))));
      for (int i = 0; i < 3; ++i) sum[static_cast<std::size_t>(i)] += wk[static_cast<std::size_t>(i)];
    }
    CHECK(m2->weight(w) == sum);
  }
  CHECK_THROWS_AS(h0_value({1, 2}, 2), Error);
}

TEST_CASE("the action respects the defining relations") {
  for (int n : {1, 2}) {
    CHECK(module_relations_check(*pol_module(n), "pol").passed());
    CHECK(module_relations_check(*pol_module(n, PolFamily::boundary), "pol boundary").passed());
  }
  CHECK(module_relations_check(*column_module(1, 2), "rect 1x2").passed());
  CHECK(module_relations_check(*column_module(2, 4), "rect 2x4").passed());
}

TEST_CASE("a transcription error in the table is caught") {
  // holomorphic block alone; K_n on the mixed generators by q^{-1} breaks it
  AlgebraPtr alg = mat_algebra(2, 2, GenClass::z);
  const Algebra& A = *alg;
  auto good = [&](const UqGen& g, const GeneratorId& x) { return pol_table_entry(A, 2, g, x); };
  auto bad = [&](const UqGen& g, const GeneratorId& x) -> NCPoly {
    const bool mixed = (x.i == 2) != (x.j == 2);
    if (g.index == 2 && mixed && (g.kind == UqKind::K || g.kind == UqKind::Kinv)) {
      return A.generator_poly(x) * q(g.kind == UqKind::K ? -1 : 1);
    }
    return pol_table_entry(A, 2, g, x);
  };
  CHECK(module_relations_check(ModuleAlgebra(alg, 3, good), "good").passed());
  const Report r = module_relations_check(ModuleAlgebra(alg, 3, bad), "bad");
  CHECK_FALSE(r.passed());
  CHECK(r.residual_count > 0);
}

TEST_CASE("operator relations on components of bidegree <= (2,2), n = 2") {
  auto m = pol_module(2);
  const auto domain = wick_monomials(*m->algebra(), 2, 2, 2);
  CHECK(domain.size() == 225);
  const Report r = operator_relations_check(*m, domain, "n=2");
  CHECK_MESSAGE(r.passed(), (r.residual_sample.empty() ? "" : r.residual_sample.front()));
}

TEST_CASE("invariance of L and Lbar in rectangular coordinates") {
  for (int n : {1, 2}) {
    const Report rl = check_invariant(rect_L(n), "L");
    CHECK_MESSAGE(rl.passed(), (rl.residual_sample.empty() ? "" : rl.residual_sample.front()));
    const Report rb = check_invariant(rect_Lbar(n), "Lbar");
    CHECK_MESSAGE(rb.passed(), (rb.residual_sample.empty() ? "" : rb.residual_sample.front()));
  }
  // K_i L = L for n = 2, all i
  const Tensor L = rect_L(2);
  for (int i = 1; i <= 3; ++i) CHECK((act_tensor(K(i), L) - L).is_zero());
}

TEST_CASE("coproduct action on power-free kernels") {
  const Kernel one = Kernel::unit(1, 2);
  for (const UqGen& g : chevalley_generators(1)) {
    const Kernel out = act_tensor(g, one);
    CHECK(out.same_terms(one * counit(g)));
  }
  CHECK(check_invariant(kernel_as_tensor(one), "1").passed());
  auto pol = pol_algebra(1);
  const Kernel zx1 = Kernel::monomial(1, 2, PowerKey{}, pol->generator_poly(z(1, 1)), NCPoly::one());
  const Report r = check_invariant(kernel_as_tensor(zx1), "z (x) 1");
  CHECK_FALSE(r.passed());
  const Kernel fz = act_tensor(F(1), zx1);
  CHECK(fz.same_terms(Kernel::unit(1, 2) * v));
  CHECK_THROWS_AS(kernel_as_tensor(build_L(1, 1)), Error);
}

#include <doctest.h>

#include "qball/error.hpp"
#include "qball/hua.hpp"

using namespace qball;

namespace {

VScalar q(int k) { return VScalar::q_pow(k); }
GeneratorId z(int a, int al) { return {GenClass::z, a, al}; }
GeneratorId zs(int a, int al) { return {GenClass::zs, a, al}; }

std::string first_sample(const Report& r) {
  return r.residual_sample.empty() ? std::string() : r.residual_sample.front();
}

}  // namespace

TEST_CASE("d2 at zero and the Hua sums on plain series") {
  auto pol = pol_algebra(1);
  const TruncatedSeries zz(pol, 2, pol->normalize({z(1, 1), zs(1, 1)}));
  CHECK(d2_at_zero(zz, 1, 1, 1, 1) == VScalar(1));
  const TruncatedSeries one(pol, 2, NCPoly::one());
  CHECK(d2_at_zero(one, 1, 1, 1, 1).is_zero());
  CHECK(hua_sum_A(one, 1, 1).is_zero());
  CHECK(hua_sum_B(one, 1, 1).is_zero());
  // not a Poisson integral
  CHECK(hua_sum_A(zz, 1, 1) == q(2));
  CHECK_THROWS_AS(d2_at_zero(zz, 2, 1, 1, 1), Error);

  auto pol2 = pol_algebra(2);
  // z_2^1 (z_1^2)*
  const TruncatedSeries u(pol2, 1, pol2->normalize({z(2, 1), zs(1, 2)}, VScalar(3)));
  CHECK(d2_at_zero(u, 2, 1, 1, 2) == VScalar(3));
  CHECK(d2_at_zero(u, 1, 2, 2, 1).is_zero());
  // B(1,2) = sum_gamma q^{2 gamma} d2(1, gamma, 2, gamma); A(2,1) = sum_c q^{2c} d2(c, 1, c, 2)
  const TruncatedSeries w(pol2, 1,
                          pol2->normalize({z(1, 2), zs(2, 2)}) + pol2->normalize({z(2, 1), zs(2, 2)}));
  CHECK(hua_sum_B(w, 1, 2) == q(4));
  CHECK(hua_sum_A(w, 2, 1) == q(4));
  CHECK(hua_sum_A(w, 2, 1, HuaWeights::one) == VScalar(1));
}

TEST_CASE("Poisson kernel n = 1: p11 is proportional to zeta zeta* - 1") {
  const PoissonKernel P = poisson_kernel(1, 1);
  const NCPoly d = d2_at_zero(P.kernel, 1, 1, 1, 1);
  auto bnd = pol_algebra(1, PolFamily::boundary);
  const NCPoly shape = bnd->normalize({GeneratorId{GenClass::zeta, 1, 1}, GeneratorId{GenClass::zetas, 1, 1}}) -
                       NCPoly::one();
  const VScalar c = d.scalar_part() / shape.scalar_part();
  CHECK(d == shape * c);
  CHECK(shilov_reduce(1, d).is_zero());
}

TEST_CASE("p11 against the expected formula") {
  for (int n : {1, 2}) {
    const Report r = verify_p11(n, 1);
    CHECK_MESSAGE(r.passed(), first_sample(r));
  }
  CHECK(verify_p11(2, 0).status == Status::skipped);
}

TEST_CASE("Hua kernel identities") {
  for (int n : {1, 2}) {
    const Report r = verify_hua_kernel(n, 1);
    CHECK_MESSAGE(r.passed(), first_sample(r));
  }
  // the q-weights are essential
  const HuaReport neg = hua_kernel_system(2, 1, HuaSystem::A, HuaWeights::one);
  CHECK(neg.status == Status::fail);
  CHECK_FALSE(verify_hua_kernel(2, 1, HuaWeights::one).passed());
  // system A with only the row relations, B needs the column relations
  CHECK(hua_kernel_system(2, 1, HuaSystem::A).passed());
  CHECK(hua_kernel_system(2, 1, HuaSystem::B).passed());
  CHECK(verify_hua_kernel(2, 0).status == Status::skipped);
}

TEST_CASE("Poisson integrals for n = 1") {
  const PoissonKernel P = poisson_kernel(1, 4);
  auto pol = pol_algebra(1);
  const TruncatedSeries one = poisson_integral_n1(P.kernel, N1Boundary(VScalar(1)), 4);
  CHECK(one.poly() == NCPoly::one());

  const TruncatedSeries u = poisson_integral_n1(P.kernel, N1Boundary::monomial(1), 4);
  const NCPoly u10 = u.bicomponent(1, 0);
  REQUIRE(u10.size() == 1);
  CHECK(u10.begin()->first == pol->generator_poly(z(1, 1)).begin()->first);
  // classical harmonic extension of zeta^k: z^k, and conj(z)^k for zeta^{-k}
  for (int k : {1, 2, -1, -2}) {
    const TruncatedSeries uk = poisson_integral_n1(P.kernel, N1Boundary::monomial(k), 4);
    const NCPoly expect = pol->power(pol->generator_poly(k > 0 ? z(1, 1) : zs(1, 1)), std::abs(k));
    for (const auto& [w, c] : uk.poly()) {
      CHECK(c.eval(1) == expect.coeff(w).eval(1));
    }
    CHECK_FALSE(uk.poly().coeff(expect.begin()->first).is_zero());
  }
  // Fourier orthogonality: nothing from zeta^5 survives below the cutoff
  CHECK(poisson_integral_n1(P.kernel, N1Boundary::monomial(5), 4).poly().is_zero());
}

TEST_CASE("Hua equations on Poisson integrals, n = 1") {
  const std::vector<N1Boundary> fs{N1Boundary(VScalar(1)), N1Boundary::monomial(1), N1Boundary::monomial(2),
                                   N1Boundary::monomial(-1)};
  const auto words = generator_words_n1(2);
  CHECK(words.size() == 21);
  const HuaReport h = verify_hua_theorem_n1(fs, words, 4);
  CHECK_MESSAGE(h.passed(), (h.residuals.empty() ? std::string() : h.residuals.front().value));
  // cutoff 1 cannot carry a word with an E or F
  const HuaReport low = verify_hua_theorem_n1(fs, {{UqGen{UqKind::E, 1}}}, 1);
  CHECK(low.truncated);
  CHECK(low.status == Status::skipped);
}

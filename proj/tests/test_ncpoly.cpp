#include <doctest.h>

#include <random>

#include "qball/error.hpp"
#include "qball/ncpoly.hpp"
#include "qball/qmatrix.hpp"

using namespace qball;

namespace {

const VScalar q = VScalar::q_pow(1);

GeneratorId z(int a, int alpha) { return {GenClass::z, a, alpha}; }
GeneratorId t(int i, int j) { return {GenClass::t, i, j}; }

NCPoly word(const Algebra& alg, std::initializer_list<GeneratorId> gens) {
  Word w;
  for (const auto& g : gens) w.push_back(alg.rank_or_throw(g));
  return NCPoly(w, VScalar(1));
}

Word random_word(std::mt19937& rng, const Algebra& alg, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alg.size()) - 1);
  Word w;
  for (std::size_t k = 0, l = len(rng); k < l; ++k) w.push_back(static_cast<std::uint8_t>(letter(rng)));
  return w;
}

NCPoly random_poly(std::mt19937& rng, const Algebra& alg, std::size_t max_len) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> e(-2, 2);
  NCPoly p;
  for (int k = 0; k < 3; ++k) {
    p += alg.normalize(random_word(rng, alg, max_len), VScalar(coef(rng)) * VScalar::q_pow(e(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("swapped products in the z alphabet") {
  AlgebraPtr alg = mat_algebra(2, 2, GenClass::z);
  CHECK(alg->normalize({z(1, 2), z(1, 1)}) == word(*alg, {z(1, 1), z(1, 2)}) * q.inverse());
  CHECK(alg->normalize({z(2, 2), z(1, 1)}) ==
        word(*alg, {z(1, 1), z(2, 2)}) - word(*alg, {z(1, 2), z(2, 1)}) * (q - q.inverse()));
  CHECK(alg->normalize(std::vector<GeneratorId>{}) == NCPoly::one());
  CHECK(alg->render(alg->normalize({z(1, 2), z(1, 1)})) == "q^-1*z[1,1]*z[1,2]");
}

TEST_CASE("commuting pair in the t alphabet") {
  AlgebraPtr alg = mat_algebra(2, 2);
  CHECK(alg->normalize({t(2, 1), t(1, 2)}) == word(*alg, {t(1, 2), t(2, 1)}));
}

TEST_CASE("unknown generators are rejected") {
  AlgebraPtr alg = mat_algebra(2, 2, GenClass::z);
  try {
    (void)alg->normalize({z(3, 1)});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unknown_generator);
  }
  CHECK_THROWS_AS(alg->normalize({t(1, 1)}), Error);
}

TEST_CASE("multiplication basics") {
  AlgebraPtr alg = mat_algebra(2, 2, GenClass::z);
  NCPoly z11 = alg->generator_poly(z(1, 1));
  NCPoly p = word(*alg, {z(1, 1), z(2, 2)}) - word(*alg, {z(1, 2), z(2, 1)}) * q;
  CHECK(nc_mul(*alg, NCPoly::one(), p) == p);
  CHECK(nc_mul(*alg, z11, z11) == word(*alg, {z(1, 1), z(1, 1)}));
  CHECK(nc_mul(*alg, p, z11) == nc_mul(*alg, z11, p));
}

TEST_CASE("coefficients and grading") {
  AlgebraPtr alg = mat_algebra(2, 2, GenClass::z);
  NCPoly p = alg->generator_poly(z(1, 1)) * q;
  Word w;
  w.push_back(alg->rank_or_throw(z(1, 1)));
  CHECK(nc_coeff(*alg, p, w) == q);
  Word bad;
  bad.push_back(alg->rank_or_throw(z(2, 2)));
  bad.push_back(alg->rank_or_throw(z(1, 1)));
  try {
    (void)nc_coeff(*alg, p, bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::non_canonical);
  }
  auto graded = nc_grade(*alg, NCPoly::one(), bidegree_of);
  REQUIRE(graded.size() == 1);
  CHECK(graded.begin()->first == std::vector<int>{0, 0});
  CHECK(graded.begin()->second == NCPoly::one());
}

TEST_CASE("graded components sum back") {
  std::mt19937 rng(7);
  AlgebraPtr alg = mat_algebra(2, 3);
  for (int trial = 0; trial < 50; ++trial) {
    NCPoly p = random_poly(rng, *alg, 4);
    auto parts = nc_grade(*alg, p, [](const GeneratorId& g) { return std::vector<int>{g.i, g.j}; });
    NCPoly sum;
    for (const auto& [deg, part] : parts) sum += part;
    CHECK(sum == p);
  }
}

TEST_CASE("strategies agree on random words") {
  std::mt19937 rng(12345);
  std::vector<AlgebraPtr> algebras = {mat_algebra(2, 2), mat_algebra(2, 4), mat_algebra(3, 3)};
  for (const auto& alg : algebras) {
    CAPTURE(alg->name());
    for (int trial = 0; trial < 1000; ++trial) {
      Word w = random_word(rng, *alg, 8);
      NCPoly memo = alg->normalize(w);
      REQUIRE(memo == alg->normalize(w, VScalar(1), Strategy::leftmost));
      REQUIRE(memo == alg->normalize(w, VScalar(1), Strategy::rightmost));
      for (const auto& [u, c] : memo) REQUIRE(alg->is_canonical(u));
    }
  }
}

TEST_CASE("associativity") {
  std::mt19937 rng(99);
  AlgebraPtr alg = mat_algebra(3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    NCPoly a = random_poly(rng, *alg, 3), b = random_poly(rng, *alg, 3), c = random_poly(rng, *alg, 3);
    REQUIRE(alg->multiply(alg->multiply(a, b), c) == alg->multiply(a, alg->multiply(b, c)));
  }
}

TEST_CASE("rule tables must decrease") {
  std::vector<GeneratorId> gens = {t(1, 1), t(1, 2)};
  auto bad = [](const GeneratorId& hi, const GeneratorId& lo) {
    return std::vector<RuleTerm>{{VScalar(1), {hi, lo}}};
  };
  CHECK_THROWS_AS(Algebra("bad", gens, bad), Error);
}

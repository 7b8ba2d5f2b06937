#include <doctest.h>

#include <random>
#include <set>

#include "qball/error.hpp"
#include "qball/qmatrix.hpp"

using namespace qball;

namespace {

const VScalar q = VScalar::q_pow(1);

GeneratorId t(int i, int j) { return {GenClass::t, i, j}; }

}  // namespace

TEST_CASE("index set helpers") {
  CHECK(subsets(4, 2).size() == 6);
  CHECK(subsets(4, 2).front() == IndexSet{1, 2});
  CHECK(subsets(4, 2).back() == IndexSet{3, 4});
  CHECK(complement({2, 3}, 4) == IndexSet{1, 4});
  CHECK(inversions({2, 4}, {1, 3}) == 3);
  CHECK_THROWS_AS(check_index_set({2, 1}, 3), Error);
}

TEST_CASE("small minors") {
  AlgebraPtr alg = mat_algebra(2, 2);
  CHECK(qminor(*alg, {1}, {2}) == alg->generator_poly(t(1, 2)));
  NCPoly expected = alg->normalize({t(1, 1), t(2, 2)}) - alg->normalize({t(1, 2), t(2, 1)}) * q;
  CHECK(qminor(*alg, {1, 2}, {1, 2}) == expected);
  CHECK(qdet(*alg, 2) == expected);
  CHECK(qdet(*mat_algebra(1, 1), 1) == mat_algebra(1, 1)->generator_poly(t(1, 1)));
  CHECK_THROWS_AS(qminor(*alg, {1, 2}, {1}), Error);
}

TEST_CASE("row and column forms agree in a 2x4 algebra") {
  AlgebraPtr alg = mat_algebra(2, 4);
  for (int k = 1; k <= 2; ++k) {
    for (const auto& rows : subsets(2, k)) {
      for (const auto& cols : subsets(4, k)) {
        CHECK(qminor(*alg, rows, cols, GenClass::t, MinorForm::rows) ==
              qminor(*alg, rows, cols, GenClass::t, MinorForm::columns));
      }
    }
  }
}

TEST_CASE("row and column forms agree for 3x3 minors") {
  AlgebraPtr alg = mat_algebra(3, 4);
  for (const auto& cols : subsets(4, 3)) {
    CHECK(qminor(*alg, {1, 2, 3}, cols, GenClass::t, MinorForm::rows) ==
          qminor(*alg, {1, 2, 3}, cols, GenClass::t, MinorForm::columns));
  }
}

TEST_CASE("determinant is central") {
  AlgebraPtr alg = mat_algebra(2, 2);
  NCPoly det = qdet(*alg, 2);
  CHECK(alg->commutator(det, alg->generator_poly(t(1, 2))).is_zero());
  CHECK(centrality_check(2).passed());
  CHECK(centrality_check(3).passed());
}

TEST_CASE("Laplace expansion") {
  Report r1 = laplace_check(1);
  CHECK(r1.passed());
  CHECK(laplace_check(2).passed());
  Report bad = laplace_check(1, true);
  CHECK(bad.status == Status::fail);
  CHECK(!bad.residual_sample.empty());
}

TEST_CASE("multiplication map") {
  AlgebraPtr rect = mat_algebra(1, 2);
  AlgebraPtr square = mat_algebra(2, 2);
  CHECK(m_map(*rect, NCPoly::one(), NCPoly::one(), *square) == NCPoly::one());
  // L for n = 1 summed through m gives det_q
  NCPoly l;
  l += m_map(*rect, rect->generator_poly(t(1, 1)), rect->generator_poly(t(1, 2)), *square);
  l -= m_map(*rect, rect->generator_poly(t(1, 2)), rect->generator_poly(t(1, 1)), *square) * q;
  CHECK(l == qdet(*square, 2));
}

TEST_CASE("m is injective on a monomial sample") {
  AlgebraPtr rect = mat_algebra(2, 4);
  AlgebraPtr square = mat_algebra(4, 4);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(rect->size()) - 1);
  std::uniform_int_distribution<int> len(0, 2);
  std::set<std::pair<Word, Word>> inputs;
  while (inputs.size() < 20) {
    Word a, b;
    for (int k = 0, l = len(rng); k < l; ++k) a.push_back(static_cast<std::uint8_t>(letter(rng)));
    for (int k = 0, l = len(rng); k < l; ++k) b.push_back(static_cast<std::uint8_t>(letter(rng)));
    inputs.insert({rect->normalize(a).begin()->first, rect->normalize(b).begin()->first});
  }
  std::set<std::string> outputs;
  for (const auto& [a, b] : inputs) {
    outputs.insert(square->render(m_map(*rect, NCPoly(a, 1), NCPoly(b, 1), *square)));
  }
  CHECK(outputs.size() == inputs.size());
}

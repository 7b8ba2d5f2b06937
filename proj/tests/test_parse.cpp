#include <doctest.h>

#include "qball/error.hpp"
#include "qball/parse.hpp"
#include "qball/polmat.hpp"

using namespace qball;

namespace {

ErrorKind kind_of(const std::string& text, int n) {
  try {
    parse_expr(text, n);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::precondition;
}

}  // namespace

TEST_CASE("parse: normal forms") {
  // z_1^2 z_1^1 = q^{-1} z_1^1 z_1^2, the row relation read backwards
  const ParsedExpr e = parse_expr("z[1,2]*z[1,1]", 2);
  CHECK(e.family == AtomFamily::pol);
  auto pol = pol_algebra(2);
  const NCPoly expect =
      pol->normalize({GeneratorId{GenClass::z, 1, 1}, GeneratorId{GenClass::z, 1, 2}}, VScalar::q_pow(-1));
  CHECK(e.value == expect);
  CHECK(e.value.size() == 1);

  const ParsedExpr s = parse_expr("q - q^-1", 1);
  CHECK(s.family == AtomFamily::scalar);
  CHECK(s.value.scalar_part() == (VScalar::v_pow(4) - VScalar(1)) / VScalar::v_pow(2));
  CHECK(parse_expr("v^2", 1).value.scalar_part() == VScalar::q_pow(1));
  CHECK(parse_expr("-3/6 + (1/2)", 1).value.is_zero());
  CHECK(parse_expr("2*z[1,1] - z[1,1]*2", 1).value.is_zero());
  CHECK(parse_expr("z[1,1]^0", 1).value == NCPoly::one());
  // y z = q^2 z y for n = 1
  CHECK(parse_expr("(1 - z[1,1]*zs[1,1])*z[1,1] - q^2*z[1,1]*(1 - z[1,1]*zs[1,1])", 1).value.is_zero());
  CHECK(parse_expr("t[4,4]*t[1,1]", 2).family == AtomFamily::square);
  CHECK(parse_expr("zeta[1,1]*zetas[1,1]", 1).family == AtomFamily::boundary);
}

TEST_CASE("parse: errors") {
  CHECK(kind_of("z[0,1]", 1) == ErrorKind::index_range);
  CHECK(kind_of("z[1,3]", 2) == ErrorKind::index_range);
  CHECK(kind_of("t[5,1]", 2) == ErrorKind::index_range);
  CHECK(kind_of("z[1,1]*zeta[1,1]", 1) == ErrorKind::parse);
  CHECK(kind_of("t[1,1] + z[1,1]", 1) == ErrorKind::parse);
  CHECK(kind_of("z[1,1", 1) == ErrorKind::parse);
  CHECK(kind_of("z[1,1]^-1", 1) == ErrorKind::parse);
  CHECK(kind_of("w", 1) == ErrorKind::parse);
  CHECK(kind_of("1 +", 1) == ErrorKind::parse);
  CHECK(kind_of("2 $ 3", 1) == ErrorKind::parse);
  CHECK(kind_of("1/0", 1) == ErrorKind::division_by_zero);
  try {
    parse_expr("z[1,1] + )", 1);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).rfind("at 10:", 0) == 0);
  }
}

TEST_CASE("parse: render round trip") {
  const std::vector<std::pair<std::string, int>> cases{
      {"q - q^-1", 1},
      {"(q + 1)^3 * 1/3", 1},
      {"z[1,2]*z[1,1] + zs[2,2]*z[2,1]", 2},
      {"(zs[1,1] - q*z[1,2])^2 * zs[2,1]", 2},
      {"zetas[1,1]*zeta[1,1] - 1", 1},
      {"t[2,1]*t[1,2] - v*t[1,1]*t[2,2]", 1},
      {"(z[1,1]*zs[1,1])^2 - 1/2", 1},
  };
  for (const auto& [text, n] : cases) {
    const ParsedExpr e = parse_expr(text, n);
    const std::string once = render(e);
    const ParsedExpr back = parse_expr(once, n);
    CHECK_MESSAGE(back.value == e.value, text << " -> " << once);
    CHECK(render(back) == once);
  }
}

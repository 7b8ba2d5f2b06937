#include <doctest.h>

#include <cstdlib>

#include "qball/error.hpp"
#include "qball/suites.hpp"

using namespace qball;

namespace {

std::string first_sample(const Report& r) {
  return r.residual_sample.empty() ? std::string() : r.residual_sample.front();
}

SuiteOptions opts(int n, int cutoff) {
  SuiteOptions o;
  o.n = n;
  o.cutoff = cutoff;
  return o;
}

}  // namespace

TEST_CASE("engine suites") {
  for (int n : {1, 2}) {
    const Report c = confluence_check(n, 200);
    CHECK_MESSAGE(c.passed(), first_sample(c));
    const Report s = star_check(n, 50);
    CHECK_MESSAGE(s.passed(), first_sample(s));
    const Report sh = shilov_consistency_check(n);
    CHECK_MESSAGE(sh.passed(), first_sample(sh));
  }
  // a different seed draws different words but reaches the same verdict
  CHECK(confluence_check(1, 100, 99).passed());
}

TEST_CASE("poisson suite for n = 1") {
  const Report r = poisson_check_n1(3);
  CHECK_MESSAGE(r.passed(), first_sample(r));
  CHECK(r.truncated);
  CHECK(poisson_check_n1(0).status == Status::skipped);
  const Report n2 = run_suite("poisson", opts(2, 1));
  CHECK(n2.status == Status::skipped);
  CHECK_FALSE(n2.notes.empty());
}

TEST_CASE("run_suite dispatch and report fields") {
  const Report r = run_suite("laplace", opts(2, 1));
  CHECK(r.suite == "laplace");
  CHECK(r.n == 2);
  CHECK(r.passed());
  CHECK(run_suite("central", opts(2, 1)).suite == "central");
  CHECK_THROWS_AS(run_suite("nope", opts(1, 1)), Error);
  CHECK_THROWS_AS(run_suite("laplace", opts(0, 1)), Error);

  const Report skip = run_suite("hua-kernel", opts(2, 0));
  CHECK(skip.status == Status::skipped);
  REQUIRE_FALSE(skip.notes.empty());
  CHECK(skip.notes.front() == "cutoff too small");
  CHECK(run_suite("hua-theorem-n1", opts(2, 2)).status == Status::skipped);
}

TEST_CASE("eval-v cross-check") {
  SuiteOptions o = opts(1, 1);
  o.eval_v = mpq_class(1, 2);
  const Report r = run_suite("p11", o);
  CHECK(r.passed());
  bool noted = false;
  for (const auto& s : r.notes) noted = noted || s.find("eval-v at v = 1/2: agrees") != std::string::npos;
  CHECK(noted);
  // the classical point and v = 0 are regular for p11 here
  for (int v : {0, 1}) {
    o.eval_v = mpq_class(v);
    CHECK(run_suite("p11", o).passed());
  }
}

TEST_CASE("run_suites keeps request order and expands all") {
  const auto all = run_suites({"all"}, opts(1, 2), 2);
  REQUIRE(all.size() == suite_names().size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    CHECK(all[k].suite == suite_names()[k]);
    CHECK_MESSAGE(all[k].status != Status::fail, all[k].suite << ": " << first_sample(all[k]));
  }
  const auto two = run_suites({"star", "laplace"}, opts(1, 1), 4);
  CHECK(two[0].suite == "star");
  CHECK(two[1].suite == "laplace");
  CHECK_THROWS_AS(run_suites({"laplace", "nope"}, opts(1, 1), 1), Error);
}

TEST_CASE("JSON is deterministic apart from wall_ms") {
  auto strip = [](Report r) {
    r.wall_ms = 0;
    return to_json(r).dump();
  };
  const std::string a = strip(run_suite("hua-kernel", opts(1, 2)));
  const std::string b = strip(run_suite("hua-kernel", opts(1, 2)));
  CHECK(a == b);
  const auto j = to_json(run_suite("laplace", opts(1, 1)));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "n", "cutoff", "status", "residual_count", "residual_sample",
                                         "truncated", "wall_ms", "notes"});
}

TEST_CASE("limits") {
  for (int n : {1, 2}) {
    const Report r = limits_check(n, 2);
    CHECK_MESSAGE(r.passed(), first_sample(r));
  }
}

TEST_CASE("worker count") {
  ::setenv("QBALL_THREADS", "3", 1);
  CHECK(default_threads() == 3);
  ::setenv("QBALL_THREADS", "zero", 1);
  CHECK(default_threads() >= 1);
  ::unsetenv("QBALL_THREADS");
}

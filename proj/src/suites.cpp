#include "qball/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <thread>

#include "qball/boundary.hpp"
#include "qball/error.hpp"
#include "qball/hua.hpp"
#include "qball/kernel.hpp"
#include "qball/polmat.hpp"
#include "qball/qmatrix.hpp"
#include "qball/uqact.hpp"

namespace qball {

namespace {

Report start(const std::string& suite, int n, int cutoff = 0) {
  Report r;
  r.suite = suite;
  r.n = n;
  r.cutoff = cutoff;
  return r;
}

Report finish(Report r) {
  if (r.residual_count == 0 && r.status != Status::skipped) r.status = Status::pass;
  return r;
}

Report skipped(const std::string& suite, int n, int cutoff, const std::string& why) {
  Report r = start(suite, n, cutoff);
  r.status = Status::skipped;
  r.note(why);
  return r;
}

Word random_word(std::mt19937& rng, const Algebra& alg, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alg.size()) - 1);
  Word w;
  for (int k = 0, l = len(rng); k < l; ++k) w.push_back(static_cast<std::uint8_t>(letter(rng)));
  return w;
}

NCPoly random_poly(std::mt19937& rng, const Algebra& alg, int max_len) {
  std::uniform_int_distribution<int> coef(-2, 2);
  NCPoly p;
  for (int k = 0; k < 2; ++k) {
    p += alg.normalize(random_word(rng, alg, max_len), VScalar(coef(rng)) * VScalar::q_pow(coef(rng)));
  }
  return p;
}

void absorb_named(Report& into, Report part, const std::string& label) {
  for (std::string& s : part.residual_sample) s = label + ": " + s;
  into.absorb(part);
}

}  // namespace

Report confluence_check(int n, int words, unsigned seed) {
  Report r = start("confluence", n);
  std::mt19937 rng(seed);
  const std::vector<std::pair<std::string, AlgebraPtr>> algebras{
      {"Mat_n", mat_algebra(n, n)},
      {"Mat_n,2n", mat_algebra(n, 2 * n)},
      {"Pol", pol_algebra(n, PolFamily::domain)},
      {"Pol boundary", pol_algebra(n, PolFamily::boundary)},
  };
  for (const auto& [name, alg] : algebras) {
    for (int k = 0; k < words; ++k) {
      const Word w = random_word(rng, *alg, 7);
      const NCPoly memo = alg->normalize(w);
      for (Strategy s : {Strategy::leftmost, Strategy::rightmost}) {
        const NCPoly other = alg->normalize(w, VScalar(1), s);
        if (!(other == memo)) r.add_residual(name + " " + alg->render_word(w) + ": " + alg->render(memo - other));
      }
    }
  }
  r.note(std::to_string(words) + " random words per algebra");
  return finish(r);
}

Report star_check(int n, int pairs, unsigned seed) {
  Report r = start("star", n);
  std::mt19937 rng(seed);
  AlgebraPtr pol = pol_algebra(n);
  for (int k = 0; k < pairs; ++k) {
    const NCPoly a = random_poly(rng, *pol, 4);
    const NCPoly b = random_poly(rng, *pol, 3);
    if (!(star(*pol, star(*pol, a)) == a)) r.add_residual("not involutive on " + pol->render(a));
    const NCPoly lhs = star(*pol, pol->multiply(a, b));
    const NCPoly rhs = pol->multiply(star(*pol, b), star(*pol, a));
    if (!(lhs == rhs)) r.add_residual("not antimultiplicative: " + pol->render(lhs - rhs));
  }
  const NCPoly y = y_element(*pol, n);
  for (int a = 1; a <= n; ++a) {
    for (int al = 1; al <= n; ++al) {
      const NCPoly z = pol->generator_poly({GenClass::z, a, al});
      const NCPoly diff = pol->multiply(y, z) - pol->multiply(z, y) * VScalar::q_pow(2);
      if (!diff.is_zero()) r.add_residual("y z != q^2 z y for z[" + std::to_string(a) + "," + std::to_string(al) + "]");
    }
  }
  r.note(std::to_string(pairs) + " random pairs");
  return finish(r);
}

Report shilov_consistency_check(int n) {
  Report r = start("shilov-consistency", n);
  AlgebraPtr pol = pol_algebra(n);
  const GLModel model(n, CofactorConvention::delete_row_a_col_alpha);
  for (int al = 1; al <= n; ++al) {
    for (int be = 1; be <= n; ++be) {
      NCPoly rel;
      for (int j = 1; j <= n; ++j) {
        rel += pol->normalize({GeneratorId{GenClass::z, j, al}, GeneratorId{GenClass::zs, j, be}},
                              VScalar::q_pow(2 * n - al - be));
      }
      if (al == be) rel -= NCPoly::one();
      const GLnElement img = model.embed(*pol, rel);
      if (!model.is_zero(img)) {
        r.add_residual("relation (" + std::to_string(al) + "," + std::to_string(be) + "): " + model.render(img));
      }
    }
  }
  return finish(r);
}

Report poisson_check_n1(int cutoff) {
  if (cutoff < 1) return skipped("poisson", 1, cutoff, "cutoff too small");
  Report r = start("poisson", 1, cutoff);
  const PoissonKernel P = poisson_kernel(1, cutoff);
  r.truncated = P.kernel.truncated();
  if (P.kernel.inexact()) r.add_residual("kernel inexact below the cutoff");
  // (1 - z* (x) zeta)^{-1} (y (x) 1) (1 - z (x) zeta*)^{-1}
  Kernel base(1, cutoff);
  const Algebra& first = *base.first_algebra();
  const Algebra& second = *base.second_algebra();
  auto mono = [&](GenClass f, GenClass s) {
    return Kernel::monomial(1, cutoff, PowerKey{}, first.generator_poly({f, 1, 1}), second.generator_poly({s, 1, 1}));
  };
  const Kernel a = kinverse(Kernel::unit(1, cutoff) - mono(GenClass::zs, GenClass::zeta));
  const Kernel y = Kernel::monomial(1, cutoff, PowerKey{}, y_element(first, 1), NCPoly::one());
  const Kernel b = kinverse(Kernel::unit(1, cutoff) - mono(GenClass::z, GenClass::zetas));
  const Kernel expected = kmul(kmul(a, y), b);
  const Kernel diff = P.kernel - expected;
  if (!diff.is_zero()) r.add_residual("closed form: " + diff.render());
  if (!(P.raw_p00 == VScalar::q_pow(2))) r.note("raw constant term " + P.raw_p00.to_string());
  const TruncatedSeries one = poisson_integral_n1(P.kernel, N1Boundary(VScalar(1)), cutoff);
  if (!(one.poly() == NCPoly::one())) r.add_residual("P[1] = " + first.render(one.poly()));
  // sum_{k <= D} z^k (1 - z z*) z*^k = 1 + terms beyond (D, D)
  const NCPoly z = first.generator_poly({GenClass::z, 1, 1});
  const NCPoly zs = first.generator_poly({GenClass::zs, 1, 1});
  NCPoly s;
  for (int k = 0; k <= cutoff; ++k) {
    s += first.multiply(first.multiply(first.power(z, k), y_element(first, 1)), first.power(zs, k));
  }
  const TruncatedSeries rest(base.first_algebra(), cutoff, s - NCPoly::one());
  if (!rest.poly().is_zero()) r.add_residual("telescoping sum: " + first.render(rest.poly()));
  return finish(r);
}

Report invariance_check(int n) {
  Report r = start("invariance", n);
  absorb_named(r, check_invariant(rect_L(n), "L"), "L");
  absorb_named(r, check_invariant(rect_Lbar(n), "Lbar"), "Lbar");
  return finish(r);
}

Report action_check(int n) {
  Report r = start("action", n);
  absorb_named(r, module_relations_check(*pol_module(n), "Pol"), "Pol");
  absorb_named(r, module_relations_check(*pol_module(n, PolFamily::boundary), "Pol boundary"), "Pol boundary");
  absorb_named(r, module_relations_check(*column_module(n, 2 * n), "Mat_n,2n"), "Mat_n,2n");
  auto m = pol_module(n);
  const auto domain = wick_monomials(*m->algebra(), n, 2, 2);
  absorb_named(r, operator_relations_check(*m, domain, "operators"), "operators");
  r.notes.clear();
  r.note(std::to_string(domain.size()) + " monomials of bidegree <= (2,2)");
  return finish(r);
}

Report limits_check(int n, int cutoff) {
  const int D = std::max(cutoff, 1);
  Report r = start("limits", n, D);
  // p11 at v = 1 against n sum (n zeta conj(zeta) - delta delta) conj(z) z
  absorb_named(r, verify_p11(n, 1), "p11");
  // Hua sums at v = 1 follow the classical pattern n^2 (sum zeta conj(zeta) - delta)
  absorb_named(r, verify_hua_kernel(n, 1), "hua");
  if (n == 1) {
    // harmonic extension of zeta^k is z^k, of zeta^{-k} is conj(z)^k
    const PoissonKernel P = poisson_kernel(1, D);
    const Algebra& pol = *P.kernel.first_algebra();
    for (int k = -D; k <= D; ++k) {
      const TruncatedSeries u = poisson_integral_n1(P.kernel, N1Boundary::monomial(k), D);
      const NCPoly expect =
          pol.power(pol.generator_poly({k >= 0 ? GenClass::z : GenClass::zs, 1, 1}), std::abs(k));
      const NCPoly diff = u.poly() - expect;
      for (const auto& [w, c] : diff) {
        if (c.eval(1) != 0) r.add_residual("P[zeta^" + std::to_string(k) + "] at v = 1: " + pol.render(diff));
      }
    }
  }
  r.notes.clear();
  r.note("v = 1 comparisons");
  r.status = r.residual_count == 0 ? Status::pass : Status::fail;
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"laplace", "central", "confluence", "invariance",
                                              "star", "action", "poisson", "p11",
                                              "hua-kernel", "hua-theorem-n1", "shilov-consistency"};
  return names;
}

namespace {

// Coefficientwise p11 = c expected at v = v0, retrying on poles.
void eval_pass(Report& r, int n, const mpq_class& v0) {
  const PoissonKernel P = poisson_kernel(n, 1);
  const Kernel p11 = p_component(P.kernel, 1, 1);
  const Kernel expected = p11_expected(n, 1);
  const auto c = proportionality(p11, expected);
  if (!c) {
    r.add_residual("eval-v: p11 not proportional");
    return;
  }
  mpq_class v = v0;
  for (int attempt = 0; attempt < 8; ++attempt, v += mpq_class(1, 3)) {
    try {
      const mpq_class cv = c->eval(v);
      bool ok = true;
      for (const auto& [key, g] : p11.terms()) {
        auto it = expected.terms().find(key);
        for (const auto& [w, x] : g) {
          const mpq_class e = it == expected.terms().end() ? mpq_class(0) : it->second.coeff(w).eval(v);
          if (x.eval(v) != cv * e) ok = false;
        }
      }
      r.note("eval-v at v = " + v.get_str() + (ok ? ": agrees" : ": DISAGREES"));
      if (!ok) r.add_residual("eval-v: p11 differs at v = " + v.get_str());
      return;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::pole) throw;
    }
  }
  r.note("eval-v: every candidate point was a pole");
}

}  // namespace

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = opt.n;
  const int D = opt.cutoff;
  if (n < 1) throw Error(ErrorKind::precondition, "n must be positive");
  Report r;
  if (name == "laplace") {
    r = laplace_check(n);
  } else if (name == "central") {
    r = centrality_check(n);
    r.suite = "central";
  } else if (name == "confluence") {
    r = confluence_check(n);
  } else if (name == "invariance") {
    r = invariance_check(n);
  } else if (name == "star") {
    r = star_check(n);
  } else if (name == "action") {
    r = action_check(n);
  } else if (name == "poisson") {
    r = n == 1 ? poisson_check_n1(D) : skipped("poisson", n, D, "closed form available for n = 1 only");
  } else if (name == "p11") {
    r = verify_p11(n, D);
  } else if (name == "hua-kernel") {
    r = verify_hua_kernel(n, D);
  } else if (name == "hua-theorem-n1") {
    if (n != 1) {
      r = skipped("hua-theorem-n1", n, D, "n = 1 only");
    } else {
      const std::vector<N1Boundary> fs{N1Boundary(VScalar(1)), N1Boundary::monomial(1), N1Boundary::monomial(2),
                                       N1Boundary::monomial(-1)};
      r = to_report(verify_hua_theorem_n1(fs, generator_words_n1(2), D), "hua-theorem-n1");
    }
  } else if (name == "shilov-consistency") {
    r = shilov_consistency_check(n);
  } else if (name == "limits") {
    r = limits_check(n, D);
  } else {
    throw Error(ErrorKind::precondition, "unknown suite: " + name);
  }
  r.n = n;
  if (r.cutoff == 0) r.cutoff = D;
  if (r.status == Status::skipped && D < 1 && r.notes.empty()) r.note("cutoff too small");
  if (opt.eval_v && r.status != Status::skipped) {
    if (name == "p11" || name == "hua-kernel") {
      eval_pass(r, n, *opt.eval_v);
    } else {
      r.note("eval-v: no specialized pass for this suite");
    }
  }
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Report> run_suites(const std::vector<std::string>& names, const SuiteOptions& opt, unsigned threads) {
  std::vector<std::string> todo;
  for (const std::string& s : names) {
    if (s == "all") {
      todo.insert(todo.end(), suite_names().begin(), suite_names().end());
    } else {
      todo.push_back(s);
    }
  }
  for (const std::string& s : todo) {
    if (s != "limits" && std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) {
      throw Error(ErrorKind::precondition, "unknown suite: " + s);
    }
  }
  std::vector<Report> out(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      try {
        out[k] = run_suite(todo[k], opt);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(todo.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < count; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

unsigned default_threads() {
  if (const char* env = std::getenv("QBALL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace qball

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qball/report.hpp"

namespace qball {

/// Two rewriting strategies agree with the memoized one on random words in
/// C[Mat_n]_q, C[Mat_{n,2n}]_q and both Pol copies.
Report confluence_check(int n, int words = 1000, unsigned seed = 1);
/// Star is involutive and antimultiplicative on random pairs; y z = q^2 z y.
Report star_check(int n, int pairs = 200, unsigned seed = 2);
/// The boundary relations vanish after substituting the C[GL_n]_q model.
Report shilov_consistency_check(int n);
/// n = 1 Poisson kernel against its closed form, P[1] = 1 and the telescoping identity.
Report poisson_check_n1(int cutoff);
/// L and Lbar are invariant (rectangular coordinates).
Report invariance_check(int n);
/// Action tables respect the defining relations; operator relations on bidegree <= (2,2).
Report action_check(int n);
/// Classical v = 1 comparisons.
Report limits_check(int n, int cutoff);

const std::vector<std::string>& suite_names();

struct SuiteOptions {
  int n = 1;
  int cutoff = 1;
  std::optional<mpq_class> eval_v;
};

/// Runs one named suite ("all" is not accepted here). Throws ErrorKind::precondition
/// for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opt);

/// Runs the named suites on a pool of `threads` workers; "all" expands to every
/// suite. Reports come back in request order.
std::vector<Report> run_suites(const std::vector<std::string>& names, const SuiteOptions& opt,
                               unsigned threads);

/// Worker count from QBALL_THREADS, else the hardware concurrency.
unsigned default_threads();

}  // namespace qball

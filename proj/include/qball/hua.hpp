#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qball/boundary.hpp"
#include "qball/kernel.hpp"
#include "qball/polmat.hpp"
#include "qball/report.hpp"
#include "qball/uqact.hpp"

namespace qball {

/// Coefficient of the Wick monomial z_b^beta (z_a^alpha)* in the (1,1) part.
VScalar d2_at_zero(const TruncatedSeries& u, int b, int beta, int a, int alpha);
/// Kernel version: the second leg attached to z_b^beta (z_a^alpha)*.
NCPoly d2_at_zero(const Kernel& k, int b, int beta, int a, int alpha);

/// Weight of the c-th summand: q^{2c}, or 1 for the negative control.
enum class HuaWeights { q_power, one };

/// A: sum_c w(c) d2(u, c, beta, c, alpha).
VScalar hua_sum_A(const TruncatedSeries& u, int alpha, int beta, HuaWeights w = HuaWeights::q_power);
NCPoly hua_sum_A(const Kernel& k, int alpha, int beta, HuaWeights w = HuaWeights::q_power);
/// B: sum_gamma w(gamma) d2(u, a, gamma, b, gamma).
VScalar hua_sum_B(const TruncatedSeries& u, int a, int b, HuaWeights w = HuaWeights::q_power);
NCPoly hua_sum_B(const Kernel& k, int a, int b, HuaWeights w = HuaWeights::q_power);

/// (1 - q^{-2n}) / (1 - q^{-2}).
VScalar hua_K(int n);

/// sum_{a,alpha,b,beta} z_b^beta (z_a^alpha)* (x) (K q^{2(2n-a-alpha)} zeta_a^alpha (zeta_b^beta)* - delta_ab delta^{alpha beta}).
Kernel p11_expected(int n, int cutoff);

/// c with actual = c * expected, if there is one.
std::optional<VScalar> proportionality(const Kernel& actual, const Kernel& expected);

/// p_11 of the normalized Poisson kernel against the expected form, plus the
/// v = 1 comparison with n sum (n zeta conj(zeta) - delta delta) conj(z) z.
Report verify_p11(int n, int cutoff = 1);

enum class HuaSystem { A, B };

struct HuaResidual {
  int i;
  int j;
  std::string value;
};

struct HuaReport {
  HuaSystem system;
  int n;
  int cutoff;
  std::vector<HuaResidual> residuals;  ///< nonzero reduced residuals only
  Status status = Status::pass;
  bool truncated = false;
  std::vector<std::string> notes;
  bool passed() const noexcept { return status == Status::pass; }
};

/// One Hua system on the Poisson kernel, second legs reduced on the boundary.
/// Also checks that the unreduced residual has the expected closed form.
HuaReport hua_kernel_system(int n, int cutoff, HuaSystem system, HuaWeights w = HuaWeights::q_power);

/// Both systems; PASS iff both pass.
Report verify_hua_kernel(int n, int cutoff = 1, HuaWeights w = HuaWeights::q_power);

/// All words of length <= max_len over E_1, F_1, K_1, K_1^{-1}.
std::vector<UqWord> generator_words_n1(int max_len);

/// For each f and xi: u = P[f], both Hua sums of xi u vanish. A word with e
/// E's and F's needs cutoff - e >= 1; otherwise the report is marked truncated.
HuaReport verify_hua_theorem_n1(const std::vector<N1Boundary>& fs, const std::vector<UqWord>& xis,
                                int cutoff);

Report to_report(const HuaReport& h, const std::string& suite);

}  // namespace qball

#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "qball/ncpoly.hpp"
#include "qball/polmat.hpp"

namespace qball {

/// Exponents of t, t*, tau, tau* in a kernel term. Negative values are the
/// formal inverses.
struct PowerKey {
  int t = 0;
  int ts = 0;
  int tau = 0;
  int taus = 0;
  friend auto operator<=>(const PowerKey&, const PowerKey&) = default;
};

/// Finite sum of terms  t^i t*^j f  (x)  tau^k tau*^l g  with f a Wick-ordered
/// element of Pol(Mat_n)_q (z, zs) and g one of the boundary-side copy (zeta, zetas).
/// Each leg is stored as an ordinary element; the product
///   (X (x) Y)(X' (x) Y') = X'X (x) YY'
/// reverses the first leg and is implemented only in kmul.
/// Terms whose first-leg bidegree exceeds the cutoff are dropped and recorded.
class Kernel {
 public:
  using Key = std::pair<PowerKey, Word>;
  using Terms = std::map<Key, NCPoly>;

  Kernel(int n, int cutoff);

  static Kernel unit(int n, int cutoff);
  static Kernel monomial(int n, int cutoff, const PowerKey& powers, const NCPoly& first,
                         const NCPoly& second);

  int n() const noexcept { return n_; }
  int cutoff() const noexcept { return cutoff_; }
  /// Something beyond the cutoff was discarded on the way here.
  bool truncated() const noexcept { return truncated_; }
  /// Discarded terms may have contributed below the cutoff.
  bool inexact() const noexcept { return inexact_; }
  const AlgebraPtr& first_algebra() const noexcept { return first_; }
  const AlgebraPtr& second_algebra() const noexcept { return second_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const PowerKey& powers, const Word& first, const NCPoly& second);
  void mark_truncated(bool inexact);

  Kernel operator+(const Kernel& rhs) const;
  Kernel operator-(const Kernel& rhs) const;
  Kernel operator*(const VScalar& c) const;
  /// Equal term maps; flags are not compared.
  bool same_terms(const Kernel& rhs) const { return terms_ == rhs.terms_; }

  std::string render() const;

 private:
  void check_compatible(const Kernel& rhs) const;

  int n_;
  int cutoff_;
  bool truncated_ = false;
  bool inexact_ = false;
  AlgebraPtr first_;
  AlgebraPtr second_;
  Terms terms_;
};

Kernel kmul(const Kernel& k1, const Kernel& k2);
Kernel kpow(const Kernel& k, int e);

Kernel build_L(int n, int cutoff);
Kernel build_Lbar(int n, int cutoff);

/// k^{-power}. The leading part U must be a single term with trivial legs;
/// k = (1 + N)U and k^{-1} = U^{-1} sum_m (-N)^m.
Kernel kinverse(const Kernel& k, int power = 1);

/// Replaces t^{-m} t*^{-m} f in the first leg by y^m f.
Kernel substitute_x_inverse(const Kernel& k);

struct PoissonKernel {
  Kernel kernel;
  /// Coefficient of 1 (x) 1 before normalization; P = raw / raw_p00.
  VScalar raw_p00;
};

/// (1 (x) tau tau*)^n Lbar^{-n} L^{-n} with x^{-1} replaced by y, divided by its
/// constant term.
PoissonKernel poisson_kernel(int n, int cutoff);

/// Terms of first-leg bidegree (j, k).
Kernel p_component(const Kernel& k, int j, int kk);

/// Moves a second-leg block tau*^{-n} tau^{-n} across the second leg so that it
/// cancels against the matching first-leg block, leaving a boundary element.
/// Requires every term to carry exactly (-n, -n) tau powers; zero powers pass through.
Kernel eta_shift(const Kernel& k);

}  // namespace qball

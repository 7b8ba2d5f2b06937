#pragma once

#include <map>
#include <memory>

#include "qball/kernel.hpp"
#include "qball/linsolve.hpp"
#include "qball/ncpoly.hpp"
#include "qball/polmat.hpp"

namespace qball {

/// Linear reduction on span{1} + span{zeta_a^alpha (zeta_b^beta)*} modulo the
/// boundary relations. The row relations
///   sum_j q^{2n-alpha-beta} zeta_j^alpha (zeta_j^beta)* = delta^{alpha beta}
/// are always used; the column relations
///   sum_gamma zeta_b^gamma (zeta_a^gamma)* = c_ab
/// are added on request, with c_ab computed in the C[GL_n]_q model.
class ShilovReducer {
 public:
  explicit ShilovReducer(int n, bool with_columns = false);

  int n() const noexcept { return n_; }
  const AlgebraPtr& algebra() const noexcept { return pol_; }
  bool with_columns() const noexcept { return with_columns_; }

  /// Canonical representative. Throws ErrorKind::unsupported_span for words
  /// outside the supported span.
  NCPoly reduce(const NCPoly& p) const;

  /// Right-hand side of the column relation (a, b).
  const VScalar& column_value(int a, int b) const;

 private:
  int n_;
  bool with_columns_;
  AlgebraPtr pol_;
  SpanSolver<Word, int> solver_;
  std::vector<VScalar> column_values_;
};

/// Reduction by the n^2 row relations alone.
NCPoly shilov_reduce(int n, const NCPoly& p);

/// True when p (a Wick-ordered element of the boundary-side Pol algebra) maps
/// to zero in the C[GL_n]_q model of the boundary.
bool vanishes_on_boundary(int n, const Algebra& pol, const NCPoly& p);

/// Laurent polynomial in one unitary generator zeta, zeta* = zeta^{-1}.
class N1Boundary {
 public:
  N1Boundary() = default;
  explicit N1Boundary(const VScalar& c) { add(0, c); }
  static N1Boundary monomial(int k, const VScalar& c = VScalar(1));
  /// Image of a Wick-ordered element of the n = 1 boundary-side Pol algebra.
  static N1Boundary from_pol(const Algebra& pol, const NCPoly& p);

  void add(int k, const VScalar& c);
  VScalar coeff(int k) const;
  const std::map<int, VScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  N1Boundary operator*(const N1Boundary& rhs) const;
  N1Boundary operator+(const N1Boundary& rhs) const;
  friend bool operator==(const N1Boundary&, const N1Boundary&) = default;

  std::string to_string() const;

 private:
  std::map<int, VScalar> terms_;
};

/// The invariant integral for n = 1: the coefficient of zeta^0.
VScalar nu_n1(const N1Boundary& f);

/// (id (x) nu)(P (1 (x) f)) for n = 1, as a series in z, z* truncated at `cutoff`.
/// P must be power-free; its truncation flag carries over.
TruncatedSeries poisson_integral_n1(const Kernel& P, const N1Boundary& f, int cutoff);

}  // namespace qball

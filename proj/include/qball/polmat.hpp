#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qball/ncpoly.hpp"

namespace qball {

/// Which copy of Pol(Mat_n)_q: the domain (z, zs) or the boundary-side copy (zeta, zetas).
enum class PolFamily { domain, boundary };

GenClass holo_class(PolFamily f) noexcept;
GenClass anti_class(PolFamily f) noexcept;
bool is_antiholomorphic(GenClass c) noexcept;
/// The class of g* (z <-> zs, zeta <-> zetas).
GenClass star_class(GenClass c);

/// Cross-relation coefficient R(b, a, b', a').
VScalar r_coeff(int b, int a, int b2, int a2);

/// Pol(Mat_n)_q. Canonical words are Wick ordered: a sorted holomorphic block
/// followed by a sorted antiholomorphic block.
AlgebraPtr pol_algebra(int n, PolFamily family = PolFamily::domain);

/// The involution; antilinear with real coefficients, so only the word is reversed.
NCPoly star(const Algebra& pol, const NCPoly& p);

/// Sum over k of (-1)^k z^{^k}_{IJ} (z^{^k}_{IJ})* over all k-minors.
NCPoly y_element(const Algebra& pol, int n);

/// Words of bidegree at most (cutoff, cutoff) in a Pol algebra, with a sticky
/// flag recording that something was dropped.
class TruncatedSeries {
 public:
  TruncatedSeries(AlgebraPtr alg, int cutoff, const NCPoly& p = NCPoly(), bool truncated = false);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  int cutoff() const noexcept { return cutoff_; }
  bool truncated() const noexcept { return truncated_; }
  const NCPoly& poly() const noexcept { return poly_; }

  /// Homogeneous (j, k) part. Throws ErrorKind::index_range beyond the cutoff.
  NCPoly bicomponent(int j, int k) const;

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const VScalar& c) const;

 private:
  void check_compatible(const TruncatedSeries& rhs) const;

  AlgebraPtr alg_;
  int cutoff_;
  NCPoly poly_;
  bool truncated_;
};

/// Element P * d^{-k} of C[GL_n]_q, with d = det_q z central and P in C[Mat_n]_q
/// on the z alphabet. Kept reduced: k = 0 or d does not divide P.
struct GLnElement {
  NCPoly poly;
  int dpow = 0;  // power of d^{-1}
};

enum class CofactorConvention {
  delete_row_a_col_alpha,  ///< (z_a^alpha)* uses the minor without row a and column alpha
  delete_row_alpha_col_a,  ///< ... without row alpha and column a
};

class GLModel {
 public:
  GLModel(int n, CofactorConvention conv);

  int n() const noexcept { return n_; }
  const AlgebraPtr& algebra() const noexcept { return mat_; }
  CofactorConvention convention() const noexcept { return conv_; }
  const NCPoly& det() const noexcept { return det_; }

  GLnElement from_poly(const NCPoly& p) const { return reduce({p, 0}); }
  GLnElement add(const GLnElement& a, const GLnElement& b) const;
  GLnElement sub(const GLnElement& a, const GLnElement& b) const;
  GLnElement mul(const GLnElement& a, const GLnElement& b) const;
  GLnElement scale(const GLnElement& a, const VScalar& c) const;
  bool is_zero(const GLnElement& a) const { return a.poly.is_zero(); }

  /// Image of (z_a^alpha)*.
  const GLnElement& star_generator(int a, int alpha) const;
  /// Image of z_a^alpha.
  GLnElement generator(int a, int alpha) const;
  /// Antilinear antihomomorphic extension.
  GLnElement star(const GLnElement& g) const;
  /// d* = c * d^{-1}; returns c. Throws if d* has another shape.
  const VScalar& det_star_scalar() const noexcept { return det_star_; }

  /// Evaluates a Wick-ordered Pol element (z or zeta family) in the model,
  /// sending the antiholomorphic generators to their gl_star images.
  GLnElement embed(const Algebra& pol, const NCPoly& p) const;

  /// Divides P by d where possible. Exact graded linear solve.
  GLnElement reduce(GLnElement g) const;
  /// P / d if d divides P.
  std::optional<NCPoly> divide_by_det(const NCPoly& p) const;

  std::string render(const GLnElement& g) const;

 private:
  int n_;
  CofactorConvention conv_;
  AlgebraPtr mat_;
  NCPoly det_;
  std::vector<GLnElement> star_gens_;
  VScalar det_star_;
};

}  // namespace qball

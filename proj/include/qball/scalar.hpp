#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace qball {

/// Dense integer polynomial in v, index = exponent.
using IntPoly = std::vector<mpz_class>;

/// Exact element of Q(v), where v = q^{1/2}.
///
/// Canonical form: value = v^shift * num(v) / den(v) with
///   - num(0) != 0 (pure v-power content lives in `shift`), or num empty for 0;
///   - den(0) != 0, leading coefficient of den positive;
///   - gcd(num, den) = 1 over Q and the integer content of the pair is 1.
/// Two canonical values are equal iff their representations are equal.
class VScalar {
 public:
  VScalar() : den_{1} {}
  VScalar(long value);  // NOLINT(google-explicit-constructor)
  explicit VScalar(const mpq_class& value);

  static VScalar v_pow(int k);
  static VScalar q_pow(int k) { return v_pow(2 * k); }
  /// (-q)^k
  static VScalar minus_q_pow(int k);
  /// Builds v^shift * num / den and canonicalizes. Throws on den == 0.
  static VScalar from_parts(int shift, IntPoly num, IntPoly den);

  bool is_zero() const noexcept { return num_.empty(); }
  bool is_one() const noexcept;
  /// True when the denominator is 1, i.e. the value is a Laurent polynomial.
  bool is_laurent() const noexcept { return den_.size() == 1 && den_[0] == 1; }

  int shift() const noexcept { return shift_; }
  const IntPoly& num() const noexcept { return num_; }
  const IntPoly& den() const noexcept { return den_; }

  VScalar operator-() const;
  VScalar& operator+=(const VScalar& rhs);
  VScalar& operator-=(const VScalar& rhs);
  VScalar& operator*=(const VScalar& rhs);
  VScalar& operator/=(const VScalar& rhs);

  friend VScalar operator+(VScalar a, const VScalar& b) { return a += b; }
  friend VScalar operator-(VScalar a, const VScalar& b) { return a -= b; }
  friend VScalar operator*(VScalar a, const VScalar& b) { return a *= b; }
  friend VScalar operator/(VScalar a, const VScalar& b) { return a /= b; }

  friend bool operator==(const VScalar& a, const VScalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  VScalar inverse() const;
  VScalar pow(int e) const;

  /// Exact specialization at v = v0; throws ErrorKind::pole when den(v0) == 0.
  mpq_class eval(const mpq_class& v0) const;

  /// Parseable rendering. Uses q when every exponent is even, v otherwise.
  std::string to_string() const;

 private:
  void canonicalize();

  int shift_ = 0;
  IntPoly num_;
  IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const VScalar& s);

/// Renders a Laurent polynomial sum_k c_k v^(shift + k); exposed for reports.
std::string render_laurent(int shift, const IntPoly& coeffs);

}  // namespace qball

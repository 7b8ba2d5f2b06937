#include "qball/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "qball/error.hpp"

namespace qball {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::pole: return "pole";
    case ErrorKind::unknown_generator: return "unknown-generator";
    case ErrorKind::non_canonical: return "non-canonical";
    case ErrorKind::index_range: return "index-range";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::unsupported_span: return "unsupported-span";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
    case ErrorKind::step_bound: return "step-bound";
  }
  return "unknown";
}

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int strip_low_zeros(IntPoly& p) {
  std::size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
  return static_cast<int>(k);
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

/// a * v^sa + b * v^sb, with sa, sb >= 0
IntPoly poly_add_shifted(const IntPoly& a, int sa, const IntPoly& b, int sb) {
  std::size_t n = std::max(a.size() + static_cast<std::size_t>(sa),
                           b.size() + static_cast<std::size_t>(sb));
  IntPoly r(n);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + static_cast<std::size_t>(sa)] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i + static_cast<std::size_t>(sb)] += b[i];
  trim(r);
  return r;
}

mpz_class content(const IntPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_scalar(IntPoly& p, const mpz_class& d) {
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

IntPoly primitive_part(IntPoly p) {
  if (p.empty()) return p;
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  divide_scalar(p, c);
  return p;
}

/// Pseudo-remainder of a by b (deg b >= 0, b nonzero).
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_class la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

/// Primitive gcd with positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  return a;
}

/// Exact division over Z[v]; the caller guarantees divisibility.
IntPoly poly_divexact(IntPoly a, const IntPoly& b) {
  if (a.empty()) return {};
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db);
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

mpq_class eval_poly(const IntPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
  }
  return acc;
}

}  // namespace

VScalar::VScalar(long value) : den_{1} {
  if (value != 0) num_.push_back(mpz_class(value));
}

VScalar::VScalar(const mpq_class& value) : den_{1} {
  if (value == 0) return;
  num_.push_back(value.get_num());
  den_[0] = value.get_den();
}

VScalar VScalar::v_pow(int k) {
  VScalar r(1);
  r.shift_ = k;
  return r;
}

VScalar VScalar::minus_q_pow(int k) {
  VScalar r = q_pow(k);
  if (k % 2 != 0) r = -r;
  return r;
}

VScalar VScalar::from_parts(int shift, IntPoly num, IntPoly den) {
  VScalar r;
  r.shift_ = shift;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  r.canonicalize();
  return r;
}

bool VScalar::is_one() const noexcept {
  return shift_ == 0 && num_.size() == 1 && num_[0] == 1 && is_laurent();
}

void VScalar::canonicalize() {
  trim(num_);
  trim(den_);
  if (den_.empty()) throw Error(ErrorKind::division_by_zero, "zero denominator");
  if (num_.empty()) {
    shift_ = 0;
    den_.assign(1, mpz_class(1));
    return;
  }
  shift_ += strip_low_zeros(num_);
  shift_ -= strip_low_zeros(den_);
  if (den_.size() == 1) {
    if (den_[0] == 1) return;
    mpz_class g = content(num_);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_[0].get_mpz_t());
    if (den_[0] < 0) g = -g;
    divide_scalar(num_, g);
    divide_scalar(den_, g);
    return;
  }
  IntPoly g = poly_gcd(num_, den_);
  if (g.size() > 1) {
    num_ = poly_divexact(std::move(num_), g);
    den_ = poly_divexact(std::move(den_), g);
  }
  mpz_class c = content(num_);
  mpz_class cd = content(den_);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (den_.back() < 0) c = -c;
  if (c != 1) {
    divide_scalar(num_, c);
    divide_scalar(den_, c);
  }
}

VScalar VScalar::operator-() const {
  VScalar r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

VScalar& VScalar::operator+=(const VScalar& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int m = std::min(shift_, rhs.shift_);
  if (is_laurent() && rhs.is_laurent()) {
    num_ = poly_add_shifted(num_, shift_ - m, rhs.num_, rhs.shift_ - m);
    shift_ = m;
    canonicalize();
    return *this;
  }
  IntPoly a = poly_mul(num_, rhs.den_);
  IntPoly b = poly_mul(rhs.num_, den_);
  num_ = poly_add_shifted(a, shift_ - m, b, rhs.shift_ - m);
  den_ = poly_mul(den_, rhs.den_);
  shift_ = m;
  canonicalize();
  return *this;
}

VScalar& VScalar::operator-=(const VScalar& rhs) { return *this += -rhs; }

VScalar& VScalar::operator*=(const VScalar& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = VScalar();
  shift_ += rhs.shift_;
  num_ = poly_mul(num_, rhs.num_);
  if (!rhs.is_laurent()) {
    den_ = poly_mul(den_, rhs.den_);
    canonicalize();
  } else if (!is_laurent()) {
    canonicalize();
  }
  return *this;
}

VScalar VScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero");
  return from_parts(-shift_, den_, num_);
}

VScalar& VScalar::operator/=(const VScalar& rhs) { return *this *= rhs.inverse(); }

VScalar VScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  VScalar result(1);
  VScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

mpq_class VScalar::eval(const mpq_class& v0) const {
  if (is_zero()) return 0;
  const mpq_class d = eval_poly(den_, v0);
  if (d == 0) throw Error(ErrorKind::pole, "denominator vanishes at v0 = " + v0.get_str());
  mpq_class value = eval_poly(num_, v0) / d;
  if (shift_ != 0) {
    if (v0 == 0) {
      if (shift_ < 0) throw Error(ErrorKind::pole, "negative power of v at v0 = 0");
      return 0;
    }
    mpq_class p = 1;
    const mpq_class base = shift_ > 0 ? v0 : mpq_class(1) / v0;
    for (int i = 0; i < std::abs(shift_); ++i) p *= base;
    value *= p;
  }
  return value;
}

namespace {

bool all_even(int shift, const IntPoly& p) {
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] != 0 && (shift + static_cast<int>(k)) % 2 != 0) return false;
  }
  return true;
}

std::string render_in(int shift, const IntPoly& p, bool in_q) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = p.size(); idx-- > 0;) {
    const mpz_class& c = p[idx];
    if (c == 0) continue;
    int e = shift + static_cast<int>(idx);
    if (in_q) e /= 2;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << (in_q ? 'q' : 'v');
    if (e != 1) os << '^' << e;
  }
  if (first) return "0";
  return os.str();
}

bool is_single_term(const IntPoly& p) {
  return std::count_if(p.begin(), p.end(), [](const mpz_class& c) { return c != 0; }) <= 1;
}

}  // namespace

std::string render_laurent(int shift, const IntPoly& coeffs) {
  return render_in(shift, coeffs, all_even(shift, coeffs));
}

std::string VScalar::to_string() const {
  if (is_zero()) return "0";
  if (is_laurent()) return render_laurent(shift_, num_);
  const bool in_q = all_even(shift_, num_) && all_even(0, den_);
  std::string n = render_in(shift_, num_, in_q);
  if (!is_single_term(num_)) n = "(" + n + ")";
  return n + "*(" + render_in(0, den_, in_q) + ")^-1";
}

std::ostream& operator<<(std::ostream& os, const VScalar& s) { return os << s.to_string(); }

}  // namespace qball

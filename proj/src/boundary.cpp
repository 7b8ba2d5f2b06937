#include "qball/boundary.hpp"

#include <sstream>

#include "qball/error.hpp"

namespace qball {

namespace {

using Vec = std::map<Word, VScalar>;

Vec to_vec(const NCPoly& p) { return Vec(p.terms().begin(), p.terms().end()); }

NCPoly from_vec(const Vec& v) {
  NCPoly p;
  for (const auto& [w, c] : v) p.add_term(w, c);
  return p;
}

}  // namespace

ShilovReducer::ShilovReducer(int n, bool with_columns)
    : n_(n), with_columns_(with_columns), pol_(pol_algebra(n, PolFamily::boundary)) {
  auto zeta = [](int a, int al) { return GeneratorId{GenClass::zeta, a, al}; };
  auto zetas = [](int a, int al) { return GeneratorId{GenClass::zetas, a, al}; };
  int label = 0;
  for (int al = 1; al <= n; ++al) {
    for (int be = 1; be <= n; ++be) {
      NCPoly rel;
      for (int j = 1; j <= n; ++j) {
        rel += pol_->normalize({zeta(j, al), zetas(j, be)}, VScalar::q_pow(2 * n - al - be));
      }
      if (al == be) rel -= NCPoly::one();
      solver_.add(to_vec(rel), label++);
    }
  }
  if (!with_columns) return;
  GLModel model(n, CofactorConvention::delete_row_a_col_alpha);
  column_values_.resize(static_cast<std::size_t>(n * n));
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      NCPoly sum;
      for (int g = 1; g <= n; ++g) sum += pol_->normalize({zeta(b, g), zetas(a, g)});
      GLnElement img = model.embed(*pol_, sum);
      if (img.dpow != 0 || img.poly.size() > 1 ||
          (img.poly.size() == 1 && !img.poly.begin()->first.empty())) {
        throw Error(ErrorKind::precondition, "column sum is not a scalar in the GL model");
      }
      const VScalar value = img.poly.scalar_part();
      column_values_[static_cast<std::size_t>((a - 1) * n + (b - 1))] = value;
      solver_.add(to_vec(sum - NCPoly(value)), label++);
    }
  }
}

const VScalar& ShilovReducer::column_value(int a, int b) const {
  if (!with_columns_) throw Error(ErrorKind::precondition, "column relations not loaded");
  if (a < 1 || a > n_ || b < 1 || b > n_) throw Error(ErrorKind::index_range, "index out of range");
  return column_values_[static_cast<std::size_t>((a - 1) * n_ + (b - 1))];
}

NCPoly ShilovReducer::reduce(const NCPoly& p) const {
  for (const auto& [w, c] : p) {
    auto [j, k] = word_bidegree(*pol_, w);
    if (!((j == 0 && k == 0) || (j == 1 && k == 1))) {
      throw Error(ErrorKind::unsupported_span,
                  "boundary reduction supports only 1 and zeta zeta*: " + pol_->render_word(w));
    }
  }
  return from_vec(solver_.reduced(to_vec(p)));
}

NCPoly shilov_reduce(int n, const NCPoly& p) {
  const ShilovReducer reducer(n);
  return reducer.reduce(p);
}

bool vanishes_on_boundary(int n, const Algebra& pol, const NCPoly& p) {
  const GLModel model(n, CofactorConvention::delete_row_a_col_alpha);
  return model.is_zero(model.embed(pol, p));
}

N1Boundary N1Boundary::monomial(int k, const VScalar& c) {
  N1Boundary f;
  f.add(k, c);
  return f;
}

N1Boundary N1Boundary::from_pol(const Algebra& pol, const NCPoly& p) {
  N1Boundary f;
  for (const auto& [w, c] : p) {
    auto [j, k] = word_bidegree(pol, w);
    f.add(j - k, c);
  }
  return f;
}

void N1Boundary::add(int k, const VScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

VScalar N1Boundary::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? VScalar() : it->second;
}

N1Boundary N1Boundary::operator*(const N1Boundary& rhs) const {
  N1Boundary out;
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : rhs.terms_) out.add(k1 + k2, c1 * c2);
  }
  return out;
}

N1Boundary N1Boundary::operator+(const N1Boundary& rhs) const {
  N1Boundary out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add(k, c);
  return out;
}

std::string N1Boundary::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    if (k != 0) os << "*zeta^" << k;
  }
  return os.str();
}

VScalar nu_n1(const N1Boundary& f) { return f.coeff(0); }

TruncatedSeries poisson_integral_n1(const Kernel& P, const N1Boundary& f, int cutoff) {
  if (P.n() != 1) throw Error(ErrorKind::precondition, "poisson_integral_n1 needs n = 1");
  if (cutoff > P.cutoff()) throw Error(ErrorKind::precondition, "cutoff exceeds the kernel cutoff");
  const Algebra& second = *P.second_algebra();
  NCPoly u;
  bool dropped = false;
  for (const auto& [key, g] : P.terms()) {
    if (key.first != PowerKey{}) throw Error(ErrorKind::precondition, "kernel carries t or tau powers");
    auto [j, k] = word_bidegree(*P.first_algebra(), key.second);
    if (j > cutoff || k > cutoff) {
      dropped = true;
      continue;
    }
    const VScalar c = nu_n1(N1Boundary::from_pol(second, g) * f);
    if (!c.is_zero()) u.add_term(key.second, c);
  }
  return TruncatedSeries(P.first_algebra(), cutoff, u, P.truncated() || dropped);
}

}  // namespace qball

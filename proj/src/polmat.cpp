#include "qball/polmat.hpp"

#include <numeric>

#include "qball/error.hpp"
#include "qball/linsolve.hpp"
#include "qball/qmatrix.hpp"

namespace qball {

GenClass holo_class(PolFamily f) noexcept {
  return f == PolFamily::domain ? GenClass::z : GenClass::zeta;
}

GenClass anti_class(PolFamily f) noexcept {
  return f == PolFamily::domain ? GenClass::zs : GenClass::zetas;
}

bool is_antiholomorphic(GenClass c) noexcept { return c == GenClass::zs || c == GenClass::zetas; }

GenClass star_class(GenClass c) {
  switch (c) {
    case GenClass::z: return GenClass::zs;
    case GenClass::zs: return GenClass::z;
    case GenClass::zeta: return GenClass::zetas;
    case GenClass::zetas: return GenClass::zeta;
    case GenClass::t: break;
  }
  throw Error(ErrorKind::precondition, "no involution on t generators");
}

VScalar r_coeff(int b, int a, int b2, int a2) {
  if (a != b && b == b2 && a == a2) return VScalar::q_pow(-1);
  if (a == b && b == b2 && a == a2) return VScalar(1);
  if (a == b && a2 == b2 && a2 > a) return VScalar(1) - VScalar::q_pow(-2);
  return VScalar();
}

namespace {

// hi, lo both antiholomorphic: the starred matrix relations, right side reduced
std::vector<RuleTerm> anti_rule(const GeneratorId& hi, const GeneratorId& lo) {
  const int i = lo.i;
  const int j = lo.j;
  const int i2 = hi.i;
  const int j2 = hi.j;
  const VScalar q = VScalar::q_pow(1);
  if (i == i2 || j == j2) return {{q, {lo, hi}}};
  if (j > j2) return {{VScalar(1), {lo, hi}}};
  return {{VScalar(1), {lo, hi}},
          {q - q.inverse(), {GeneratorId{lo.cls, i, j2}, GeneratorId{lo.cls, i2, j}}}};
}

// (z_b^beta)* z_a^alpha
std::vector<RuleTerm> cross_rule(int n, const GeneratorId& hi, const GeneratorId& lo) {
  const int b = hi.i;
  const int beta = hi.j;
  const int a = lo.i;
  const int alpha = lo.j;
  const GenClass h = lo.cls;
  const GenClass s = hi.cls;
  std::vector<RuleTerm> out;
  const VScalar q2 = VScalar::q_pow(2);
  for (int a2 = 1; a2 <= n; ++a2) {
    for (int b2 = 1; b2 <= n; ++b2) {
      const VScalar r1 = r_coeff(b, a, b2, a2);
      if (r1.is_zero()) continue;
      for (int al2 = 1; al2 <= n; ++al2) {
        for (int be2 = 1; be2 <= n; ++be2) {
          const VScalar r2 = r_coeff(beta, alpha, be2, al2);
          if (r2.is_zero()) continue;
          out.push_back({q2 * r1 * r2, {GeneratorId{h, a2, al2}, GeneratorId{s, b2, be2}}});
        }
      }
    }
  }
  if (a == b && alpha == beta) out.push_back({VScalar(1) - q2, {}});
  return out;
}

}  // namespace

AlgebraPtr pol_algebra(int n, PolFamily family) {
  if (n < 1) throw Error(ErrorKind::precondition, "n must be positive");
  const GenClass h = holo_class(family);
  const GenClass s = anti_class(family);
  std::vector<GeneratorId> alphabet;
  for (GenClass c : {h, s}) {
    for (int a = 1; a <= n; ++a) {
      for (int alpha = 1; alpha <= n; ++alpha) alphabet.push_back({c, a, alpha});
    }
  }
  auto rule = [n](const GeneratorId& hi, const GeneratorId& lo) -> std::vector<RuleTerm> {
    const bool hs = is_antiholomorphic(hi.cls);
    const bool ls = is_antiholomorphic(lo.cls);
    if (!hs && !ls) return matrix_rule(hi, lo);
    if (hs && ls) return anti_rule(hi, lo);
    return cross_rule(n, hi, lo);
  };
  std::string name = std::string(family == PolFamily::domain ? "Pol(Mat_" : "Pol(Xi_") +
                     std::to_string(n) + ")";
  return std::make_shared<const Algebra>(name, std::move(alphabet), rule);
}

NCPoly star(const Algebra& pol, const NCPoly& p) {
  NCPoly out;
  for (const auto& [w, c] : p) {
    Word rev;
    for (std::size_t k = w.size(); k-- > 0;) {
      GeneratorId g = pol.generator(w[k]);
      g.cls = star_class(g.cls);
      rev.push_back(pol.rank_or_throw(g));
    }
    out += pol.normalize(rev, c);
  }
  return out;
}

NCPoly y_element(const Algebra& pol, int n) {
  const GenClass h = pol.generator(0).cls;
  NCPoly y = NCPoly::one();
  for (int k = 1; k <= n; ++k) {
    const VScalar sign = k % 2 == 0 ? VScalar(1) : VScalar(-1);
    for (const IndexSet& rows : subsets(n, k)) {
      for (const IndexSet& cols : subsets(n, k)) {
        const NCPoly m = qminor(pol, rows, cols, h);
        y += pol.multiply(m, star(pol, m)) * sign;
      }
    }
  }
  return y;
}

TruncatedSeries::TruncatedSeries(AlgebraPtr alg, int cutoff, const NCPoly& p, bool truncated)
    : alg_(std::move(alg)), cutoff_(cutoff), truncated_(truncated) {
  if (cutoff < 0) throw Error(ErrorKind::precondition, "negative cutoff");
  for (const auto& [w, c] : p) {
    auto [j, k] = word_bidegree(*alg_, w);
    if (j > cutoff_ || k > cutoff_) {
      truncated_ = true;
    } else {
      poly_.add_term(w, c);
    }
  }
}

NCPoly TruncatedSeries::bicomponent(int j, int k) const {
  if (j < 0 || k < 0 || j > cutoff_ || k > cutoff_) {
    throw Error(ErrorKind::index_range, "bidegree beyond the cutoff");
  }
  NCPoly out;
  for (const auto& [w, c] : poly_) {
    if (word_bidegree(*alg_, w) == std::pair{j, k}) out.add_term(w, c);
  }
  return out;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& rhs) const {
  if (alg_ != rhs.alg_) throw Error(ErrorKind::precondition, "series over different algebras");
  if (cutoff_ != rhs.cutoff_) throw Error(ErrorKind::precondition, "cutoff mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  check_compatible(rhs);
  return TruncatedSeries(alg_, cutoff_, poly_ + rhs.poly_, truncated_ || rhs.truncated_);
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  check_compatible(rhs);
  return TruncatedSeries(alg_, cutoff_, poly_ - rhs.poly_, truncated_ || rhs.truncated_);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  check_compatible(rhs);
  return TruncatedSeries(alg_, cutoff_, alg_->multiply(poly_, rhs.poly_),
                         truncated_ || rhs.truncated_);
}

TruncatedSeries TruncatedSeries::operator*(const VScalar& c) const {
  return TruncatedSeries(alg_, cutoff_, poly_ * c, truncated_);
}

GLModel::GLModel(int n, CofactorConvention conv)
    : n_(n), conv_(conv), mat_(mat_algebra(n, n, GenClass::z)) {
  det_ = qdet(*mat_, n, GenClass::z);
  IndexSet all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (int a = 1; a <= n; ++a) {
    for (int alpha = 1; alpha <= n; ++alpha) {
      const bool by_row_a = conv == CofactorConvention::delete_row_a_col_alpha;
      IndexSet rows = complement({by_row_a ? a : alpha}, n);
      IndexSet cols = complement({by_row_a ? alpha : a}, n);
      NCPoly m = qminor(*mat_, rows, cols, GenClass::z);
      star_gens_.push_back({m * VScalar::minus_q_pow(a + alpha - 2 * n), 1});
    }
  }
  // d* computed from the generator images alone
  GLnElement ds = star({det_, 0});
  if (ds.dpow == 1 && ds.poly.size() == 1 && ds.poly.begin()->first.empty()) {
    det_star_ = ds.poly.begin()->second;
  }
}

const GLnElement& GLModel::star_generator(int a, int alpha) const {
  if (a < 1 || a > n_ || alpha < 1 || alpha > n_) throw Error(ErrorKind::index_range, "index out of range");
  return star_gens_[static_cast<std::size_t>((a - 1) * n_ + (alpha - 1))];
}

GLnElement GLModel::generator(int a, int alpha) const {
  return {mat_->generator_poly({GenClass::z, a, alpha}), 0};
}

GLnElement GLModel::add(const GLnElement& a, const GLnElement& b) const {
  const int k = std::max(a.dpow, b.dpow);
  NCPoly pa = mat_->multiply(a.poly, mat_->power(det_, k - a.dpow));
  NCPoly pb = mat_->multiply(b.poly, mat_->power(det_, k - b.dpow));
  return reduce({pa + pb, k});
}

GLnElement GLModel::sub(const GLnElement& a, const GLnElement& b) const {
  return add(a, scale(b, VScalar(-1)));
}

GLnElement GLModel::mul(const GLnElement& a, const GLnElement& b) const {
  return reduce({mat_->multiply(a.poly, b.poly), a.dpow + b.dpow});
}

GLnElement GLModel::scale(const GLnElement& a, const VScalar& c) const {
  if (c.is_zero()) return {};
  return {a.poly * c, a.dpow};
}

GLnElement GLModel::star(const GLnElement& g) const {
  GLnElement acc;
  for (const auto& [w, c] : g.poly) {
    GLnElement term{NCPoly(c), 0};
    for (std::size_t k = w.size(); k-- > 0;) {
      const GeneratorId& gen = mat_->generator(w[k]);
      term = mul(term, star_generator(gen.i, gen.j));
    }
    acc = add(acc, term);
  }
  if (g.dpow == 0) return acc;
  if (det_star_.is_zero()) throw Error(ErrorKind::precondition, "d* is not a multiple of d^-1");
  // (d^{-k})* = (c d^{-1})^{-k} = c^{-k} d^k
  GLnElement dk{mat_->power(det_, g.dpow) * det_star_.pow(-g.dpow), 0};
  return mul(dk, acc);
}

GLnElement GLModel::embed(const Algebra& pol, const NCPoly& p) const {
  GLnElement acc;
  for (const auto& [w, c] : p) {
    GLnElement term{NCPoly(c), 0};
    for (std::size_t k = 0; k < w.size(); ++k) {
      const GeneratorId& gen = pol.generator(w[k]);
      term = mul(term, is_antiholomorphic(gen.cls) ? star_generator(gen.i, gen.j)
                                                    : generator(gen.i, gen.j));
    }
    acc = add(acc, term);
  }
  return acc;
}

namespace {

// Non-decreasing words of the given length over `letters` letters.
void sorted_words(std::size_t letters, std::size_t length, Word& cur, std::vector<Word>& out) {
  if (cur.size() == length) {
    out.push_back(cur);
    return;
  }
  const std::size_t start = cur.empty() ? 0 : cur[cur.size() - 1];
  for (std::size_t l = start; l < letters; ++l) {
    cur.push_back(static_cast<std::uint8_t>(l));
    sorted_words(letters, length, cur, out);
    cur.letters.pop_back();
  }
}

}  // namespace

std::optional<NCPoly> GLModel::divide_by_det(const NCPoly& p) const {
  std::map<std::size_t, NCPoly> by_degree;
  for (const auto& [w, c] : p) by_degree[w.size()].add_term(w, c);
  NCPoly quotient;
  const auto nn = static_cast<std::size_t>(n_);
  for (const auto& [deg, part] : by_degree) {
    if (deg < nn) return std::nullopt;
    std::vector<Word> monomials;
    Word cur;
    sorted_words(mat_->size(), deg - nn, cur, monomials);
    SpanSolver<Word, Word> solver;
    for (const Word& m : monomials) {
      NCPoly prod = mat_->multiply(NCPoly(m, VScalar(1)), det_);
      solver.add(std::map<Word, VScalar>(prod.terms().begin(), prod.terms().end()), m);
    }
    auto combo = solver.express(std::map<Word, VScalar>(part.terms().begin(), part.terms().end()));
    if (!combo) return std::nullopt;
    for (const auto& [m, c] : *combo) quotient.add_term(m, c);
  }
  return quotient;
}

GLnElement GLModel::reduce(GLnElement g) const {
  if (g.poly.is_zero()) return {};
  while (g.dpow > 0) {
    auto q = divide_by_det(g.poly);
    if (!q) break;
    g.poly = std::move(*q);
    --g.dpow;
  }
  return g;
}

std::string GLModel::render(const GLnElement& g) const {
  std::string s = mat_->render(g.poly);
  if (g.dpow == 0) return s;
  return "(" + s + ")*d^-" + std::to_string(g.dpow);
}

}  // namespace qball

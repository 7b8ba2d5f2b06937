#include "qball/kernel.hpp"

#include <sstream>

#include "qball/error.hpp"
#include "qball/qmatrix.hpp"

namespace qball {

namespace {

// Algebras are shared per n so that their product caches are reused.
AlgebraPtr shared_pol(int n, PolFamily family) {
  static std::mutex mutex;
  static std::map<std::pair<int, PolFamily>, AlgebraPtr> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{n, family}];
  if (!slot) slot = pol_algebra(n, family);
  return slot;
}

// Holomorphic minus antiholomorphic letter count.
int signed_degree(const Algebra& alg, const Word& w) {
  auto [a, b] = word_bidegree(alg, w);
  return a - b;
}

bool has_anti(const Algebra& alg, const Word& w) { return word_bidegree(alg, w).second > 0; }
bool has_holo(const Algebra& alg, const Word& w) { return word_bidegree(alg, w).first > 0; }

}  // namespace

Kernel::Kernel(int n, int cutoff)
    : n_(n),
      cutoff_(cutoff),
      first_(shared_pol(n, PolFamily::domain)),
      second_(shared_pol(n, PolFamily::boundary)) {
  if (cutoff < 0) throw Error(ErrorKind::precondition, "negative cutoff");
}

Kernel Kernel::unit(int n, int cutoff) {
  Kernel k(n, cutoff);
  k.add({}, Word(), NCPoly::one());
  return k;
}

Kernel Kernel::monomial(int n, int cutoff, const PowerKey& powers, const NCPoly& first,
                        const NCPoly& second) {
  Kernel k(n, cutoff);
  for (const auto& [w, c] : first) k.add(powers, w, second * c);
  return k;
}

void Kernel::add(const PowerKey& powers, const Word& first, const NCPoly& second) {
  if (second.is_zero()) return;
  auto [a, b] = word_bidegree(*first_, first);
  if (a > cutoff_ || b > cutoff_) {
    truncated_ = true;
    return;
  }
  auto [it, inserted] = terms_.try_emplace({powers, first}, second);
  if (inserted) return;
  it->second += second;
  if (it->second.is_zero()) terms_.erase(it);
}

void Kernel::mark_truncated(bool inexact) {
  truncated_ = true;
  inexact_ = inexact_ || inexact;
}

void Kernel::check_compatible(const Kernel& rhs) const {
  if (n_ != rhs.n_) throw Error(ErrorKind::precondition, "kernels for different n");
  if (cutoff_ != rhs.cutoff_) throw Error(ErrorKind::precondition, "cutoff mismatch");
}

Kernel Kernel::operator+(const Kernel& rhs) const {
  check_compatible(rhs);
  Kernel out = *this;
  for (const auto& [key, g] : rhs.terms_) out.add(key.first, key.second, g);
  out.truncated_ = truncated_ || rhs.truncated_;
  out.inexact_ = inexact_ || rhs.inexact_;
  return out;
}

Kernel Kernel::operator-(const Kernel& rhs) const { return *this + rhs * VScalar(-1); }

Kernel Kernel::operator*(const VScalar& c) const {
  Kernel out(n_, cutoff_);
  out.truncated_ = truncated_;
  out.inexact_ = inexact_;
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& [key, g] : out.terms_) g *= c;
  return out;
}

std::string Kernel::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, g] : terms_) {
    if (!first) os << " + ";
    first = false;
    const PowerKey& p = key.first;
    std::string left;
    auto power = [](const char* sym, int e) {
      if (e == 0) return std::string();
      return std::string(sym) + (e == 1 ? "" : "^" + std::to_string(e)) + "*";
    };
    left = power("t", p.t) + power("ts", p.ts);
    left += key.second.empty() ? "1" : first_->render_word(key.second);
    std::string right = power("tau", p.tau) + power("taus", p.taus);
    os << '[' << left << "] (x) [" << right << '(' << second_->render(g) << ")]";
  }
  return os.str();
}

Kernel kmul(const Kernel& k1, const Kernel& k2) {
  if (k1.n() != k2.n()) throw Error(ErrorKind::precondition, "kernels for different n");
  if (k1.cutoff() != k2.cutoff()) throw Error(ErrorKind::precondition, "cutoff mismatch");
  const Algebra& first = *k1.first_algebra();
  const Algebra& second = *k1.second_algebra();
  Kernel out(k1.n(), k1.cutoff());
  const bool either_truncated = k1.truncated() || k2.truncated();
  bool inexact = k1.inexact() || k2.inexact();

  // Second-leg factors g1 carry a q-power depending on each word, so pre-split them.
  for (const auto& [key1, g1] : k1.terms()) {
    const PowerKey& p1 = key1.first;
    const Word& w1 = key1.second;
    for (const auto& [key2, g2] : k2.terms()) {
      const PowerKey& p2 = key2.first;
      const Word& w2 = key2.second;
      // first leg: (t^i2 t*^j2 w2)(t^i1 t*^j1 w1), w2 moved right past t^i1 t*^j1
      const VScalar c1 = VScalar::q_pow(signed_degree(first, w2) * (p1.t + p1.ts));
      NCPoly f = first.multiply(NCPoly(w2, c1), NCPoly(w1, VScalar(1)));
      if (either_truncated && has_anti(first, w2) && has_holo(first, w1)) inexact = true;
      // second leg: (tau^k1 tau*^l1 g1)(tau^k2 tau*^l2 g2), g1 moved right past tau^k2 tau*^l2
      const int shift2 = p2.tau + p2.taus;
      NCPoly g1s;
      if (shift2 == 0) {
        g1s = g1;
      } else {
        for (const auto& [u, c] : g1) g1s.add_term(u, c * VScalar::q_pow(signed_degree(second, u) * shift2));
      }
      const NCPoly g = second.multiply(g1s, g2);
      if (g.is_zero()) continue;
      const PowerKey p{p1.t + p2.t, p1.ts + p2.ts, p1.tau + p2.tau, p1.taus + p2.taus};
      for (const auto& [w, c] : f) out.add(p, w, g * c);
    }
  }
  if (either_truncated || out.truncated()) out.mark_truncated(inexact);
  return out;
}

Kernel kpow(const Kernel& k, int e) {
  if (e < 0) return kinverse(k, -e);
  Kernel r = Kernel::unit(k.n(), k.cutoff());
  for (int i = 0; i < e; ++i) r = kmul(r, k);
  return r;
}

namespace {

struct MinorData {
  int size;
  IndexSet rows;
  IndexSet cols;
  int inversions;
};

// For |J| = n in 1..2n: rows J cap {1..n}; columns n+1-alpha for each n+alpha missing from J.
std::vector<MinorData> minor_data(int n) {
  std::vector<MinorData> out;
  for (const IndexSet& J : subsets(2 * n, n)) {
    MinorData d;
    for (int j : J) {
      if (j <= n) d.rows.push_back(j);
    }
    for (int alpha = n; alpha >= 1; --alpha) {
      if (!std::binary_search(J.begin(), J.end(), n + alpha)) d.cols.push_back(n + 1 - alpha);
    }
    d.size = static_cast<int>(d.rows.size());
    d.inversions = inversions(J, complement(J, 2 * n));
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

Kernel build_L(int n, int cutoff) {
  Kernel L(n, cutoff);
  const Algebra& first = *L.first_algebra();
  const Algebra& second = *L.second_algebra();
  for (const MinorData& d : minor_data(n)) {
    const NCPoly z = qminor(first, d.rows, d.cols, GenClass::z);
    const NCPoly zeta = qminor(second, d.rows, d.cols, GenClass::zeta);
    // (t Z_J) (x) (zeta_J* tau*), second leg reordered as q^{-k} tau* zeta_J*
    const VScalar sign = d.size % 2 == 0 ? VScalar(1) : VScalar(-1);
    const NCPoly g = star(second, zeta) * (sign * VScalar::q_pow(-d.size));
    L = L + Kernel::monomial(n, cutoff, PowerKey{1, 0, 0, 1}, z, g);
  }
  return L;
}

Kernel build_Lbar(int n, int cutoff) {
  Kernel Lb(n, cutoff);
  const Algebra& first = *Lb.first_algebra();
  const Algebra& second = *Lb.second_algebra();
  for (const MinorData& d : minor_data(n)) {
    const NCPoly zs = star(first, qminor(first, d.rows, d.cols, GenClass::z));
    const NCPoly zeta = qminor(second, d.rows, d.cols, GenClass::zeta);
    // (Z_J* t*) (x) (tau zeta_J), first leg reordered as q^{-k} t* Z_J*
    const VScalar sign = d.size % 2 == 0 ? VScalar(1) : VScalar(-1);
    const VScalar c = sign * VScalar::minus_q_pow(-2 * d.inversions) * VScalar::q_pow(-d.size);
    Lb = Lb + Kernel::monomial(n, cutoff, PowerKey{0, 1, 1, 0}, zs, zeta * c);
  }
  return Lb;
}

Kernel kinverse(const Kernel& k, int power) {
  if (power < 1) throw Error(ErrorKind::precondition, "inverse power must be positive");
  const int n = k.n();
  const int D = k.cutoff();
  // leading part: the terms with empty first leg and scalar second leg
  const Kernel::Key* lead = nullptr;
  VScalar lead_coeff;
  for (const auto& [key, g] : k.terms()) {
    if (!key.second.empty() || g.size() != 1 || !g.begin()->first.empty()) continue;
    if (lead != nullptr) throw Error(ErrorKind::precondition, "leading part is not a single term");
    lead = &key;
    lead_coeff = g.begin()->second;
  }
  if (lead == nullptr) throw Error(ErrorKind::precondition, "kernel has no invertible leading term");
  const PowerKey& u = lead->first;
  const Kernel u_inv = Kernel::monomial(n, D, PowerKey{-u.t, -u.ts, -u.tau, -u.taus}, NCPoly::one(),
                                        NCPoly(lead_coeff.inverse()));
  // N = k U^{-1} - 1 must be of positive degree
  const Kernel N = kmul(k, u_inv) - Kernel::unit(n, D);
  for (const auto& [key, g] : N.terms()) {
    if (key.second.empty()) throw Error(ErrorKind::precondition, "non-unit leading term");
  }
  const Kernel minus_N = N * VScalar(-1);
  Kernel sum = Kernel::unit(n, D);
  Kernel term = Kernel::unit(n, D);
  const int max_terms = 2 * D + 2;
  for (int m = 1; m <= max_terms; ++m) {
    term = kmul(term, minus_N);
    if (term.is_zero()) break;
    sum = sum + term;
    if (m == max_terms) sum.mark_truncated(true);
  }
  sum.mark_truncated(false);
  Kernel inv = kmul(u_inv, sum);
  Kernel result = inv;
  for (int p = 1; p < power; ++p) result = kmul(result, inv);
  return result;
}

Kernel substitute_x_inverse(const Kernel& k) {
  const Algebra& first = *k.first_algebra();
  const NCPoly y = y_element(first, k.n());
  Kernel out(k.n(), k.cutoff());
  std::map<int, NCPoly> y_powers;
  for (const auto& [key, g] : k.terms()) {
    const PowerKey& p = key.first;
    if (p.t != p.ts || p.t > 0) throw Error(ErrorKind::precondition, "unbalanced t powers");
    const int m = -p.t;
    auto it = y_powers.find(m);
    if (it == y_powers.end()) it = y_powers.emplace(m, first.power(y, m)).first;
    const NCPoly f = first.multiply(it->second, NCPoly(key.second, VScalar(1)));
    for (const auto& [w, c] : f) out.add(PowerKey{0, 0, p.tau, p.taus}, w, g * c);
  }
  if (k.truncated()) out.mark_truncated(k.inexact());
  return out;
}

PoissonKernel poisson_kernel(int n, int cutoff) {
  const Kernel lbar_inv = kinverse(build_Lbar(n, cutoff), n);
  const Kernel l_inv = kinverse(build_L(n, cutoff), n);
  const Kernel tau = Kernel::monomial(n, cutoff, PowerKey{0, 0, n, n}, NCPoly::one(), NCPoly::one());
  const Kernel raw = substitute_x_inverse(kmul(kmul(tau, lbar_inv), l_inv));
  VScalar p00;
  for (const auto& [key, g] : raw.terms()) {
    if (key.first.tau != 0 || key.first.taus != 0) {
      throw Error(ErrorKind::precondition, "tau powers did not cancel");
    }
    if (key.second.empty()) p00 = g.scalar_part();
  }
  if (p00.is_zero()) throw Error(ErrorKind::precondition, "Poisson kernel has no constant term");
  return {raw * p00.inverse(), p00};
}

Kernel p_component(const Kernel& k, int j, int kk) {
  if (j < 0 || kk < 0 || j > k.cutoff() || kk > k.cutoff()) {
    throw Error(ErrorKind::index_range, "bidegree beyond the cutoff");
  }
  Kernel out(k.n(), k.cutoff());
  for (const auto& [key, g] : k.terms()) {
    if (word_bidegree(*k.first_algebra(), key.second) == std::pair{j, kk}) {
      out.add(key.first, key.second, g);
    }
  }
  return out;
}

Kernel eta_shift(const Kernel& k) {
  Kernel out(k.n(), k.cutoff());
  const int n = k.n();
  for (const auto& [key, g] : k.terms()) {
    PowerKey p = key.first;
    if (p.tau == 0 && p.taus == 0) {
      out.add(p, key.second, g);
      continue;
    }
    if (p.tau != -n || p.taus != -n) throw Error(ErrorKind::precondition, "wrong tau power signature");
    p.tau = 0;
    p.taus = 0;
    out.add(p, key.second, g);
  }
  if (k.truncated()) out.mark_truncated(k.inexact());
  return out;
}

}  // namespace qball

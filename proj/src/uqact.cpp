#include "qball/uqact.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>

#include "qball/error.hpp"
#include "qball/qmatrix.hpp"

namespace qball {

std::string to_string(const UqGen& g) {
  switch (g.kind) {
    case UqKind::E: return "E" + std::to_string(g.index);
    case UqKind::F: return "F" + std::to_string(g.index);
    case UqKind::K: return "K" + std::to_string(g.index);
    case UqKind::Kinv: return "K" + std::to_string(g.index) + "^-1";
  }
  return "?";
}

void UqExpr::add(const UqWord& word, const VScalar& c) {
  if (c.is_zero()) return;
  // cancel adjacent K_i K_i^{-1}
  UqWord w;
  for (const UqGen& g : word) {
    const bool k = g.kind == UqKind::K || g.kind == UqKind::Kinv;
    if (k && !w.empty() && w.back().index == g.index &&
        ((w.back().kind == UqKind::K && g.kind == UqKind::Kinv) ||
         (w.back().kind == UqKind::Kinv && g.kind == UqKind::K))) {
      w.pop_back();
      continue;
    }
    w.push_back(g);
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

UqExpr UqExpr::operator*(const UqExpr& rhs) const {
  UqExpr out;
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : rhs.terms_) {
      UqWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add(w, c1 * c2);
    }
  }
  return out;
}

UqExpr UqExpr::operator+(const UqExpr& rhs) const {
  UqExpr out = *this;
  for (const auto& [w, c] : rhs.terms_) out.add(w, c);
  return out;
}

UqExpr UqExpr::operator*(const VScalar& c) const {
  UqExpr out;
  for (const auto& [w, c0] : terms_) out.add(w, c0 * c);
  return out;
}

std::string UqExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    for (const UqGen& g : w) os << '*' << qball::to_string(g);
  }
  return os.str();
}

namespace {

UqExpr word_expr(std::initializer_list<UqGen> gens, const VScalar& c) {
  UqExpr x;
  x.add(UqWord(gens), c);
  return x;
}

}  // namespace

UqExpr ustar(const UqGen& g, int n) {
  const VScalar s = g.index == n ? VScalar(-1) : VScalar(1);
  const int i = g.index;
  switch (g.kind) {
    case UqKind::K: return UqExpr(g);
    case UqKind::Kinv: return UqExpr(g);
    case UqKind::E: return word_expr({{UqKind::K, i}, {UqKind::F, i}}, s);
    case UqKind::F: return word_expr({{UqKind::E, i}, {UqKind::Kinv, i}}, s);
  }
  return {};
}

// Antihomomorphism; every structure constant is real so it is linear here.
UqExpr ustar(const UqExpr& x, int n) {
  UqExpr out;
  for (const auto& [w, c] : x.terms()) {
    UqExpr term = word_expr({}, c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) term = term * ustar(*it, n);
    out = out + term;
  }
  return out;
}

UqExpr antipode(const UqGen& g) {
  const int i = g.index;
  switch (g.kind) {
    case UqKind::K: return UqExpr(UqGen{UqKind::Kinv, i});
    case UqKind::Kinv: return UqExpr(UqGen{UqKind::K, i});
    case UqKind::E: return word_expr({{UqKind::Kinv, i}, {UqKind::E, i}}, VScalar(-1));
    case UqKind::F: return word_expr({{UqKind::F, i}, {UqKind::K, i}}, VScalar(-1));
  }
  return {};
}

VScalar counit(const UqGen& g) {
  return g.kind == UqKind::K || g.kind == UqKind::Kinv ? VScalar(1) : VScalar(0);
}

ModuleAlgebra::ModuleAlgebra(AlgebraPtr alg, int rank, const GenAction& action)
    : alg_(std::move(alg)), rank_(rank) {
  if (rank_ < 1) throw Error(ErrorKind::precondition, "rank must be positive");
  const std::size_t total = 4 * static_cast<std::size_t>(rank_) * alg_->size();
  table_.resize(total);
  kscalars_.resize(total);
  // letters in alphabet order, so an entry may use the entries before it
  for (std::size_t r = 0; r < alg_->size(); ++r) {
    const auto letter = static_cast<std::uint8_t>(r);
    for (UqKind kind : {UqKind::K, UqKind::Kinv, UqKind::E, UqKind::F}) {
      for (int i = 1; i <= rank_; ++i) {
        const UqGen g{kind, i};
        NCPoly img = action(g, alg_->generator(letter));
        if (kind == UqKind::K || kind == UqKind::Kinv) {
          const Word w(std::string(1, static_cast<char>(letter)));
          if (img.size() != 1 || img.begin()->first != w) {
            throw Error(ErrorKind::precondition,
                        "K acts on " + to_string(alg_->generator(letter)) + " by a non-scalar");
          }
          kscalars_[slot(g, letter)] = img.begin()->second;
        }
        table_[slot(g, letter)] = std::move(img);
      }
    }
  }
}

std::size_t ModuleAlgebra::slot(const UqGen& g, std::uint8_t letter) const {
  if (g.index < 1 || g.index > rank_) {
    throw Error(ErrorKind::index_range, "generator index out of range: " + qball::to_string(g));
  }
  if (letter >= alg_->size()) throw Error(ErrorKind::unknown_generator, "letter out of range");
  const auto kind = static_cast<std::size_t>(g.kind);
  return ((kind * static_cast<std::size_t>(rank_)) + static_cast<std::size_t>(g.index - 1)) *
             alg_->size() +
         letter;
}

const NCPoly& ModuleAlgebra::on_generator(const UqGen& g, std::uint8_t letter) const {
  return table_[slot(g, letter)];
}

const VScalar& ModuleAlgebra::k_scalar(const UqGen& g, std::uint8_t letter) const {
  if (g.kind != UqKind::K && g.kind != UqKind::Kinv) {
    throw Error(ErrorKind::precondition, "k_scalar needs K or K^-1");
  }
  return kscalars_[slot(g, letter)];
}

NCPoly ModuleAlgebra::act_word(const UqGen& g, const Word& w) const {
  const Algebra& A = *alg_;
  NCPoly out;
  switch (g.kind) {
    case UqKind::K:
    case UqKind::Kinv: {
      VScalar c(1);
      for (std::size_t m = 0; m < w.size(); ++m) c *= k_scalar(g, w[m]);
      if (A.is_canonical(w)) {
        out.add_term(w, c);
        return out;
      }
      return A.normalize(w, c);
    }
    case UqKind::E: {
      // E(w) = sum_i K(w_1..w_{i-1}) E(w_i) w_{i+1}..
      const UqGen K{UqKind::K, g.index};
      VScalar prefix_scale(1);
      for (std::size_t m = 0; m < w.size(); ++m) {
        const NCPoly& e = on_generator(g, w[m]);
        if (!e.is_zero()) {
          const NCPoly prefix(Word(w.letters.substr(0, m)), prefix_scale);
          const NCPoly suffix(Word(w.letters.substr(m + 1)), VScalar(1));
          out += A.multiply(A.multiply(prefix, e), suffix);
        }
        prefix_scale *= k_scalar(K, w[m]);
      }
      return out;
    }
    case UqKind::F: {
      // F(w) = sum_i w_1..w_{i-1} F(w_i) K^{-1}(w_{i+1}..)
      const UqGen Ki{UqKind::Kinv, g.index};
      VScalar suffix_scale(1);
      for (std::size_t m = w.size(); m-- > 0;) {
        const NCPoly& f = on_generator(g, w[m]);
        if (!f.is_zero()) {
          const NCPoly prefix(Word(w.letters.substr(0, m)), VScalar(1));
          const NCPoly suffix(Word(w.letters.substr(m + 1)), suffix_scale);
          out += A.multiply(A.multiply(prefix, f), suffix);
        }
        suffix_scale *= k_scalar(Ki, w[m]);
      }
      return out;
    }
  }
  return out;
}

NCPoly ModuleAlgebra::act(const UqGen& g, const NCPoly& p) const {
  slot(g, 0);
  NCPoly out;
  for (const auto& [w, c] : p) out += act_word(g, w) * c;
  return out;
}

NCPoly ModuleAlgebra::act(const UqWord& w, const NCPoly& p) const {
  NCPoly cur = p;
  for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it) cur = act(*it, cur);
  return cur;
}

NCPoly ModuleAlgebra::act(const UqExpr& x, const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : x.terms()) out += act(w, p) * c;
  return out;
}

std::vector<int> ModuleAlgebra::weight(const Word& w) const {
  std::vector<int> lambda(static_cast<std::size_t>(rank_), 0);
  for (int i = 1; i <= rank_; ++i) {
    for (std::size_t m = 0; m < w.size(); ++m) {
      const VScalar& c = k_scalar({UqKind::K, i}, w[m]);
      if (c.num().size() != 1 || c.num()[0] != 1 || !c.is_laurent() || c.shift() % 2 != 0) {
        throw Error(ErrorKind::precondition, "K eigenvalue is not an integer power of q");
      }
      lambda[static_cast<std::size_t>(i - 1)] += c.shift() / 2;
    }
  }
  return lambda;
}

NCPoly pol_table_entry(const Algebra& pol, int n, const UqGen& g, const GeneratorId& z) {
  if (g.index < 1 || g.index > 2 * n - 1) {
    throw Error(ErrorKind::index_range, "generator index out of range: " + to_string(g));
  }
  if (is_antiholomorphic(z.cls)) {
    throw Error(ErrorKind::precondition, "table covers the holomorphic generators only");
  }
  const GenClass c = z.cls;
  const int a = z.i;
  const int al = z.j;
  const int k = g.index;
  const VScalar v = VScalar::v_pow(1);
  auto gen = [&](int i, int j) { return GeneratorId{c, i, j}; };
  const NCPoly self = pol.generator_poly(z);
  // K_k z = q^{e} z
  int e = 0;
  if (k == n) {
    // mixed case: weight q^{+1}, so that E_n raises the K_n-weight by 2
    e = (a == n ? 1 : 0) + (al == n ? 1 : 0);
  } else if (k < n) {
    e = (a == k ? 1 : 0) + (a == k + 1 ? -1 : 0);
  } else {
    e = (al == 2 * n - k ? 1 : 0) + (al == 2 * n - k + 1 ? -1 : 0);
  }
  switch (g.kind) {
    case UqKind::K: return self * VScalar::q_pow(e);
    case UqKind::Kinv: return self * VScalar::q_pow(-e);
    case UqKind::F:
      if (k == n) return a == n && al == n ? NCPoly(v) : NCPoly();
      if (k < n) return a == k ? pol.generator_poly(gen(a + 1, al)) * v : NCPoly();
      return al == 2 * n - k ? pol.generator_poly(gen(a, al + 1)) * v : NCPoly();
    case UqKind::E:
      if (k == n) {
        if (a != n && al != n) return pol.normalize({gen(a, n), gen(n, al)}, -v * VScalar::q_pow(-1));
        if (a == n && al == n) return pol.normalize({gen(n, n), gen(n, n)}, -v);
        return pol.normalize({gen(n, n), gen(a, al)}, -v);
      }
      if (k < n) return a == k + 1 ? pol.generator_poly(gen(a - 1, al)) * v.inverse() : NCPoly();
      return al == 2 * n - k + 1 ? pol.generator_poly(gen(a, al - 1)) * v.inverse() : NCPoly();
  }
  return {};
}

std::shared_ptr<const ModuleAlgebra> pol_module(int n, PolFamily family) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const ModuleAlgebra>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(n, static_cast<int>(family));
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  AlgebraPtr alg = pol_algebra(n, family);
  const Algebra& A = *alg;
  // Antiholomorphic letters come after the holomorphic ones, so `self` is
  // complete on the holomorphic block whenever an anti entry is requested.
  const ModuleAlgebra* self = nullptr;
  auto action = [&](const UqGen& g, const GeneratorId& x) -> NCPoly {
    if (!is_antiholomorphic(x.cls)) return pol_table_entry(A, n, g, x);
    // X(f*) = ((S(X))* f)*
    const GeneratorId z{star_class(x.cls), x.i, x.j};
    UqExpr sx = antipode(g);
    return star(A, self->act(ustar(sx, n), A.generator_poly(z)));
  };
  // two passes: the first builds the holomorphic block, the second everything
  auto holo_only = [&](const UqGen& g, const GeneratorId& x) -> NCPoly {
    if (!is_antiholomorphic(x.cls)) return pol_table_entry(A, n, g, x);
    return A.generator_poly(x);  // placeholder, never used for holomorphic input
  };
  const ModuleAlgebra first(alg, 2 * n - 1, holo_only);
  self = &first;
  auto mod = std::make_shared<const ModuleAlgebra>(alg, 2 * n - 1, action);
  cache.emplace(key, mod);
  return mod;
}

std::shared_ptr<const ModuleAlgebra> column_module(int rows, int cols) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const ModuleAlgebra>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(rows, cols);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  AlgebraPtr alg = mat_algebra(rows, cols, GenClass::t);
  const Algebra& A = *alg;
  const VScalar v = VScalar::v_pow(1);
  auto action = [&](const UqGen& g, const GeneratorId& x) -> NCPoly {
    const int k = g.index;
    const int i = x.i;
    const int j = x.j;
    const NCPoly self = A.generator_poly(x);
    const int e = (j == k ? 1 : 0) + (j == k + 1 ? -1 : 0);
    switch (g.kind) {
      case UqKind::K: return self * VScalar::q_pow(e);
      case UqKind::Kinv: return self * VScalar::q_pow(-e);
      case UqKind::E: return j == k + 1 ? A.generator_poly({x.cls, i, j - 1}) * v.inverse() : NCPoly();
      case UqKind::F: return j == k ? A.generator_poly({x.cls, i, j + 1}) * v : NCPoly();
    }
    return NCPoly();
  };
  auto mod = std::make_shared<const ModuleAlgebra>(alg, cols - 1, action);
  cache.emplace(key, mod);
  return mod;
}

int h0_value(const std::vector<int>& weight, int n) {
  if (static_cast<int>(weight.size()) != 2 * n - 1) {
    throw Error(ErrorKind::size_mismatch, "weight vector has the wrong length");
  }
  auto lam = [&](int j) { return weight[static_cast<std::size_t>(j - 1)]; };
  int h = n * lam(n);
  for (int j = 1; j < n; ++j) h += j * (lam(j) + lam(2 * n - j));
  return h;
}

int h0_grade(const std::vector<int>& weight, int n) {
  const int h = h0_value(weight, n);
  if (h % 2 != 0) throw Error(ErrorKind::precondition, "odd H_0 eigenvalue");
  return h / 2;
}

Tensor::Tensor(std::shared_ptr<const ModuleAlgebra> left, std::shared_ptr<const ModuleAlgebra> right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_->rank() != right_->rank()) {
    throw Error(ErrorKind::size_mismatch, "tensor factors carry different ranks");
  }
}

void Tensor::add_term(const Word& a, const Word& b, const VScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Tensor::add(const NCPoly& a, const NCPoly& b, const VScalar& c) {
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) add_term(wa, wb, c * ca * cb);
  }
}

Tensor Tensor::operator-(const Tensor& rhs) const {
  Tensor out = *this;
  for (const auto& [k, c] : rhs.terms_) out.add_term(k.first, k.second, -c);
  return out;
}

Tensor Tensor::operator*(const VScalar& c) const {
  Tensor out(left_, right_);
  for (const auto& [k, c0] : terms_) out.add_term(k.first, k.second, c0 * c);
  return out;
}

std::string Tensor::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*[" << left_->algebra()->render_word(k.first) << " (x) "
       << right_->algebra()->render_word(k.second) << ']';
  }
  return os.str();
}

Tensor act_tensor(const UqGen& g, const Tensor& t) {
  const ModuleAlgebra& L = *t.left();
  const ModuleAlgebra& R = *t.right();
  Tensor out(t.left(), t.right());
  for (const auto& [key, c] : t.terms()) {
    const NCPoly a(key.first, VScalar(1));
    const NCPoly b(key.second, VScalar(1));
    switch (g.kind) {
      case UqKind::K:
      case UqKind::Kinv: out.add(L.act(g, a), R.act(g, b), c); break;
      case UqKind::E:
        out.add(L.act(g, a), b, c);
        out.add(L.act(UqGen{UqKind::K, g.index}, a), R.act(g, b), c);
        break;
      case UqKind::F:
        out.add(L.act(g, a), R.act(UqGen{UqKind::Kinv, g.index}, b), c);
        out.add(a, R.act(g, b), c);
        break;
    }
  }
  return out;
}

Tensor kernel_as_tensor(const Kernel& k) {
  Tensor out(pol_module(k.n(), PolFamily::domain), pol_module(k.n(), PolFamily::boundary));
  for (const auto& [key, g] : k.terms()) {
    if (key.first != PowerKey{}) {
      throw Error(ErrorKind::precondition,
                  "action on kernels with t or tau powers is checked in rectangular coordinates");
    }
    out.add(NCPoly(key.second, VScalar(1)), g);
  }
  return out;
}

Kernel act_tensor(const UqGen& g, const Kernel& k) {
  const Tensor t = act_tensor(g, kernel_as_tensor(k));
  Kernel out(k.n(), k.cutoff());
  for (const auto& [key, c] : t.terms()) out.add(PowerKey{}, key.first, NCPoly(key.second, c));
  if (k.truncated()) out.mark_truncated(k.inexact());
  return out;
}

std::vector<UqGen> chevalley_generators(int rank, bool with_inverse) {
  std::vector<UqGen> out;
  for (int i = 1; i <= rank; ++i) {
    out.push_back({UqKind::E, i});
    out.push_back({UqKind::F, i});
    out.push_back({UqKind::K, i});
    if (with_inverse) out.push_back({UqKind::Kinv, i});
  }
  return out;
}

Report check_invariant(const Tensor& t, const std::string& label) {
  Report r;
  r.suite = "invariance";
  r.note(label);
  for (const UqGen& g : chevalley_generators(t.left()->rank())) {
    const Tensor diff = act_tensor(g, t) - t * counit(g);
    if (!diff.is_zero()) r.add_residual(to_string(g) + ": " + diff.render());
  }
  r.status = r.residual_count == 0 ? Status::pass : Status::fail;
  return r;
}

namespace {

IndexSet first_rows(int n) {
  IndexSet rows;
  for (int i = 1; i <= n; ++i) rows.push_back(i);
  return rows;
}

Tensor rect_sum(int n, bool bar) {
  auto mod = column_module(n, 2 * n);
  const Algebra& A = *mod->algebra();
  const IndexSet rows = first_rows(n);
  Tensor out(mod, mod);
  for (const IndexSet& J : subsets(2 * n, n)) {
    const IndexSet Jc = complement(J, 2 * n);
    const int l = inversions(J, Jc);
    const NCPoly mj = qminor(A, rows, J);
    const NCPoly mjc = qminor(A, rows, Jc);
    if (bar) {
      out.add(mjc, mj, VScalar::minus_q_pow(-l));
    } else {
      out.add(mj, mjc, VScalar::minus_q_pow(l));
    }
  }
  return out;
}

}  // namespace

Tensor rect_L(int n) { return rect_sum(n, false); }
Tensor rect_Lbar(int n) { return rect_sum(n, true); }

}  // namespace qball

namespace qball {

Report module_relations_check(const ModuleAlgebra& m, const std::string& label) {
  Report r;
  r.suite = "action";
  r.note(label);
  const Algebra& A = *m.algebra();
  const auto size = static_cast<std::uint8_t>(A.size());
  for (std::uint8_t hi = 0; hi < size; ++hi) {
    for (std::uint8_t lo = 0; lo < hi; ++lo) {
      Word w;
      w.push_back(hi);
      w.push_back(lo);
      const NCPoly rhs = A.normalize(w);
      for (const UqGen& g : chevalley_generators(m.rank())) {
        // the left side is acted on letter by letter, before any rewriting
        const NCPoly diff = m.act_word(g, w) - m.act(g, rhs);
        if (!diff.is_zero()) {
          r.add_residual(to_string(g) + " on " + A.render_word(w) + ": " + A.render(diff));
        }
      }
    }
  }
  r.status = r.residual_count == 0 ? Status::pass : Status::fail;
  return r;
}

namespace {

int cartan(int i, int j) {
  if (i == j) return 2;
  return std::abs(i - j) == 1 ? -1 : 0;
}

std::vector<std::pair<std::string, UqExpr>> operator_relations(int rank) {
  std::vector<std::pair<std::string, UqExpr>> out;
  const VScalar q = VScalar::q_pow(1);
  const VScalar qi = VScalar::q_pow(-1);
  for (int i = 1; i <= rank; ++i) {
    const UqGen Ki{UqKind::K, i};
    const UqGen Kinv{UqKind::Kinv, i};
    for (int j = 1; j <= rank; ++j) {
      const UqGen Ej{UqKind::E, j};
      const UqGen Fj{UqKind::F, j};
      const UqGen Ei{UqKind::E, i};
      const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      UqExpr ke;
      ke.add({Ki, Ej}, VScalar(1));
      ke.add({Ej, Ki}, -VScalar::q_pow(cartan(i, j)));
      out.emplace_back("KE" + tag, ke);
      UqExpr kf;
      kf.add({Ki, Fj}, VScalar(1));
      kf.add({Fj, Ki}, -VScalar::q_pow(-cartan(i, j)));
      out.emplace_back("KF" + tag, kf);
      UqExpr ef;
      ef.add({Ei, Fj}, VScalar(1));
      ef.add({Fj, Ei}, VScalar(-1));
      if (i == j) {
        const VScalar c = (q - qi).inverse();
        ef.add({Ki}, -c);
        ef.add({Kinv}, c);
      }
      out.emplace_back("EF" + tag, ef);
      if (i == j) continue;
      for (UqKind kind : {UqKind::E, UqKind::F}) {
        const UqGen X{kind, i};
        const UqGen Y{kind, j};
        const std::string name = (kind == UqKind::E ? "E" : "F");
        UqExpr rel;
        if (std::abs(i - j) == 1) {
          rel.add({X, X, Y}, VScalar(1));
          rel.add({X, Y, X}, -(q + qi));
          rel.add({Y, X, X}, VScalar(1));
          out.emplace_back("serre" + name + tag, rel);
        } else {
          rel.add({X, Y}, VScalar(1));
          rel.add({Y, X}, VScalar(-1));
          out.emplace_back("commute" + name + tag, rel);
        }
      }
    }
  }
  return out;
}

}  // namespace

Report operator_relations_check(const ModuleAlgebra& m, const std::vector<Word>& domain,
                                const std::string& label) {
  Report r;
  r.suite = "action";
  r.note(label);
  const Algebra& A = *m.algebra();
  for (const auto& [name, rel] : operator_relations(m.rank())) {
    for (const Word& w : domain) {
      const NCPoly out = m.act(rel, NCPoly(w, VScalar(1)));
      if (!out.is_zero()) r.add_residual(name + " on " + A.render_word(w) + ": " + A.render(out));
    }
  }
  r.status = r.residual_count == 0 ? Status::pass : Status::fail;
  return r;
}

std::vector<Word> wick_monomials(const Algebra& pol, int n, int max_holo, int max_anti) {
  const int block = n * n;
  // non-decreasing words of length <= len over letters [base, base + block)
  auto words = [&](int base, int len) {
    std::vector<Word> out{Word()};
    std::vector<Word> frontier{Word()};
    for (int l = 1; l <= len; ++l) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        const int start = w.empty() ? base : w[w.size() - 1];
        for (int r = start; r < base + block; ++r) {
          Word x = w;
          x.push_back(static_cast<std::uint8_t>(r));
          next.push_back(x);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  };
  if (static_cast<int>(pol.size()) != 2 * block) {
    throw Error(ErrorKind::size_mismatch, "not a Pol algebra of this size");
  }
  std::vector<Word> out;
  for (const Word& h : words(0, max_holo)) {
    for (const Word& s : words(block, max_anti)) out.push_back(h + s);
  }
  return out;
}

}  // namespace qball

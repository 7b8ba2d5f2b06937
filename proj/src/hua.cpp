#include "qball/hua.hpp"

#include <sstream>

#include "qball/error.hpp"

namespace qball {

namespace {

void check_indices(int n, std::initializer_list<int> idx) {
  for (int i : idx) {
    if (i < 1 || i > n) throw Error(ErrorKind::index_range, "index out of range: " + std::to_string(i));
  }
}

int pol_n(const Algebra& pol) {
  int n = 1;
  while (static_cast<std::size_t>(2 * n * n) < pol.size()) ++n;
  if (static_cast<std::size_t>(2 * n * n) != pol.size()) {
    throw Error(ErrorKind::precondition, "not a Pol algebra: " + pol.name());
  }
  return n;
}

Word wick_word(const Algebra& pol, GenClass h, int b, int beta, int a, int alpha) {
  const GeneratorId x{h, b, beta};
  const GeneratorId y{star_class(h), a, alpha};
  Word w;
  w.push_back(pol.rank_or_throw(x));
  w.push_back(pol.rank_or_throw(y));
  return w;
}

VScalar weight(int c, HuaWeights w) { return w == HuaWeights::q_power ? VScalar::q_pow(2 * c) : VScalar(1); }

GeneratorId zeta(int a, int al) { return {GenClass::zeta, a, al}; }
GeneratorId zetas(int a, int al) { return {GenClass::zetas, a, al}; }

// sum_{c=1}^n q^{2c}
VScalar q_power_sum(int n) {
  VScalar s;
  for (int c = 1; c <= n; ++c) s += VScalar::q_pow(2 * c);
  return s;
}

std::string fmt_pair(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// v = 1 image of a polynomial: word -> rational
std::map<Word, mpq_class> at_one(const NCPoly& p) {
  std::map<Word, mpq_class> out;
  for (const auto& [w, c] : p) {
    const mpq_class x = c.eval(1);
    if (x != 0) out.emplace(w, x);
  }
  return out;
}

}  // namespace

VScalar d2_at_zero(const TruncatedSeries& u, int b, int beta, int a, int alpha) {
  const Algebra& pol = *u.algebra();
  const int n = pol_n(pol);
  check_indices(n, {b, beta, a, alpha});
  if (u.cutoff() < 1) throw Error(ErrorKind::precondition, "(1,1) component beyond the cutoff");
  const GenClass h = pol.generator(0).cls;
  return u.poly().coeff(wick_word(pol, h, b, beta, a, alpha));
}

NCPoly d2_at_zero(const Kernel& k, int b, int beta, int a, int alpha) {
  check_indices(k.n(), {b, beta, a, alpha});
  if (k.cutoff() < 1) throw Error(ErrorKind::precondition, "(1,1) component beyond the cutoff");
  const Word w = wick_word(*k.first_algebra(), GenClass::z, b, beta, a, alpha);
  NCPoly out;
  for (const auto& [key, g] : k.terms()) {
    if (key.second != w) continue;
    if (key.first != PowerKey{}) throw Error(ErrorKind::precondition, "kernel carries t or tau powers");
    out += g;
  }
  return out;
}

VScalar hua_sum_A(const TruncatedSeries& u, int alpha, int beta, HuaWeights w) {
  const int n = pol_n(*u.algebra());
  VScalar s;
  for (int c = 1; c <= n; ++c) s += weight(c, w) * d2_at_zero(u, c, beta, c, alpha);
  return s;
}

NCPoly hua_sum_A(const Kernel& k, int alpha, int beta, HuaWeights w) {
  NCPoly s;
  for (int c = 1; c <= k.n(); ++c) s += d2_at_zero(k, c, beta, c, alpha) * weight(c, w);
  return s;
}

VScalar hua_sum_B(const TruncatedSeries& u, int a, int b, HuaWeights w) {
  const int n = pol_n(*u.algebra());
  VScalar s;
  for (int g = 1; g <= n; ++g) s += weight(g, w) * d2_at_zero(u, a, g, b, g);
  return s;
}

NCPoly hua_sum_B(const Kernel& k, int a, int b, HuaWeights w) {
  NCPoly s;
  for (int g = 1; g <= k.n(); ++g) s += d2_at_zero(k, a, g, b, g) * weight(g, w);
  return s;
}

VScalar hua_K(int n) {
  return (VScalar(1) - VScalar::q_pow(-2 * n)) / (VScalar(1) - VScalar::q_pow(-2));
}

Kernel p11_expected(int n, int cutoff) {
  Kernel out(n, cutoff);
  const Algebra& first = *out.first_algebra();
  const Algebra& second = *out.second_algebra();
  const VScalar K = hua_K(n);
  for (int a = 1; a <= n; ++a) {
    for (int al = 1; al <= n; ++al) {
      for (int b = 1; b <= n; ++b) {
        for (int be = 1; be <= n; ++be) {
          NCPoly g = second.normalize({zeta(a, al), zetas(b, be)},
                                      K * VScalar::q_pow(2 * (2 * n - a - al)));
          if (a == b && al == be) g -= NCPoly::one();
          out.add(PowerKey{}, wick_word(first, GenClass::z, b, be, a, al), g);
        }
      }
    }
  }
  return out;
}

std::optional<VScalar> proportionality(const Kernel& actual, const Kernel& expected) {
  if (expected.is_zero()) return actual.is_zero() ? std::optional<VScalar>(VScalar()) : std::nullopt;
  const auto& [key0, g0] = *expected.terms().begin();
  auto it = actual.terms().find(key0);
  if (it == actual.terms().end()) return std::nullopt;
  const auto& [w0, c0] = *g0.begin();
  const VScalar c = it->second.coeff(w0) / c0;
  if (!(actual - expected * c).is_zero()) return std::nullopt;
  return c;
}

Report verify_p11(int n, int cutoff) {
  Report r;
  r.suite = "p11";
  r.n = n;
  r.cutoff = cutoff;
  if (cutoff < 1) {
    r.status = Status::skipped;
    r.note("cutoff too small");
    return r;
  }
  const PoissonKernel P = poisson_kernel(n, cutoff);
  r.truncated = P.kernel.truncated();
  r.note("raw constant term before normalization: " + P.raw_p00.to_string());
  const Kernel p11 = p_component(P.kernel, 1, 1);
  const auto c = proportionality(p11, p11_expected(n, cutoff));
  if (!c) {
    r.add_residual("p11 is not proportional to the expected form: " + p11.render());
    return r;
  }
  r.note("p11 = c * expected with c = " + c->to_string());
  // v = 1: n sum (n zeta conj(zeta) - delta delta) conj(z) z
  const Algebra& second = *p11.second_algebra();
  for (const auto& [key, g] : p11.terms()) {
    const Algebra& first = *p11.first_algebra();
    const GeneratorId zb = first.generator(key.second[0]);
    const GeneratorId za = first.generator(key.second[1]);
    NCPoly cl = second.normalize({zeta(za.i, za.j), zetas(zb.i, zb.j)}, VScalar(n * n));
    if (za.i == zb.i && za.j == zb.j) cl -= NCPoly(VScalar(n));
    if (at_one(g) != at_one(cl)) {
      r.add_residual("v = 1 mismatch at " + first.render_word(key.second) + ": " + second.render(g));
    }
  }
  if (r.residual_count == 0) r.status = Status::pass;
  return r;
}

HuaReport hua_kernel_system(int n, int cutoff, HuaSystem system, HuaWeights w) {
  HuaReport h{system, n, cutoff, {}, Status::pass, false, {}};
  if (cutoff < 1) {
    h.status = Status::skipped;
    h.notes.emplace_back("cutoff too small");
    return h;
  }
  const PoissonKernel P = poisson_kernel(n, cutoff);
  const Kernel p11 = p_component(P.kernel, 1, 1);
  h.truncated = P.kernel.truncated();
  const auto c = proportionality(p11, p11_expected(n, cutoff));
  const ShilovReducer reducer(n, system == HuaSystem::B);
  const Algebra& second = *reducer.algebra();
  const VScalar K = hua_K(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      // A: (alpha, beta) = (i, j); B: (a, b) = (i, j)
      const NCPoly raw = system == HuaSystem::A ? hua_sum_A(P.kernel, i, j, w) : hua_sum_B(P.kernel, i, j, w);
      if (c && w == HuaWeights::q_power) {
        NCPoly expect;
        for (int m = 1; m <= n; ++m) {
          expect += system == HuaSystem::A
                        ? second.normalize({zeta(m, i), zetas(m, j)}, K * VScalar::q_pow(2 * (2 * n - i)))
                        : second.normalize({zeta(j, m), zetas(i, m)}, K * VScalar::q_pow(2 * (2 * n - j)));
        }
        if (i == j) expect -= NCPoly(q_power_sum(n));
        expect *= *c;
        if (!(raw - expect).is_zero()) {
          h.residuals.push_back({i, j, "unreduced sum differs from the closed form: " + second.render(raw)});
        }
        // v = 1: n^2 (sum zeta conj(zeta) - delta)
        NCPoly classical;
        for (int m = 1; m <= n; ++m) {
          classical += system == HuaSystem::A ? second.normalize({zeta(m, i), zetas(m, j)}, VScalar(n * n))
                                              : second.normalize({zeta(j, m), zetas(i, m)}, VScalar(n * n));
        }
        if (i == j) classical -= NCPoly(VScalar(n * n));
        if (at_one(raw) != at_one(classical)) {
          h.residuals.push_back({i, j, "v = 1 pattern differs: " + second.render(raw)});
        }
      }
      const NCPoly red = reducer.reduce(raw);
      if (!red.is_zero()) h.residuals.push_back({i, j, second.render(red)});
    }
  }
  if (!c) h.notes.emplace_back("p11 not proportional to the expected form");
  h.status = h.residuals.empty() ? Status::pass : Status::fail;
  return h;
}

Report to_report(const HuaReport& h, const std::string& suite) {
  Report r;
  r.suite = suite;
  r.n = h.n;
  r.cutoff = h.cutoff;
  r.truncated = h.truncated;
  for (const std::string& s : h.notes) r.note(s);
  const std::string tag = h.system == HuaSystem::A ? "A" : "B";
  for (const HuaResidual& res : h.residuals) r.add_residual(tag + fmt_pair(res.i, res.j) + ": " + res.value);
  r.status = h.status;
  return r;
}

Report verify_hua_kernel(int n, int cutoff, HuaWeights w) {
  Report r;
  r.suite = "hua-kernel";
  r.n = n;
  r.cutoff = cutoff;
  if (cutoff < 1) {
    r.status = Status::skipped;
    r.note("cutoff too small");
    return r;
  }
  for (HuaSystem s : {HuaSystem::A, HuaSystem::B}) r.absorb(to_report(hua_kernel_system(n, cutoff, s, w), r.suite));
  if (w == HuaWeights::one) r.note("negative control: weights set to 1");
  return r;
}

std::vector<UqWord> generator_words_n1(int max_len) {
  const std::vector<UqGen> gens = chevalley_generators(1);
  std::vector<UqWord> out{UqWord{}};
  std::vector<UqWord> frontier{UqWord{}};
  for (int l = 1; l <= max_len; ++l) {
    std::vector<UqWord> next;
    for (const UqWord& w : frontier) {
      for (const UqGen& g : gens) {
        UqWord x = w;
        x.push_back(g);
        next.push_back(x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

HuaReport verify_hua_theorem_n1(const std::vector<N1Boundary>& fs, const std::vector<UqWord>& xis,
                                int cutoff) {
  HuaReport h{HuaSystem::A, 1, cutoff, {}, Status::pass, false, {}};
  if (cutoff < 1) {
    h.status = Status::skipped;
    h.notes.emplace_back("cutoff too small");
    return h;
  }
  const PoissonKernel P = poisson_kernel(1, cutoff);
  auto mod = pol_module(1);
  std::size_t checked = 0;
  std::size_t skipped = 0;
  for (std::size_t fi = 0; fi < fs.size(); ++fi) {
    const TruncatedSeries u = poisson_integral_n1(P.kernel, fs[fi], cutoff);
    if (u.truncated()) h.truncated = true;
    for (std::size_t xi = 0; xi < xis.size(); ++xi) {
      int lowering = 0;
      for (const UqGen& g : xis[xi]) {
        if (g.kind == UqKind::E || g.kind == UqKind::F) ++lowering;
      }
      if (cutoff - lowering < 1) {
        h.truncated = true;
        ++skipped;
        continue;
      }
      const TruncatedSeries xu(u.algebra(), cutoff, mod->act(xis[xi], u.poly()), u.truncated());
      const VScalar a = hua_sum_A(xu, 1, 1);
      const VScalar b = hua_sum_B(xu, 1, 1);
      ++checked;
      if (!a.is_zero() || !b.is_zero()) {
        std::ostringstream os;
        os << "f#" << fi << " xi#" << xi << ": A = " << a.to_string() << ", B = " << b.to_string();
        h.residuals.push_back({static_cast<int>(fi), static_cast<int>(xi), os.str()});
      }
    }
  }
  h.notes.push_back(std::to_string(checked) + " checks");
  if (skipped > 0) h.notes.push_back(std::to_string(skipped) + " words need a larger cutoff");
  if (!h.residuals.empty()) {
    h.status = Status::fail;
  } else {
    h.status = checked > 0 ? Status::pass : Status::skipped;
  }
  return h;
}

}  // namespace qball

#include "qball/ncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qball/error.hpp"

namespace qball {

const char* to_string(GenClass cls) noexcept {
  switch (cls) {
    case GenClass::t: return "t";
    case GenClass::z: return "z";
    case GenClass::zs: return "zs";
    case GenClass::zeta: return "zeta";
    case GenClass::zetas: return "zetas";
  }
  return "?";
}

std::string to_string(const GeneratorId& g) {
  std::ostringstream os;
  os << to_string(g.cls) << '[' << g.i << ',' << g.j << ']';
  return os.str();
}

NCPoly::NCPoly(const VScalar& c) {
  if (!c.is_zero()) terms_.emplace(Word(), c);
}

NCPoly::NCPoly(Word w, const VScalar& c) {
  if (!c.is_zero()) terms_.emplace(std::move(w), c);
}

void NCPoly::add_term(const Word& w, const VScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

VScalar NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? VScalar() : it->second;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const VScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, x] : r.terms_) x = -x;
  return r;
}

Algebra::Algebra(std::string name, std::vector<GeneratorId> alphabet, const RuleFn& rule)
    : name_(std::move(name)), alphabet_(std::move(alphabet)) {
  if (alphabet_.size() > 255) throw Error(ErrorKind::precondition, "alphabet too large");
  for (std::size_t r = 0; r < alphabet_.size(); ++r) {
    if (!ranks_.emplace(alphabet_[r], static_cast<std::uint8_t>(r)).second) {
      throw Error(ErrorKind::precondition, "duplicate generator " + to_string(alphabet_[r]));
    }
  }
  const std::size_t n = alphabet_.size();
  rules_.resize(n * n);
  for (std::size_t hi = 0; hi < n; ++hi) {
    for (std::size_t lo = 0; lo < hi; ++lo) {
      auto& slot = rules_[hi * n + lo];
      for (const RuleTerm& term : rule(alphabet_[hi], alphabet_[lo])) {
        if (term.coeff.is_zero()) continue;
        if (term.word.size() > 2) {
          throw Error(ErrorKind::precondition, "rule right-hand side longer than 2");
        }
        Word w;
        for (const auto& g : term.word) w.push_back(rank_or_throw(g));
        if (w.size() == 2 && w[0] > w[1]) {
          throw Error(ErrorKind::precondition,
                      "rule for " + to_string(alphabet_[hi]) + to_string(alphabet_[lo]) +
                          " produces an out-of-order word");
        }
        const Word lhs(std::string{static_cast<char>(hi), static_cast<char>(lo)});
        if (w.size() == 2 && !(w < lhs)) {
          throw Error(ErrorKind::precondition, "rule does not decrease the word");
        }
        slot.push_back({term.coeff, std::move(w)});
      }
    }
  }
}

std::optional<std::uint8_t> Algebra::rank_of(const GeneratorId& g) const {
  auto it = ranks_.find(g);
  if (it == ranks_.end()) return std::nullopt;
  return it->second;
}

std::uint8_t Algebra::rank_or_throw(const GeneratorId& g) const {
  auto r = rank_of(g);
  if (!r) throw Error(ErrorKind::unknown_generator, to_string(g) + " is not in " + name_);
  return *r;
}

const std::vector<Algebra::RankedTerm>& Algebra::rule(std::uint8_t hi, std::uint8_t lo) const {
  return rules_[static_cast<std::size_t>(hi) * alphabet_.size() + lo];
}

bool Algebra::is_canonical(const Word& w) const {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] >= alphabet_.size()) return false;
    if (k > 0 && w[k - 1] > w[k]) return false;
  }
  return true;
}

namespace {

constexpr int depth_bound = 200'000;

}  // namespace

const NCPoly& Algebra::times_generator(const Word& w, std::uint8_t g, int depth) const {
  std::string key = w.letters;
  key.push_back(static_cast<char>(g));
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  if (depth > depth_bound) throw Error(ErrorKind::step_bound, "normalization recursion too deep");

  auto result = std::make_unique<NCPoly>();
  Word prefix(w.letters.substr(0, w.size() - 1));
  const std::uint8_t last = w[w.size() - 1];
  for (const RankedTerm& term : rule(last, g)) {
    NCPoly current(prefix, term.coeff);
    for (std::size_t k = 0; k < term.word.size(); ++k) {
      const std::uint8_t letter = term.word[k];
      NCPoly next;
      for (const auto& [u, c] : current) {
        if (u.empty() || u[u.size() - 1] <= letter) {
          Word v = u;
          v.push_back(letter);
          next.add_term(v, c);
        } else {
          const NCPoly& part = times_generator(u, letter, depth + 1);
          for (const auto& [pw, pc] : part) next.add_term(pw, pc * c);
        }
      }
      current = std::move(next);
    }
    *result += current;
  }

  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = cache_.try_emplace(std::move(key), std::move(result));
  return *it->second;
}

NCPoly Algebra::multiply_word(const Word& canonical, const Word& tail) const {
  NCPoly current(canonical, VScalar(1));
  for (std::size_t k = 0; k < tail.size(); ++k) {
    const std::uint8_t letter = tail[k];
    if (letter >= alphabet_.size()) throw Error(ErrorKind::unknown_generator, "letter out of range");
    NCPoly next;
    for (const auto& [u, c] : current) {
      if (u.empty() || u[u.size() - 1] <= letter) {
        Word v = u;
        v.push_back(letter);
        next.add_term(v, c);
      } else {
        for (const auto& [pw, pc] : times_generator(u, letter, 0)) next.add_term(pw, pc * c);
      }
    }
    current = std::move(next);
  }
  return current;
}

NCPoly Algebra::rewrite(const Word& w, const VScalar& c, Strategy strategy) const {
  std::map<Word, VScalar> work;
  NCPoly done;
  work.emplace(w, c);
  std::size_t steps = 0;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Word& u = node.key();
    const VScalar& coeff = node.mapped();
    std::size_t pos = u.size();
    if (strategy == Strategy::leftmost) {
      for (std::size_t k = 0; k + 1 < u.size(); ++k) {
        if (u[k] > u[k + 1]) {
          pos = k;
          break;
        }
      }
    } else {
      for (std::size_t k = u.size(); k-- > 1;) {
        if (u[k - 1] > u[k]) {
          pos = k - 1;
          break;
        }
      }
    }
    if (pos == u.size()) {
      done.add_term(u, coeff);
      continue;
    }
    if (++steps > step_bound) throw Error(ErrorKind::step_bound, "rewrite step bound exceeded");
    const std::string head = u.letters.substr(0, pos);
    const std::string tail = u.letters.substr(pos + 2);
    for (const RankedTerm& term : rule(u[pos], u[pos + 1])) {
      Word v(head + term.word.letters + tail);
      VScalar x = term.coeff * coeff;
      auto [it, inserted] = work.try_emplace(std::move(v), x);
      if (!inserted) {
        it->second += x;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return done;
}

NCPoly Algebra::normalize(const Word& w, const VScalar& c, Strategy strategy) const {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] >= alphabet_.size()) throw Error(ErrorKind::unknown_generator, "letter out of range");
  }
  if (c.is_zero()) return {};
  if (strategy != Strategy::memo) return rewrite(w, c, strategy);
  NCPoly r = multiply_word(Word(), w);
  return r * c;
}

NCPoly Algebra::normalize(const std::vector<GeneratorId>& word, const VScalar& c,
                          Strategy strategy) const {
  Word w;
  for (const auto& g : word) w.push_back(rank_or_throw(g));
  return normalize(w, c, strategy);
}

NCPoly Algebra::generator_poly(const GeneratorId& g) const {
  Word w;
  w.push_back(rank_or_throw(g));
  return NCPoly(w, VScalar(1));
}

NCPoly Algebra::multiply(const NCPoly& a, const NCPoly& b) const {
  NCPoly result;
  if (a.is_zero() || b.is_zero()) return result;
  for (const auto& [wb, cb] : b) {
    NCPoly current = a;
    for (std::size_t k = 0; k < wb.size(); ++k) {
      const std::uint8_t letter = wb[k];
      NCPoly next;
      for (const auto& [u, c] : current) {
        if (u.empty() || u[u.size() - 1] <= letter) {
          Word v = u;
          v.push_back(letter);
          next.add_term(v, c);
        } else {
          for (const auto& [pw, pc] : times_generator(u, letter, 0)) next.add_term(pw, pc * c);
        }
      }
      current = std::move(next);
    }
    current *= cb;
    result += current;
  }
  return result;
}

NCPoly Algebra::power(const NCPoly& a, int e) const {
  if (e < 0) throw Error(ErrorKind::precondition, "negative power of a polynomial");
  NCPoly r = NCPoly::one();
  for (int k = 0; k < e; ++k) r = multiply(r, a);
  return r;
}

NCPoly Algebra::commutator(const NCPoly& a, const NCPoly& b) const {
  return multiply(a, b) - multiply(b, a);
}

std::string Algebra::render_word(const Word& w) const {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) s += '*';
    s += to_string(generator(w[k]));
  }
  return s;
}

std::string Algebra::render(const NCPoly& p) const {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Word, VScalar>*> order;
  for (const auto& term : p) order.push_back(&term);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    if (x->first.size() != y->first.size()) return x->first.size() < y->first.size();
    return x->first < y->first;
  });
  std::string out;
  bool first = true;
  for (const auto* term : order) {
    const VScalar& c = term->second;
    std::string cs = c.to_string();
    const bool compound =
        !c.is_laurent() || cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    bool negative = false;
    if (!compound && cs[0] == '-') {
      negative = true;
      cs.erase(0, 1);
    }
    if (compound) cs = "(" + cs + ")";
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (term->first.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += render_word(term->first);
    } else {
      out += cs + "*" + render_word(term->first);
    }
  }
  return out;
}

NCPoly nc_mul(const Algebra& alg, const NCPoly& a, const NCPoly& b) { return alg.multiply(a, b); }

VScalar nc_coeff(const Algebra& alg, const NCPoly& p, const Word& w) {
  if (!alg.is_canonical(w)) {
    throw Error(ErrorKind::non_canonical, "word " + alg.render_word(w) + " is not in normal order");
  }
  return p.coeff(w);
}

std::map<std::vector<int>, NCPoly> nc_grade(const Algebra& alg, const NCPoly& p,
                                            const Grading& grading) {
  std::vector<std::vector<int>> degrees;
  for (const auto& g : alg.alphabet()) degrees.push_back(grading(g));
  std::map<std::vector<int>, NCPoly> out;
  for (const auto& [w, c] : p) {
    std::vector<int> deg;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const auto& d = degrees[w[k]];
      if (deg.empty()) deg.assign(d.size(), 0);
      if (d.size() != deg.size()) throw Error(ErrorKind::size_mismatch, "inconsistent grading");
      for (std::size_t m = 0; m < d.size(); ++m) deg[m] += d[m];
    }
    if (deg.empty() && !degrees.empty()) deg.assign(degrees.front().size(), 0);
    out[deg].add_term(w, c);
  }
  return out;
}

std::vector<int> bidegree_of(const GeneratorId& g) {
  switch (g.cls) {
    case GenClass::t:
    case GenClass::z:
    case GenClass::zeta: return {1, 0};
    case GenClass::zs:
    case GenClass::zetas: return {0, 1};
  }
  return {0, 0};
}

std::pair<int, int> word_bidegree(const Algebra& alg, const Word& w) {
  int a = 0;
  int b = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    auto d = bidegree_of(alg.generator(w[k]));
    a += d[0];
    b += d[1];
  }
  return {a, b};
}

}  // namespace qball

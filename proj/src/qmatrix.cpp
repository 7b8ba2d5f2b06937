#include "qball/qmatrix.hpp"

#include <algorithm>
#include <numeric>

#include "qball/error.hpp"

namespace qball {

void check_index_set(const IndexSet& s, int bound) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > bound) throw Error(ErrorKind::index_range, "index out of range");
    if (k > 0 && s[k - 1] >= s[k]) throw Error(ErrorKind::index_range, "index set not increasing");
  }
}

IndexSet complement(const IndexSet& s, int n) {
  IndexSet out;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  }
  return out;
}

int inversions(const IndexSet& a, const IndexSet& b) {
  int count = 0;
  for (int x : a) {
    for (int y : b) count += x > y ? 1 : 0;
  }
  return count;
}

std::vector<IndexSet> subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++cur[static_cast<std::size_t>(pos)];
    for (int m = pos + 1; m < k; ++m) {
      cur[static_cast<std::size_t>(m)] = cur[static_cast<std::size_t>(m - 1)] + 1;
    }
  }
  return out;
}

std::vector<RuleTerm> matrix_rule(const GeneratorId& hi, const GeneratorId& lo) {
  const int i = lo.i;
  const int j = lo.j;
  const int i2 = hi.i;
  const int j2 = hi.j;
  const VScalar qinv = VScalar::q_pow(-1);
  if (i == i2 || j == j2) return {{qinv, {lo, hi}}};
  if (j > j2) return {{VScalar(1), {lo, hi}}};
  // i < i2, j < j2
  const VScalar q_minus_qinv = VScalar::q_pow(1) - qinv;
  return {{VScalar(1), {lo, hi}},
          {-q_minus_qinv, {GeneratorId{lo.cls, i, j2}, GeneratorId{lo.cls, i2, j}}}};
}

AlgebraPtr mat_algebra(int rows, int cols, GenClass cls) {
  if (rows < 1 || cols < 1) throw Error(ErrorKind::precondition, "empty matrix algebra");
  std::vector<GeneratorId> alphabet;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) alphabet.push_back({cls, i, j});
  }
  std::string name = "C[Mat_" + std::to_string(rows) + "," + std::to_string(cols) + "]";
  return std::make_shared<const Algebra>(name, std::move(alphabet), matrix_rule);
}

NCPoly qminor(const Algebra& alg, const IndexSet& rows, const IndexSet& cols, GenClass cls,
              MinorForm form) {
  if (rows.size() != cols.size()) throw Error(ErrorKind::size_mismatch, "minor is not square");
  check_index_set(rows, 1 << 20);
  check_index_set(cols, 1 << 20);
  const std::size_t k = rows.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  NCPoly result;
  do {
    int inv = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) inv += perm[a] > perm[b] ? 1 : 0;
    }
    std::vector<GeneratorId> word;
    for (std::size_t m = 0; m < k; ++m) {
      if (form == MinorForm::rows) {
        word.push_back({cls, rows[perm[m]], cols[m]});
      } else {
        word.push_back({cls, rows[m], cols[perm[m]]});
      }
    }
    result += alg.normalize(word, VScalar::minus_q_pow(inv));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

NCPoly qdet(const Algebra& alg, int size, GenClass cls) {
  IndexSet all(static_cast<std::size_t>(size));
  std::iota(all.begin(), all.end(), 1);
  return qminor(alg, all, all, cls);
}

Report laplace_check(int n, bool flip_sign) {
  if (n < 1) throw Error(ErrorKind::precondition, "n must be positive");
  Report report;
  report.suite = "laplace";
  report.n = n;
  const int size = 2 * n;
  AlgebraPtr alg = mat_algebra(size, size);
  const NCPoly det = qdet(*alg, size);
  IndexSet top(static_cast<std::size_t>(n));
  IndexSet bottom(static_cast<std::size_t>(n));
  std::iota(top.begin(), top.end(), 1);
  std::iota(bottom.begin(), bottom.end(), n + 1);

  NCPoly forward;
  NCPoly reversed;
  for (const IndexSet& J : subsets(size, n)) {
    const IndexSet Jc = complement(J, size);
    const int l = inversions(J, Jc);
    const NCPoly upper = qminor(*alg, top, J);
    const NCPoly lower = qminor(*alg, bottom, Jc);
    forward += alg->multiply(upper, lower) * VScalar::minus_q_pow(l);
    reversed += alg->multiply(lower, upper) * VScalar::minus_q_pow(flip_sign ? l : -l);
  }
  const NCPoly r1 = forward - det;
  const NCPoly r2 = reversed - det;
  if (!r1.is_zero()) report.add_residual("forward: " + alg->render(r1));
  if (!r2.is_zero()) report.add_residual("reversed: " + alg->render(r2));
  if (report.residual_count > 0) report.residual_count = r1.size() + r2.size();
  return report;
}

Report centrality_check(int size) {
  Report report;
  report.suite = "central";
  report.n = size;
  AlgebraPtr alg = mat_algebra(size, size);
  const NCPoly det = qdet(*alg, size);
  for (const GeneratorId& g : alg->alphabet()) {
    const NCPoly c = alg->commutator(det, alg->generator_poly(g));
    if (!c.is_zero()) report.add_residual("[det_q, " + to_string(g) + "] = " + alg->render(c));
  }
  return report;
}

NCPoly m_map(const Algebra& rect, const NCPoly& top, const NCPoly& bottom, const Algebra& square) {
  auto relabel = [&](const NCPoly& p, int shift) {
    NCPoly out;
    for (const auto& [w, c] : p) {
      std::vector<GeneratorId> word;
      for (std::size_t k = 0; k < w.size(); ++k) {
        GeneratorId g = rect.generator(w[k]);
        g.i += shift;
        word.push_back(g);
      }
      out += square.normalize(word, c);
    }
    return out;
  };
  const int n = static_cast<int>(square.size() == 0 ? 0 : square.alphabet().back().i) / 2;
  return square.multiply(relabel(top, 0), relabel(bottom, n));
}

}  // namespace qball

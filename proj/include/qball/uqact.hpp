#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qball/kernel.hpp"
#include "qball/ncpoly.hpp"
#include "qball/polmat.hpp"
#include "qball/report.hpp"

namespace qball {

enum class UqKind : std::uint8_t { E, F, K, Kinv };

/// Chevalley generator of U_q sl_N, index in 1..N-1.
struct UqGen {
  UqKind kind;
  int index;
  friend auto operator<=>(const UqGen&, const UqGen&) = default;
};

std::string to_string(const UqGen& g);

using UqWord = std::vector<UqGen>;

/// Formal linear combination of generator words. A word acts right to left:
/// (X Y) f = X (Y f).
class UqExpr {
 public:
  UqExpr() = default;
  explicit UqExpr(const UqGen& g) { add({g}, VScalar(1)); }
  void add(const UqWord& w, const VScalar& c);
  const std::map<UqWord, VScalar>& terms() const noexcept { return terms_; }
  UqExpr operator*(const UqExpr& rhs) const;
  UqExpr operator+(const UqExpr& rhs) const;
  UqExpr operator*(const VScalar& c) const;
  friend bool operator==(const UqExpr&, const UqExpr&) = default;
  std::string to_string() const;

 private:
  std::map<UqWord, VScalar> terms_;
};

/// The involution of U_q su_{n,n} on a generator (N = 2n).
UqExpr ustar(const UqGen& g, int n);
/// Antihomomorphic extension to expressions.
UqExpr ustar(const UqExpr& x, int n);
/// The antipode on a generator.
UqExpr antipode(const UqGen& g);
/// Counit on a generator.
VScalar counit(const UqGen& g);

/// A U_q sl_N module algebra: an algebra plus the action of every Chevalley
/// generator on every algebra generator. The action on words follows
///   K(fg) = K(f)K(g),  E(fg) = E(f)g + K(f)E(g),  F(fg) = F(f)K^{-1}(g) + fF(g).
class ModuleAlgebra {
 public:
  using GenAction = std::function<NCPoly(const UqGen&, const GeneratorId&)>;

  ModuleAlgebra(AlgebraPtr alg, int rank, const GenAction& action);

  const AlgebraPtr& algebra() const noexcept { return alg_; }
  /// N - 1, the number of simple roots.
  int rank() const noexcept { return rank_; }

  /// Throws ErrorKind::index_range for a generator index outside 1..rank.
  const NCPoly& on_generator(const UqGen& g, std::uint8_t letter) const;
  /// Scalar by which K_i^{+-1} multiplies a letter.
  const VScalar& k_scalar(const UqGen& g, std::uint8_t letter) const;

  NCPoly act(const UqGen& g, const NCPoly& p) const;
  NCPoly act_word(const UqGen& g, const Word& w) const;
  NCPoly act(const UqWord& w, const NCPoly& p) const;
  NCPoly act(const UqExpr& x, const NCPoly& p) const;

  /// Weight (lambda_1..lambda_rank) of a monomial: K_i w = q^{lambda_i} w.
  std::vector<int> weight(const Word& w) const;

 private:
  std::size_t slot(const UqGen& g, std::uint8_t letter) const;

  AlgebraPtr alg_;
  int rank_;
  std::vector<NCPoly> table_;
  std::vector<VScalar> kscalars_;
};

/// Pol(Mat_n)_q (either copy) as a U_q sl_2n module algebra. The holomorphic
/// table is the standard one; the antiholomorphic entries are derived from
/// X(f*) = ((S(X))* f)*.
std::shared_ptr<const ModuleAlgebra> pol_module(int n, PolFamily family = PolFamily::domain);
/// C[Mat_{rows,cols}]_q with U_q sl_cols acting on column indices.
std::shared_ptr<const ModuleAlgebra> column_module(int rows, int cols);

/// The generator-level table for z_a^alpha.
NCPoly pol_table_entry(const Algebra& pol, int n, const UqGen& g, const GeneratorId& z);

/// H_0 eigenvalue h0 = sum_{j<n} j(lambda_j + lambda_{2n-j}) + n lambda_n.
int h0_value(const std::vector<int>& weight, int n);
/// r with H_0 v = 2 r v; throws when h0 is odd.
int h0_grade(const std::vector<int>& weight, int n);

/// Element of A (x) B as a map (word, word) -> coefficient.
class Tensor {
 public:
  using Terms = std::map<std::pair<Word, Word>, VScalar>;
  Tensor(std::shared_ptr<const ModuleAlgebra> left, std::shared_ptr<const ModuleAlgebra> right);

  void add(const NCPoly& a, const NCPoly& b, const VScalar& c = VScalar(1));
  void add_term(const Word& a, const Word& b, const VScalar& c);
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::shared_ptr<const ModuleAlgebra>& left() const noexcept { return left_; }
  const std::shared_ptr<const ModuleAlgebra>& right() const noexcept { return right_; }

  Tensor operator-(const Tensor& rhs) const;
  Tensor operator*(const VScalar& c) const;
  std::string render() const;

 private:
  std::shared_ptr<const ModuleAlgebra> left_;
  std::shared_ptr<const ModuleAlgebra> right_;
  Terms terms_;
};

/// Coproduct action on a tensor.
Tensor act_tensor(const UqGen& g, const Tensor& t);

/// Converts a kernel whose terms carry no t or tau powers into a tensor over
/// pol_module(n) (x) pol_module(n, boundary). Throws ErrorKind::precondition otherwise.
Tensor kernel_as_tensor(const Kernel& k);
/// act_tensor on a power-free kernel.
Kernel act_tensor(const UqGen& g, const Kernel& k);

/// PASS iff g.T = counit(g) T for every E_i, F_i, K_i.
Report check_invariant(const Tensor& t, const std::string& label);

/// L and Lbar in C[Mat_{n,2n}]_q (x) C[Mat_{n,2n}]_q, second factor with rows relabelled 1..n.
Tensor rect_L(int n);
Tensor rect_Lbar(int n);

/// Acting on both sides of every defining relation hi*lo = rhs gives equal results.
Report module_relations_check(const ModuleAlgebra& m, const std::string& label);
/// Serre, K-E, K-F and E-F commutation relations as operators on the given monomials.
Report operator_relations_check(const ModuleAlgebra& m, const std::vector<Word>& domain,
                                const std::string& label);
/// Canonical Pol words with at most max_holo holomorphic and max_anti antiholomorphic letters.
std::vector<Word> wick_monomials(const Algebra& pol, int n, int max_holo, int max_anti);

/// All E_i, F_i, K_i, K_i^{-1} for i = 1..rank.
std::vector<UqGen> chevalley_generators(int rank, bool with_inverse = true);

}  // namespace qball

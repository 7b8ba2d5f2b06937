#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qball/scalar.hpp"

namespace qball {

/// Symbol class of a generator. The declaration order is the class rank used
/// by the monomial order.
enum class GenClass : std::uint8_t { t, z, zs, zeta, zetas };

const char* to_string(GenClass cls) noexcept;

struct GeneratorId {
  GenClass cls;
  int i;
  int j;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

std::string to_string(const GeneratorId& g);

/// A word over an algebra's alphabet. Each letter is the generator's rank in
/// the algebra's monomial order, so a canonical word is non-decreasing.
struct Word {
  std::string letters;

  Word() = default;
  explicit Word(std::string s) : letters(std::move(s)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  std::uint8_t operator[](std::size_t k) const {
    return static_cast<std::uint8_t>(letters[k]);
  }
  void push_back(std::uint8_t r) { letters.push_back(static_cast<char>(r)); }
  Word operator+(const Word& rhs) const { return Word(letters + rhs.letters); }

  friend auto operator<=>(const Word&, const Word&) = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::string>{}(w.letters);
  }
};

/// Normal-form polynomial: canonical word -> nonzero coefficient.
class NCPoly {
 public:
  using Terms = std::map<Word, VScalar>;

  NCPoly() = default;
  explicit NCPoly(const VScalar& c);
  NCPoly(Word w, const VScalar& c);

  static NCPoly one() { return NCPoly(VScalar(1)); }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Adds c*w without normalizing w; callers guarantee w is canonical.
  void add_term(const Word& w, const VScalar& c);
  VScalar coeff(const Word& w) const;
  /// Constant term.
  VScalar scalar_part() const { return coeff(Word()); }

  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const VScalar& c);
  NCPoly operator-() const;
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const VScalar& c) { return a *= c; }
  friend NCPoly operator*(const VScalar& c, NCPoly a) { return a *= c; }

  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

struct RuleTerm {
  VScalar coeff;
  std::vector<GeneratorId> word;
};

/// Relation callback: given an out-of-order pair (hi, lo) with hi after lo in
/// the monomial order, returns the right-hand side of hi*lo.
using RuleFn = std::function<std::vector<RuleTerm>(const GeneratorId& hi, const GeneratorId& lo)>;

enum class Strategy {
  memo,       ///< insertion with memoized (word, generator) products
  leftmost,   ///< plain rewriting of the leftmost descent
  rightmost,  ///< plain rewriting of the rightmost descent
};

/// An algebra presented by an ordered alphabet and a quadratic rewrite table.
/// Immutable after construction apart from an internal, mutex-guarded cache.
class Algebra {
 public:
  Algebra(std::string name, std::vector<GeneratorId> alphabet, const RuleFn& rule);
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return alphabet_.size(); }
  const GeneratorId& generator(std::uint8_t rank) const { return alphabet_.at(rank); }
  const std::vector<GeneratorId>& alphabet() const noexcept { return alphabet_; }
  std::optional<std::uint8_t> rank_of(const GeneratorId& g) const;
  /// Throws ErrorKind::unknown_generator.
  std::uint8_t rank_or_throw(const GeneratorId& g) const;

  struct RankedTerm {
    VScalar coeff;
    Word word;
  };
  const std::vector<RankedTerm>& rule(std::uint8_t hi, std::uint8_t lo) const;

  bool is_canonical(const Word& w) const;

  NCPoly normalize(const Word& w, const VScalar& c = VScalar(1),
                   Strategy strategy = Strategy::memo) const;
  NCPoly normalize(const std::vector<GeneratorId>& word, const VScalar& c = VScalar(1),
                   Strategy strategy = Strategy::memo) const;
  NCPoly generator_poly(const GeneratorId& g) const;

  NCPoly multiply(const NCPoly& a, const NCPoly& b) const;
  NCPoly power(const NCPoly& a, int e) const;
  NCPoly commutator(const NCPoly& a, const NCPoly& b) const;

  /// Word -> canonical polynomial, multiplying letters in from the right.
  NCPoly multiply_word(const Word& canonical, const Word& tail) const;

  std::string render_word(const Word& w) const;
  std::string render(const NCPoly& p) const;

  /// Upper bound on rewrite steps for a single normalization.
  static constexpr std::size_t step_bound = 50'000'000;

 private:
  const NCPoly& times_generator(const Word& w, std::uint8_t g, int depth) const;
  NCPoly rewrite(const Word& w, const VScalar& c, Strategy strategy) const;

  std::string name_;
  std::vector<GeneratorId> alphabet_;
  std::map<GeneratorId, std::uint8_t> ranks_;
  std::vector<std::vector<RankedTerm>> rules_;  // index hi * size + lo

  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::string, std::unique_ptr<NCPoly>> cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

NCPoly nc_mul(const Algebra& alg, const NCPoly& a, const NCPoly& b);
/// Throws ErrorKind::non_canonical when `w` is not a normal-order word.
VScalar nc_coeff(const Algebra& alg, const NCPoly& p, const Word& w);

using Grading = std::function<std::vector<int>(const GeneratorId&)>;
std::map<std::vector<int>, NCPoly> nc_grade(const Algebra& alg, const NCPoly& p,
                                            const Grading& grading);

/// (number of holomorphic letters, number of antiholomorphic letters).
std::vector<int> bidegree_of(const GeneratorId& g);
std::pair<int, int> word_bidegree(const Algebra& alg, const Word& w);

}  // namespace qball

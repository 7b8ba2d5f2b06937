#pragma once

#include <map>
#include <optional>

#include "qball/scalar.hpp"

namespace qball {

/// Row echelon form over Q(v) for sparse vectors indexed by an ordered key.
/// Each stored row has pivot = its largest key with coefficient 1 and remembers
/// which combination of the inserted vectors (by label) produced it.
template <typename Key, typename Label = int>
class SpanSolver {
 public:
  using Vec = std::map<Key, VScalar>;
  using Combo = std::map<Label, VScalar>;

  /// Inserts a vector; returns false when it was already in the span.
  bool add(Vec v, const Label& label) {
    Combo combo{{label, VScalar(1)}};
    reduce(v, combo);
    if (v.empty()) return false;
    auto pivot = std::prev(v.end());
    const VScalar inv = pivot->second.inverse();
    for (auto& [k, c] : v) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    const Key key = pivot->first;
    rows_.emplace(key, Row{std::move(v), std::move(combo)});
    return true;
  }

  /// Reduces v in place modulo the span; `combo` accumulates minus the
  /// multiples of inserted vectors that were subtracted.
  void reduce(Vec& v, Combo& combo) const {
    std::optional<Key> bound;
    while (true) {
      auto it = bound ? v.lower_bound(*bound) : v.end();
      if (it == v.begin()) break;
      --it;
      const Key k = it->first;
      bound = k;
      auto row = rows_.find(k);
      if (row == rows_.end()) continue;
      const VScalar c = it->second;
      for (const auto& [rk, rc] : row->second.vec) accumulate(v, rk, -(c * rc));
      for (const auto& [lk, lc] : row->second.combo) accumulate(combo, lk, -(c * lc));
    }
  }

  Vec reduced(Vec v) const {
    Combo scratch;
    reduce(v, scratch);
    return v;
  }

  /// Coefficients x with sum x_label * inserted(label) == target, if any.
  std::optional<Combo> express(Vec target) const {
    Combo combo;
    reduce(target, combo);
    if (!target.empty()) return std::nullopt;
    for (auto& [k, c] : combo) c = -c;
    return combo;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    Vec vec;
    Combo combo;
  };

  template <typename M, typename K>
  static void accumulate(M& m, const K& k, const VScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }

  std::map<Key, Row> rows_;
};

}  // namespace qball

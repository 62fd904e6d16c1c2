#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace qb {

/// Incremental reduced row echelon form over an exact field F.
///
/// Vectors are sparse maps Key -> F. Each inserted vector is tagged with
/// its insertion index; the basis records, for every pivot row, the
/// combination of inserted vectors it equals. Inserting a vector that is
/// already in the span yields a kernel relation among inserted vectors.
template <class Key, class F>
class Echelon {
 public:
  using Vec = std::map<Key, F>;
  using Combo = std::map<std::size_t, F>;
  /// Chooses the pivot key of a nonzero vector.
  using PivotRule = std::function<Key(const Vec&)>;

  Echelon() : pivot_rule_([](const Vec& v) { return v.rbegin()->first; }) {}
  explicit Echelon(PivotRule rule) : pivot_rule_(std::move(rule)) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Inserts v. Returns the kernel combination if v depends on earlier inserts.
  std::optional<Combo> insert(const Vec& v) {
    Combo combo{{inserted_, F(1)}};
    ++inserted_;
    Vec r = v;
    reduce_in_place(r, &combo);
    if (r.empty()) return combo;
    Key p = pivot_rule_(r);
    const F inv = F(1) / r.at(p);
    for (auto& [k, c] : r) c = c * inv;
    for (auto& [k, c] : combo) c = c * inv;
    // Keep the basis fully reduced: clear p from every other row.
    for (auto& row : rows_) {
      auto it = row.vec.find(p);
      if (it == row.vec.end()) continue;
      const F f = it->second;
      axpy(row.vec, r, -f);
      axpy(row.combo, combo, -f);
    }
    rows_.push_back({p, std::move(r), std::move(combo)});
    return std::nullopt;
  }

  /// Residual of v after eliminating every pivot.
  Vec reduce(const Vec& v) const {
    Vec r = v;
    reduce_in_place(r, nullptr);
    return r;
  }

  bool contains(const Vec& v) const { return reduce(v).empty(); }

  /// Expresses v as a combination of inserted vectors, if it lies in the span.
  std::optional<Combo> coordinates(const Vec& v) const {
    Combo combo;
    Vec r = v;
    for (const auto& row : rows_) {
      auto it = r.find(row.pivot);
      if (it == r.end()) continue;
      const F f = it->second;
      axpy(r, row.vec, -f);
      axpy(combo, row.combo, f);
    }
    if (!r.empty()) return std::nullopt;
    return combo;
  }

  /// Pivot rows in insertion order of their pivots.
  struct Row {
    Key pivot;
    Vec vec;
    Combo combo;
  };
  const std::vector<Row>& rows() const { return rows_; }

 private:
  template <class M>
  static void axpy(M& y, const M& x, const F& a) {
    if (a == F(0)) return;
    for (const auto& [k, c] : x) {
      auto [it, inserted] = y.try_emplace(k, a * c);
      if (!inserted) {
        it->second = it->second + a * c;
        if (it->second == F(0)) y.erase(it);
      }
    }
  }

  void reduce_in_place(Vec& r, Combo* combo) const {
    for (const auto& row : rows_) {
      auto it = r.find(row.pivot);
      if (it == r.end()) continue;
      const F f = it->second;
      axpy(r, row.vec, -f);
      if (combo) axpy(*combo, row.combo, -f);
    }
  }

  PivotRule pivot_rule_;
  std::vector<Row> rows_;
  std::size_t inserted_ = 0;
};

/// Kernel basis of the linear map sending unknown i to images[i].
template <class Key, class F>
std::vector<std::map<std::size_t, F>> kernel(const std::vector<std::map<Key, F>>& images) {
  Echelon<Key, F> e;
  std::vector<std::map<std::size_t, F>> out;
  for (const auto& v : images)
    if (auto k = e.insert(v)) out.push_back(std::move(*k));
  return out;
}

template <class Key, class F>
std::size_t rank(const std::vector<std::map<Key, F>>& vectors) {
  Echelon<Key, F> e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

}  // namespace qb

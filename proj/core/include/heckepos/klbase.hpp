#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "heckepos/coxeter.hpp"
#include "heckepos/q_poly.hpp"

namespace heckepos {

struct MuEdge {
  ElementId lower;
  Coeff mu;
  bool operator==(const MuEdge&) const = default;
};

/// Pairs x <= y with LR(x) containing LR(y), where of y and y^-1 only the
/// one with the smaller id is kept (the same reduction the KL table uses).
class ExtremalPairs {
 public:
  ExtremalPairs(const GroupTable& g, const BruhatIdeals& ideals);

  std::size_t count() const { return count_; }
  /// Count without the inverse reduction.
  std::size_t count_all() const { return count_all_; }

  /// Calls f(x, y) for every representative, grouped by increasing y.
  template <typename F>
  void for_each(F&& f) const;

  static bool is_representative(const GroupTable& g, ElementId x, ElementId y);

 private:
  const GroupTable& g_;
  const BruhatIdeals& ideals_;
  std::size_t count_ = 0;
  std::size_t count_all_ = 0;
};

/// Kazhdan-Lusztig polynomials of a finite Coxeter group, memoized at
/// extremal pairs (x, y) with y <= y^-1 (as ids). All other pairs are reduced
/// on lookup.
class KLStore {
 public:
  explicit KLStore(const GroupTable& g);

  const GroupTable& group() const { return g_; }
  const BruhatIdeals& ideals() const { return ideals_; }

  /// P_{x,y}; zero unless x <= y.
  const QPoly& polynomial(ElementId x, ElementId y) const;
  Coeff mu(ElementId x, ElementId y) const;
  /// Nonzero mu(z, y) for z < y, sorted by z.
  std::span<const MuEdge> mu_row(ElementId y) const { return mu_rows_[y]; }

  bool is_canonical(ElementId y) const { return y <= g_.inverse(y); }
  /// Stored extremal x for a canonical y, ascending.
  std::span<const ElementId> extremal_row(ElementId y) const { return rows_[y].xs; }
  const QPoly& stored(ElementId y, std::size_t i) const { return pool_[rows_[y].handles[i]]; }
  std::size_t num_stored_pairs() const;

  /// Every distinct polynomial created, in creation order ("0" and "1" first).
  const std::vector<QPoly>& distinct_polynomials() const { return pool_; }

  /// Moves x up along descents of y that x lacks, until (x, y) is extremal.
  ElementId extremalize(ElementId x, ElementId y) const;

  /// Pairs whose polynomial had a negative coefficient or broke the degree
  /// bound at creation time.
  const std::vector<std::pair<ElementId, ElementId>>& negative_pairs() const { return negative_; }
  const std::vector<std::pair<ElementId, ElementId>>& degree_violations() const { return degree_violations_; }

 private:
  struct Row {
    std::vector<ElementId> xs;
    std::vector<std::uint32_t> handles;
  };

  std::uint32_t intern(QPoly p);
  void compute_row(ElementId y);
  void fill_mu_rows(ElementId y);

  const GroupTable& g_;
  BruhatIdeals ideals_;
  std::vector<Row> rows_;
  std::vector<std::vector<MuEdge>> mu_rows_;
  std::vector<QPoly> pool_;
  std::unordered_map<QPoly, std::uint32_t, QPolyHash> pool_index_;
  std::vector<std::pair<ElementId, ElementId>> negative_;
  std::vector<std::pair<ElementId, ElementId>> degree_violations_;
};

inline const QPoly& kl_polynomial(const KLStore& store, ElementId x, ElementId y) { return store.polynomial(x, y); }
inline Coeff mu(const KLStore& store, ElementId x, ElementId y) { return store.mu(x, y); }

struct WEdge {
  ElementId lower;
  ElementId upper;
  Coeff mu;
  bool operator==(const WEdge&) const = default;
};

/// Descent sets and mu-labelled edges. This is all the structure-constant
/// recursion needs.
class WGraph {
 public:
  WGraph(const GroupTable& g, std::vector<std::vector<MuEdge>> down);

  const GroupTable& group() const { return g_; }
  std::size_t size() const { return down_.size(); }
  GeneratorMask left_descents(ElementId x) const { return g_.left_descents(x); }
  GeneratorMask right_descents(ElementId x) const { return g_.right_descents(x); }
  /// Edges {z, u} with z < u, as (z, mu).
  std::span<const MuEdge> down(ElementId u) const { return down_[u]; }
  Coeff mu(ElementId z, ElementId u) const;
  /// Edges sorted by (lower, upper).
  std::vector<WEdge> edges() const;
  std::size_t num_edges() const;
  /// Edges whose label is below 1; empty whenever P1 holds.
  const std::vector<WEdge>& nonpositive_edges() const { return nonpositive_; }

 private:
  const GroupTable& g_;
  std::vector<std::vector<MuEdge>> down_;
  std::vector<WEdge> nonpositive_;
};

WGraph build_wgraph(const KLStore& store);

template <typename F>
void ExtremalPairs::for_each(F&& f) const {
  for (ElementId y = 0; y < g_.size(); ++y) {
    const std::uint64_t lry = g_.lr_descents(y);
    ideals_.for_each_below(y, [&](ElementId x) {
      if ((g_.lr_descents(x) & lry) == lry && is_representative(g_, x, y)) f(x, y);
    });
  }
}

}  // namespace heckepos

#include "heckepos/klbase.hpp"

#include <algorithm>

#include "heckepos/error.hpp"

namespace heckepos {

ExtremalPairs::ExtremalPairs(const GroupTable& g, const BruhatIdeals& ideals) : g_(g), ideals_(ideals) {
  for (ElementId y = 0; y < g.size(); ++y) {
    const std::uint64_t lry = g.lr_descents(y);
    ideals.for_each_below(y, [&](ElementId x) {
      if ((g.lr_descents(x) & lry) != lry) return;
      ++count_all_;
      if (is_representative(g, x, y)) ++count_;
    });
  }
}

bool ExtremalPairs::is_representative(const GroupTable& g, ElementId x, ElementId y) {
  (void)x;
  return y <= g.inverse(y);
}

KLStore::KLStore(const GroupTable& g) : g_(g), ideals_(g), rows_(g.size()), mu_rows_(g.size()) {
  intern(QPoly());
  intern(QPoly::one());
  for (ElementId y = 0; y < g.size(); ++y) {
    if (!is_canonical(y)) continue;
    compute_row(y);
    fill_mu_rows(y);
  }
}

std::uint32_t KLStore::intern(QPoly p) {
  auto [it, inserted] = pool_index_.emplace(p, static_cast<std::uint32_t>(pool_.size()));
  if (inserted) pool_.push_back(std::move(p));
  return it->second;
}

ElementId KLStore::extremalize(ElementId x, ElementId y) const {
  while (true) {
    if (GeneratorMask m = g_.left_descents(y) & ~g_.left_descents(x); m != 0) {
      x = g_.left_mult(first_generator(m), x);
      continue;
    }
    if (GeneratorMask m = g_.right_descents(y) & ~g_.right_descents(x); m != 0) {
      x = g_.right_mult(x, first_generator(m));
      continue;
    }
    return x;
  }
}

const QPoly& KLStore::polynomial(ElementId x, ElementId y) const {
  if (!ideals_.leq(x, y)) return pool_[0];
  x = extremalize(x, y);
  if (x == y) return pool_[1];
  if (!is_canonical(y)) {
    x = g_.inverse(x);
    y = g_.inverse(y);
  }
  const Row& row = rows_[y];
  auto it = std::lower_bound(row.xs.begin(), row.xs.end(), x);
  if (it == row.xs.end() || *it != x) throw Error("extremal pair missing from the KL table");
  return pool_[row.handles[static_cast<std::size_t>(it - row.xs.begin())]];
}

Coeff KLStore::mu(ElementId x, ElementId y) const {
  const auto row = mu_row(y);
  auto it = std::lower_bound(row.begin(), row.end(), x, [](const MuEdge& e, ElementId v) { return e.lower < v; });
  return it != row.end() && it->lower == x ? it->mu : 0;
}

std::size_t KLStore::num_stored_pairs() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.xs.size();
  return n;
}

void KLStore::compute_row(ElementId y) {
  Row& row = rows_[y];
  const std::uint64_t lry = g_.lr_descents(y);
  ideals_.for_each_below(y, [&](ElementId x) {
    if ((g_.lr_descents(x) & lry) == lry) row.xs.push_back(x);
  });
  row.handles.reserve(row.xs.size());
  if (y == kIdentity) {
    row.handles.push_back(1);
    return;
  }
  const Generator s = first_generator(g_.left_descents(y));
  const ElementId ys = g_.left_mult(s, y);
  const int ly = g_.length(y);
  for (ElementId x : row.xs) {
    if (x == y) {
      row.handles.push_back(1);
      continue;
    }
    // s is a left descent of x as well, so c = 1 in the classical recursion.
    QPoly p = polynomial(g_.left_mult(s, x), ys);
    p.add_scaled(polynomial(x, ys), 1, 1);
    for (const MuEdge& e : mu_rows_[ys]) {
      if (!g_.is_left_descent(s, e.lower) || !ideals_.leq(x, e.lower)) continue;
      p.add_scaled(polynomial(x, e.lower), -e.mu, (ly - g_.length(e.lower)) / 2);
    }
    if (!p.all_nonnegative()) negative_.emplace_back(x, y);
    if (2 * p.degree() > ly - g_.length(x) - 1) degree_violations_.emplace_back(x, y);
    row.handles.push_back(intern(std::move(p)));
  }
}

void KLStore::fill_mu_rows(ElementId y) {
  const int ly = g_.length(y);
  std::vector<MuEdge> mus;
  if (ly > 0) {
    for (ElementId z = g_.length_begin(ly - 1); z < g_.length_begin(ly); ++z)
      if (ideals_.leq(z, y)) mus.push_back({z, 1});
  }
  const Row& row = rows_[y];
  for (std::size_t i = 0; i < row.xs.size(); ++i) {
    const int diff = ly - g_.length(row.xs[i]);
    if (diff < 3 || diff % 2 == 0) continue;
    const Coeff m = pool_[row.handles[i]].coefficient((diff - 1) / 2);
    if (m != 0) mus.push_back({row.xs[i], m});
  }
  std::sort(mus.begin(), mus.end(), [](const MuEdge& a, const MuEdge& b) { return a.lower < b.lower; });
  mu_rows_[y] = mus;
  const ElementId yi = g_.inverse(y);
  if (yi != y) {
    for (auto& e : mus) e.lower = g_.inverse(e.lower);
    std::sort(mus.begin(), mus.end(), [](const MuEdge& a, const MuEdge& b) { return a.lower < b.lower; });
    mu_rows_[yi] = std::move(mus);
  }
}

WGraph::WGraph(const GroupTable& g, std::vector<std::vector<MuEdge>> down) : g_(g), down_(std::move(down)) {
  if (down_.size() != g.size()) throw InvalidIndex("W-graph size does not match the group");
  for (ElementId u = 0; u < down_.size(); ++u)
    for (const MuEdge& e : down_[u]) {
      if ((g.length(u) - g.length(e.lower)) % 2 == 0) throw Error("mu edge between lengths of equal parity");
      if (e.mu < 1) nonpositive_.push_back({e.lower, u, e.mu});
    }
}

Coeff WGraph::mu(ElementId z, ElementId u) const {
  const auto& row = down_[u];
  auto it = std::lower_bound(row.begin(), row.end(), z, [](const MuEdge& e, ElementId v) { return e.lower < v; });
  return it != row.end() && it->lower == z ? it->mu : 0;
}

std::vector<WEdge> WGraph::edges() const {
  std::vector<WEdge> out;
  for (ElementId u = 0; u < down_.size(); ++u)
    for (const MuEdge& e : down_[u]) out.push_back({e.lower, u, e.mu});
  std::sort(out.begin(), out.end(), [](const WEdge& a, const WEdge& b) {
    return std::pair(a.lower, a.upper) < std::pair(b.lower, b.upper);
  });
  return out;
}

std::size_t WGraph::num_edges() const {
  std::size_t n = 0;
  for (const auto& r : down_) n += r.size();
  return n;
}

WGraph build_wgraph(const KLStore& store) {
  std::vector<std::vector<MuEdge>> down(store.group().size());
  for (ElementId u = 0; u < down.size(); ++u) {
    auto row = store.mu_row(u);
    down[u].assign(row.begin(), row.end());
  }
  return WGraph(store.group(), std::move(down));
}

}  // namespace heckepos

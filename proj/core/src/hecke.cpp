#include "heckepos/hecke.hpp"

#include <algorithm>

#include "heckepos/error.hpp"

namespace heckepos {

TCombo t_mult_gen(const GroupTable& g, Generator s, const TCombo& u) {
  TCombo out;
  const LaurentPoly gap = LaurentPoly::v_minus_vinv();
  for (const auto& [y, c] : u.terms()) {
    const ElementId sy = g.left_mult(s, y);
    out.add(sy, c);
    if (g.is_left_descent(s, y)) out.add(y, c * gap);
  }
  return out;
}

TCombo t_mult_elem(const GroupTable& g, ElementId x, const TCombo& u) {
  auto w = g.word(x);
  TCombo out = u;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = t_mult_gen(g, *it, out);
  return out;
}

TCombo t_product(const GroupTable& g, const TCombo& a, const TCombo& b) {
  TCombo out;
  for (const auto& [x, c] : a.terms()) out.add_scaled(t_mult_elem(g, x, b), c);
  return out;
}

TInverseTable::TInverseTable(const GroupTable& g) : g_(g), table_(g.size()), done_(g.size(), false) {
  table_[kIdentity] = TCombo::basis(kIdentity);
  done_[kIdentity] = true;
}

const TCombo& TInverseTable::inverse(ElementId w) {
  if (done_[w]) return table_[w];
  // w = w' s with s a right descent: t_w^-1 = t_s^-1 t_{w'}^-1, t_s^-1 = t_s - (v - v^-1).
  const Generator s = first_generator(g_.right_descents(w));
  const TCombo& prev = inverse(g_.right_mult(w, s));
  TCombo out = t_mult_gen(g_, s, prev);
  out.add_scaled(prev, -LaurentPoly::v_minus_vinv());
  table_[w] = std::move(out);
  done_[w] = true;
  return table_[w];
}

TCombo bar_h(TInverseTable& inverses, const GroupTable& g, const TCombo& u) {
  TCombo out;
  for (const auto& [y, c] : u.terms()) out.add_scaled(inverses.inverse(g.inverse(y)), bar(c));
  return out;
}

TCombo bar_h(const GroupTable& g, const TCombo& u) {
  TInverseTable inverses(g);
  return bar_h(inverses, g, u);
}

TCombo c_in_t_basis(const KLStore& store, ElementId y) {
  const GroupTable& g = store.group();
  TCombo out;
  store.ideals().for_each_below(y, [&](ElementId x) {
    out.add(x, store.polynomial(x, y).to_laurent().shifted(g.length(x) - g.length(y)));
  });
  return out;
}

TCombo c_to_t(const KLStore& store, const CCombo& u) {
  TCombo out;
  for (const auto& [z, c] : u.terms()) out.add_scaled(c_in_t_basis(store, z), c);
  return out;
}

TCombo KLBasisOracle::c(ElementId y) {
  // Writing c_y = sum p_x t_x and bar(t_w) = sum_x r_{x,w} t_x, bar-invariance
  // reads p_x - bar(p_x) = sum_{w != x} bar(p_w) r_{x,w}, and r_{x,w} = 0
  // unless l(x) < l(w) or x = w. The right side is accumulated in `image`.
  TCombo result = TCombo::basis(y);
  TCombo image = inverses_.inverse(g_.inverse(y));
  for (int len = g_.length(y) - 1; len >= 0; --len) {
    std::vector<std::pair<ElementId, LaurentPoly>> found;
    for (ElementId x = g_.length_begin(len); x < g_.length_begin(len + 1); ++x) {
      const LaurentPoly rhs = image.coefficient(x);
      if (rhs.is_zero()) continue;
      if (bar(rhs) != -rhs) throw NoSolution("bar-invariance equation is not antisymmetric at " + std::to_string(x));
      std::vector<std::pair<int, Coeff>> negative;
      for (const auto& [e, c] : rhs.terms())
        if (e < 0) negative.emplace_back(e, c);
      found.emplace_back(x, LaurentPoly::from_terms(negative));
    }
    for (auto& [x, p] : found) {
      image.add_scaled(inverses_.inverse(g_.inverse(x)), bar(p));
      result.add(x, p);
    }
  }
  return result;
}

TCombo c_in_t_basis_oracle(const GroupTable& g, ElementId y) {
  KLBasisOracle oracle(g);
  return oracle.c(y);
}

CCombo c_mult_gen(const WGraph& wg, Generator s, const CCombo& u) {
  const GroupTable& g = wg.group();
  CCombo out;
  for (const auto& [x, c] : u.terms()) {
    if (g.is_left_descent(s, x)) {
      out.add(x, c * LaurentPoly::v_plus_vinv());
      continue;
    }
    out.add(g.left_mult(s, x), c);
    for (const MuEdge& e : wg.down(x))
      if (g.is_left_descent(s, e.lower)) out.add(e.lower, c * e.mu);
  }
  return out;
}

std::string to_string(DescentStrategy s) { return s == DescentStrategy::First ? "first" : "last"; }

DescentStrategy parse_strategy(std::string_view text) {
  if (text == "first") return DescentStrategy::First;
  if (text == "last") return DescentStrategy::Last;
  throw ParseError("unknown descent strategy '" + std::string(text) + "'");
}

std::pair<PolyStore::Handle, bool> PolyStore::intern(const SymLaurentPoly& p) {
  if (auto it = index_.find(p); it != index_.end()) return {it->second, false};
  const auto h = static_cast<Handle>(polys_.size());
  polys_.push_back(p);
  index_.emplace(p, h);
  return {h, true};
}

SymLaurentPoly HColumn::value(ElementId x, ElementId z) const {
  const auto& r = rows_[x];
  auto it = std::lower_bound(r.begin(), r.end(), z, [](const Entry& e, ElementId v) { return e.z < v; });
  return it != r.end() && it->z == z ? store_.get(it->handle) : SymLaurentPoly();
}

CCombo HColumn::product(ElementId x) const {
  CCombo out;
  for (const Entry& e : rows_[x]) out.add(e.z, store_.get(e.handle).to_laurent());
  return out;
}

std::pair<ElementId, ElementId> HColumn::locate(PolyStore::Handle h) const {
  for (ElementId x = 0; x < rows_.size(); ++x)
    for (const Entry& e : rows_[x])
      if (e.handle == h) return {x, e.z};
  throw InvalidIndex("handle not used in column");
}

HColumn column(const WGraph& wg, ElementId y, DescentStrategy strategy) {
  const GroupTable& g = wg.group();
  const std::size_t n = g.size();
  HColumn col;
  col.y_ = y;
  col.rows_.resize(n);

  std::vector<SymLaurentPoly> acc(n);
  std::vector<char> touched(n, 0);
  std::vector<ElementId> touched_list;
  ElementId current = kIdentity;
  // c == 0 selects multiplication by (v + v^-1).
  auto accumulate = [&](ElementId z, const SymLaurentPoly& p, Coeff c) {
    if (!touched[z]) {
      touched[z] = 1;
      touched_list.push_back(z);
    }
    try {
      if (c == 0) acc[z].add_times_v_plus_vinv(p);
      else acc[z].add_scaled(p, c);
    } catch (const OverflowError&) {
      throw OverflowError("coefficient overflow at (x, y, z) = (" + std::to_string(current) + ", " +
                          std::to_string(y) + ", " + std::to_string(z) + ")");
    }
  };
  auto store_row = [&](ElementId x) {
    std::sort(touched_list.begin(), touched_list.end());
    auto& row = col.rows_[x];
    row.reserve(touched_list.size());
    for (ElementId z : touched_list) {
      SymLaurentPoly& p = acc[z];
      if (!p.is_zero()) {
        auto [h, fresh] = col.store_.intern(p);
        if (fresh) {
          col.max_coeff_ = std::max(col.max_coeff_, p.max_coefficient());
          if (p.min_coefficient() < 0) col.negative_.push_back(h);
          if (!is_unimodal(qpoly_from_sym(p))) col.nonunimodal_.push_back(h);
        }
        row.push_back({z, h});
      }
      p.clear();
      touched[z] = 0;
    }
    touched_list.clear();
  };

  accumulate(y, SymLaurentPoly(1), 1);
  store_row(kIdentity);
  for (ElementId x = 1; x < n; ++x) {
    current = x;
    const GeneratorMask lx = g.left_descents(x);
    const Generator s = strategy == DescentStrategy::First ? first_generator(lx) : last_generator(lx);
    const ElementId sx = g.left_mult(s, x);
    // c_s (c_{sx} c_y)
    for (const HColumn::Entry& e : col.rows_[sx]) {
      const SymLaurentPoly& h = col.store_.get(e.handle);
      if (g.is_left_descent(s, e.z)) {
        accumulate(e.z, h, 0);
        continue;
      }
      accumulate(g.left_mult(s, e.z), h, 1);
      for (const MuEdge& m : wg.down(e.z))
        if (g.is_left_descent(s, m.lower)) accumulate(m.lower, h, m.mu);
    }
    // - sum mu(z, sx) c_z c_y
    for (const MuEdge& m : wg.down(sx)) {
      if (!g.is_left_descent(s, m.lower)) continue;
      for (const HColumn::Entry& e : col.rows_[m.lower]) accumulate(e.z, col.store_.get(e.handle), -m.mu);
    }
    store_row(x);
  }
  return col;
}

std::string format_product_line(const GroupTable& g, const HColumn& col, ElementId x) {
  std::string out = format_element(g, x) + ":";
  bool first = true;
  for (const HColumn::Entry& e : col.row(x)) {
    out += first ? " " : "; ";
    first = false;
    out += format_element(g, e.z) + " -> " + col.poly(e.handle).to_string();
  }
  return out;
}

std::string format_c_combo(const GroupTable& g, const CCombo& u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [z, p] : u.terms()) {
    if (!out.empty()) out += " + ";
    if (p != LaurentPoly(1)) out += "(" + p.to_string() + ") ";
    out += "c_" + format_element(g, z);
  }
  return out;
}

}  // namespace heckepos

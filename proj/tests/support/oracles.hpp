#pragma once
// Brute-force references. Slow on purpose: each one follows a definition
// directly and shares no code path with the library routine it checks.

#include <cstdint>
#include <map>
#include <vector>

#include "heckepos/coxeter.hpp"
#include "heckepos/hecke.hpp"
#include "heckepos/laurent_poly.hpp"

namespace oracle {
using namespace heckepos;

using Terms = std::map<int, Coeff>;

inline Terms terms_of(const LaurentPoly& p) {
  Terms t;
  for (auto [e, c] : p.terms()) t[e] = c;
  return t;
}

inline Terms mul(const Terms& a, const Terms& b) {
  Terms out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) out[ea + eb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// x <= y iff x is the product of some subword of a reduced word of y.
inline bool subword_leq(const GroupTable& g, ElementId x, ElementId y) {
  const auto w = g.word(y);
  const std::size_t n = w.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Generator> sub;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) sub.push_back(w[i]);
    if (g.element_from_word(sub) == x) return true;
  }
  return false;
}

struct ExtremalCounts {
  std::size_t all = 0;
  std::size_t reduced = 0;  // representatives with y <= y^-1
};

inline ExtremalCounts extremal_counts(const GroupTable& g) {
  ExtremalCounts c;
  for (ElementId y = 0; y < g.size(); ++y)
    for (ElementId x = 0; x < g.size(); ++x) {
      const auto lx = g.lr_descents(x), ly = g.lr_descents(y);
      if ((lx & ly) != ly || !subword_leq(g, x, y)) continue;
      ++c.all;
      if (y <= g.inverse(y)) ++c.reduced;
    }
  return c;
}

// c_x c_y rewritten in the c-basis by peeling the longest t-basis term, using
// only the t-basis product and the bar-invariance oracle.
inline std::map<ElementId, LaurentPoly> c_product(const GroupTable& g, KLBasisOracle& c, ElementId x, ElementId y) {
  TCombo rest = t_product(g, c.c(x), c.c(y));
  std::map<ElementId, LaurentPoly> out;
  while (!rest.is_zero()) {
    ElementId top = rest.terms().begin()->first;
    for (const auto& [z, p] : rest.terms())
      if (g.length(z) > g.length(top)) top = z;
    const LaurentPoly h = rest.coefficient(top);
    out[top] = h;
    rest.add_scaled(c.c(top), -h);
  }
  return out;
}

}  // namespace oracle

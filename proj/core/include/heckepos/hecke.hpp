#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "heckepos/coxeter.hpp"
#include "heckepos/klbase.hpp"
#include "heckepos/laurent_poly.hpp"
#include "heckepos/sym_laurent_poly.hpp"

namespace heckepos {

/// Sparse A-linear combination of basis elements indexed by group elements.
/// The tag keeps t-basis and c-basis coordinates apart.
template <typename Tag>
class Combo {
 public:
  Combo() = default;
  static Combo basis(ElementId x) {
    Combo c;
    c.terms_.emplace(x, LaurentPoly(1));
    return c;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<ElementId, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coefficient(ElementId x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  /// this[x] += p
  void add(ElementId x, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(x, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  /// this += p * other
  void add_scaled(const Combo& other, const LaurentPoly& p) {
    for (const auto& [x, c] : other.terms_) add(x, c * p);
  }
  Combo& operator+=(const Combo& other) {
    for (const auto& [x, c] : other.terms_) add(x, c);
    return *this;
  }
  Combo& operator-=(const Combo& other) {
    for (const auto& [x, c] : other.terms_) add(x, -c);
    return *this;
  }
  bool operator==(const Combo&) const = default;

 private:
  std::map<ElementId, LaurentPoly> terms_;
};

struct TBasisTag;
struct CBasisTag;
using TCombo = Combo<TBasisTag>;
using CCombo = Combo<CBasisTag>;

/// t_s * u
TCombo t_mult_gen(const GroupTable& g, Generator s, const TCombo& u);
/// t_x * u
TCombo t_mult_elem(const GroupTable& g, ElementId x, const TCombo& u);
/// a * b in the t-basis.
TCombo t_product(const GroupTable& g, const TCombo& a, const TCombo& b);

/// Inverses t_w^-1 in the t-basis, built on demand by induction on length.
class TInverseTable {
 public:
  explicit TInverseTable(const GroupTable& g);
  const TCombo& inverse(ElementId w);

 private:
  const GroupTable& g_;
  std::vector<TCombo> table_;
  std::vector<bool> done_;
};

/// The bar involution of the Hecke algebra: v -> v^-1, t_y -> t_{y^-1}^-1.
TCombo bar_h(const GroupTable& g, const TCombo& u);
TCombo bar_h(TInverseTable& inverses, const GroupTable& g, const TCombo& u);

/// c_y = t_y + sum_{x<y} p_{x,y} t_x from the stored KL polynomials.
TCombo c_in_t_basis(const KLStore& store, ElementId y);
/// Expands a c-basis combination into the t-basis.
TCombo c_to_t(const KLStore& store, const CCombo& u);

/// c_y from its defining properties alone (bar-invariance plus the degree
/// condition), solved triangularly in decreasing length. Independent of the
/// KL recursion and of the Bruhat order.
class KLBasisOracle {
 public:
  explicit KLBasisOracle(const GroupTable& g) : g_(g), inverses_(g) {}
  TCombo c(ElementId y);

 private:
  const GroupTable& g_;
  TInverseTable inverses_;
};

TCombo c_in_t_basis_oracle(const GroupTable& g, ElementId y);

/// c_s * u, read off the W-graph.
CCombo c_mult_gen(const WGraph& wg, Generator s, const CCombo& u);

enum class DescentStrategy { First, Last };

std::string to_string(DescentStrategy s);
DescentStrategy parse_strategy(std::string_view text);

/// Interning store: one shared instance per distinct polynomial.
class PolyStore {
 public:
  using Handle = std::uint32_t;

  /// Returns the handle and whether the polynomial was new.
  std::pair<Handle, bool> intern(const SymLaurentPoly& p);
  const SymLaurentPoly& get(Handle h) const { return polys_[h]; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<SymLaurentPoly>& polynomials() const { return polys_; }

 private:
  std::vector<SymLaurentPoly> polys_;
  std::unordered_map<SymLaurentPoly, Handle, SymLaurentPolyHash> index_;
};

/// Structure constants h_{x,y,z} for a fixed y: for each x, the nonzero
/// coefficients of c_x c_y as (z, handle) sorted by z.
class HColumn {
 public:
  struct Entry {
    ElementId z;
    PolyStore::Handle handle;
  };

  ElementId y() const { return y_; }
  std::size_t size() const { return rows_.size(); }
  std::span<const Entry> row(ElementId x) const { return rows_[x]; }
  const SymLaurentPoly& poly(PolyStore::Handle h) const { return store_.get(h); }
  const PolyStore& store() const { return store_; }
  SymLaurentPoly value(ElementId x, ElementId z) const;
  /// Row x as a c-basis combination.
  CCombo product(ElementId x) const;

  /// Largest coefficient over all stored polynomials.
  Coeff max_coefficient() const { return max_coeff_; }
  /// Handles flagged when first interned.
  const std::vector<PolyStore::Handle>& negative_handles() const { return negative_; }
  const std::vector<PolyStore::Handle>& nonunimodal_handles() const { return nonunimodal_; }
  /// Some (x, z) holding the handle; used for counterexample reports.
  std::pair<ElementId, ElementId> locate(PolyStore::Handle h) const;

 private:
  friend HColumn column(const WGraph& wg, ElementId y, DescentStrategy strategy);

  ElementId y_ = 0;
  std::vector<std::vector<Entry>> rows_;
  PolyStore store_;
  Coeff max_coeff_ = 0;
  std::vector<PolyStore::Handle> negative_;
  std::vector<PolyStore::Handle> nonunimodal_;
};

/// Computes c_x c_y for every x by induction on l(x):
///   c_x c_y = c_s (c_{sx} c_y) - sum_{z < sx, sz < z} mu(z, sx) c_z c_y.
/// Positivity and unimodality of each new polynomial are checked as it is stored.
HColumn column(const WGraph& wg, ElementId y, DescentStrategy strategy = DescentStrategy::First);

inline SymLaurentPoly h_value(const HColumn& col, ElementId x, ElementId z) { return col.value(x, z); }

/// "x: z1 -> p1; z2 -> p2" with elements in the format_element style.
std::string format_product_line(const GroupTable& g, const HColumn& col, ElementId x);
/// "(v^-1+v) c_1(1) + c_3(12)"; unit coefficients are elided, zero prints as "0".
std::string format_c_combo(const GroupTable& g, const CCombo& u);

}  // namespace heckepos

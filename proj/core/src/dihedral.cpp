#include "heckepos/dihedral.hpp"

#include <algorithm>
#include <cstdlib>

#include "heckepos/error.hpp"
#include "heckepos/hecke.hpp"
#include "heckepos/klbase.hpp"

namespace heckepos::dihedral {
namespace {

int other(int g) { return 3 - g; }

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidIndex(what);
}

// c_r acting on a row whose entries all lack r as a left descent: c_j -> c_{j-1} + c_{j+1},
// dropping j-1 = 0 and, for a finite strip, anything at or beyond `limit`.
std::vector<Coeff> shift(const std::vector<Coeff>& row, std::size_t limit) {
  std::vector<Coeff> out(limit, 0);
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    if (j >= 2) out[j - 1] = checked_add(out[j - 1], row[j]);
    if (j + 1 < limit) out[j + 1] = checked_add(out[j + 1], row[j]);
  }
  return out;
}

}  // namespace

DihedralWord ending_with(int last, int len) {
  require(last == 1 || last == 2, "dihedral generator must be 1 or 2");
  require(len >= 0, "dihedral word length must be non-negative");
  return {len % 2 == 1 ? last : other(last), len};
}

void DihedralProduct::add(int j, const SymLaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(j, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string DihedralProduct::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [j, p] : terms) {
    if (!out.empty()) out += " + ";
    if (p.degree() == 0) {
      if (p.coefficient(0) != 1) out += std::to_string(p.coefficient(0));
    } else {
      out += "(" + p.to_string() + ")";
    }
    out += "c_" + std::to_string(j);
  }
  return out;
}

std::string to_string(Side side) { return side == Side::Same ? "same" : "opposite"; }

Side parse_side(std::string_view text) {
  if (text == "same") return Side::Same;
  if (text == "opposite") return Side::Opposite;
  throw ParseError("unknown side '" + std::string(text) + "'");
}

DihedralWord left_factor(Side side, int i, int k) {
  const int s = right_cell_word(k).first;
  return ending_with(side == Side::Same ? other(s) : s, i);
}

DihedralProduct infinite_product(Side side, int i, int k) {
  require(i > 0 && k > 0, "dihedral indices must be positive");
  DihedralProduct out;
  if (side == Side::Same) {
    const int lo = std::abs(k - i), hi = k + i;
    for (int j = lo; j <= hi; j += 2) {
      if (j == 0) continue;
      out.add(j, SymLaurentPoly(j == lo || j == hi ? 1 : 2));
    }
  } else {
    for (int j = std::abs(k - i) + 1; j <= k + i - 1; j += 2) out.add(j, SymLaurentPoly::v_plus_vinv());
  }
  return out;
}

SymLaurentPoly longest_multiplicity(int d) {
  require(d >= 0, "multiplicity degree must be non-negative");
  std::vector<Coeff> half(static_cast<std::size_t>(d / 2 + 1), 2);
  half.back() = 1;
  return SymLaurentPoly(d % 2, std::move(half));
}

Coeff TriangleTable::at(int i, int j) const {
  if (i < 1 || i > static_cast<int>(rows.size()) || j < 1 || j > columns) return 0;
  return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

std::string TriangleTable::render(int k) const {
  auto label = [k](int j) {
    if (j == k) return std::string("k");
    return "k" + std::string(j > k ? "+" : "-") + std::to_string(std::abs(j - k));
  };
  const std::size_t width = 5;
  auto pad = [width](std::string s) { return std::string(width > s.size() ? width - s.size() : 0, ' ') + s; };
  std::string out = std::string(8, ' ');
  for (int j = 1; j <= columns; ++j) out += pad(label(j));
  out += "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string head = "i=" + std::to_string(i + 1);
    out += head + std::string(8 - std::min<std::size_t>(8, head.size()), ' ');
    for (Coeff c : rows[i]) out += pad(c == 0 ? "." : std::to_string(c));
    out += "\n";
  }
  return out;
}

TriangleTable triangle_table(std::optional<int> m, int k, Side side, int rows) {
  require(rows >= 1, "triangle table needs at least one row");
  require(k > 0, "k must be positive");
  if (m) require(*m >= 2 && k <= *m, "finite table needs 2 <= m and k <= m");
  // Index j of the working rows is the coefficient of c_j; slot 0 is unused.
  const std::size_t limit = m ? static_cast<std::size_t>(*m) : static_cast<std::size_t>(k + rows + 2);
  std::vector<Coeff> seed(limit, 0);
  if (static_cast<std::size_t>(k) < limit) seed[static_cast<std::size_t>(k)] = 1;

  std::vector<std::vector<Coeff>> r;  // r[i] is row i
  if (side == Side::Same) {
    r.push_back(seed);
    r.push_back(shift(r[0], limit));
    if (rows >= 2) r.push_back(shift(r[1], limit));
  } else {
    r.push_back(std::vector<Coeff>(limit, 0));
    r.push_back(seed);
    if (rows >= 2) r.push_back(shift(r[1], limit));
  }
  for (int i = 3; i <= rows; ++i) {
    auto next = shift(r[static_cast<std::size_t>(i - 1)], limit);
    const auto& back = r[static_cast<std::size_t>(i - 2)];
    for (std::size_t j = 0; j < limit; ++j) next[j] = checked_sub(next[j], back[j]);
    r.push_back(std::move(next));
  }
  TriangleTable t;
  t.columns = m ? *m - 1 : k + rows;
  for (int i = 1; i <= rows; ++i) {
    const auto& row = r[static_cast<std::size_t>(i)];
    std::vector<Coeff> out(static_cast<std::size_t>(t.columns), 0);
    for (int j = 1; j <= t.columns && static_cast<std::size_t>(j) < row.size(); ++j)
      out[static_cast<std::size_t>(j - 1)] = row[static_cast<std::size_t>(j)];
    t.rows.push_back(std::move(out));
  }
  return t;
}

DihedralProduct finite_product(int m, Side side, int i, int k) {
  require(m >= 2, "dihedral order parameter m must be at least 2");
  require(i > 0 && i <= m && k > 0 && k <= m, "dihedral indices must lie in 1..m");
  DihedralProduct out;
  const TriangleTable strip = triangle_table(m, k, side, i);
  const SymLaurentPoly unit = side == Side::Same ? SymLaurentPoly(1) : SymLaurentPoly::v_plus_vinv();
  for (int j = 1; j < m; ++j) {
    const Coeff c = strip.at(i, j);
    if (c != 0) out.add(j, SymLaurentPoly().add_scaled(unit, c));
  }
  // The longest element enters at row m - k (Same) or m - k + 1 (Opposite).
  const int d = k + i - m;
  if (d >= (side == Side::Same ? 0 : 1)) out.add(m, longest_multiplicity(d));
  return out;
}

DihedralProduct fold_to_finite(int m, const DihedralProduct& infinite) {
  require(m >= 2, "dihedral order parameter m must be at least 2");
  std::map<int, LaurentPoly> work;
  for (const auto& [j, p] : infinite.terms) work[j] = p.to_laurent();
  for (auto it = work.rbegin(); it != work.rend() && it->first > m; ++it) {
    const int d = it->first - m;
    const LaurentPoly a = it->second;
    require(m - d >= 0, "infinite expression reaches beyond 2m");
    if (m - d > 0) work[m - d] -= a;
    work[m] += a * LaurentPoly::from_terms({{d, 1}, {-d, 1}});
    it->second = LaurentPoly();
  }
  DihedralProduct out;
  for (const auto& [j, p] : work)
    if (!p.is_zero()) out.add(j, sym_from_laurent(p));
  return out;
}

ElementId element_of(const GroupTable& g, const DihedralWord& w) {
  std::vector<Generator> word;
  int letter = w.first;
  for (int i = 0; i < w.len; ++i) {
    word.push_back(letter - 1);
    letter = other(letter);
  }
  return g.element_from_word(word);
}

CheckReport crosscheck_dihedral(int m) {
  require(m >= 2 && m <= 30, "crosscheck supports 2 <= m <= 30");
  const GroupTable g = build_group("I2(" + std::to_string(m) + ")");
  const KLStore store(g);
  const WGraph wg = build_wgraph(store);
  CheckReport r("dihedral-crosscheck", g.name());
  for (int k = 1; k <= m; ++k) {
    const ElementId y = element_of(g, right_cell_word(k));
    const HColumn col = column(wg, y);
    for (Side side : {Side::Same, Side::Opposite}) {
      for (int i = 1; i <= m; ++i) {
        const ElementId x = element_of(g, left_factor(side, i, k));
        const DihedralProduct closed = finite_product(m, side, i, k);
        CCombo expected;
        for (const auto& [j, p] : closed.terms) expected.add(element_of(g, right_cell_word(j)), p.to_laurent());
        r.count("products");
        if (col.product(x) != expected) {
          std::string got;
          for (const auto& e : col.row(x)) got += " " + format_element(g, e.z) + "->" + col.poly(e.handle).to_string();
          r.fail(to_string(side) + " i=" + std::to_string(i) + " k=" + std::to_string(k) + ": closed form " +
                 closed.to_string() + ", engine" + got);
        }
      }
    }
  }
  return r;
}

}  // namespace heckepos::dihedral

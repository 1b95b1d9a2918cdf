#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckepos/checks.hpp"
#include "heckepos/coxeter.hpp"
#include "heckepos/sym_laurent_poly.hpp"

namespace heckepos::dihedral {

/// [first, other, len>: the alternating word of `len` letters starting with
/// generator `first` (1 or 2). Length 0 is the identity.
struct DihedralWord {
  int first = 1;
  int len = 0;
  bool operator==(const DihedralWord&) const = default;
};

/// The alternating word of length `len` whose last letter is `last`.
DihedralWord ending_with(int last, int len);
/// <j,1,2], the basis elements spanning every product below.
inline DihedralWord right_cell_word(int j) { return ending_with(2, j); }

/// Coefficients of c_{<j,1,2]}, keyed by j > 0.
struct DihedralProduct {
  std::map<int, SymLaurentPoly> terms;

  void add(int j, const SymLaurentPoly& p);
  bool operator==(const DihedralProduct&) const = default;
  std::string to_string() const;
};

/// Which factor: with y = c_{<k,1,2]} starting with s and t the other
/// generator, Same is c_{<i,s,t]} (ends in t) and Opposite is c_{<i,t,s]} (ends in s).
enum class Side { Same, Opposite };
std::string to_string(Side side);
Side parse_side(std::string_view text);

/// Left factor of the product for the given side.
DihedralWord left_factor(Side side, int i, int k);

/// Closed form in the infinite dihedral group.
DihedralProduct infinite_product(Side side, int i, int k);

/// v^d + 2v^(d-2) + ... + 2v^(2-d) + v^-d, the multiplicity of the longest element.
SymLaurentPoly longest_multiplicity(int d);

/// Integer row table of the product recursion, restricted to the strip
/// 0 < j < m (or j > 0 when m is empty). Entry [i-1][j-1] is the coefficient
/// of c_j in row i; for Opposite it is the multiple of (v + v^-1).
struct TriangleTable {
  int columns = 0;
  std::vector<std::vector<Coeff>> rows;

  Coeff at(int i, int j) const;
  /// Dot-matrix layout with column headers relative to k.
  std::string render(int k) const;
};
TriangleTable triangle_table(std::optional<int> m, int k, Side side, int rows);

/// Product in the dihedral group of order 2m: strip table row plus the
/// closed-form multiple of the longest element.
DihedralProduct finite_product(int m, Side side, int i, int k);

/// Rewrites each c_{m+d} + c_{m-d} (d > 0) of an infinite-group expression as
/// (v^d + v^-d) c_m. A partner index 0 stands for the c_0 term the closed form
/// omits at i = k.
DihedralProduct fold_to_finite(int m, const DihedralProduct& infinite);

/// ElementId of a dihedral word in a group built from I2(m).
ElementId element_of(const GroupTable& g, const DihedralWord& w);

/// finite_product against the generic column computation on I2(m), for every
/// i, k in 1..m and both sides.
CheckReport crosscheck_dihedral(int m);

}  // namespace heckepos::dihedral

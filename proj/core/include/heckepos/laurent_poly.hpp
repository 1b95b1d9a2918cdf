#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heckepos/checked.hpp"

namespace heckepos {

/// Integer Laurent polynomial in v, stored densely from its lowest exponent.
///
/// The representation is normalized: the end coefficients are nonzero, and the
/// zero polynomial has no coefficients at all. Arithmetic is overflow-checked.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Coeff c);

  static LaurentPoly monomial(Coeff c, int exponent);
  /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Coeff>>& terms);
  /// v + v^-1
  static LaurentPoly v_plus_vinv();
  /// v - v^-1
  static LaurentPoly v_minus_vinv();

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coeff coefficient(int exponent) const;
  std::vector<std::pair<int, Coeff>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(Coeff c);
  /// this += c * v^shift * other
  LaurentPoly& add_scaled(const LaurentPoly& other, Coeff c, int shift = 0);

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, Coeff c) { return a *= c; }
  friend LaurentPoly operator*(Coeff c, LaurentPoly a) { return a *= c; }

  bool operator==(const LaurentPoly& other) const = default;

  /// True when p(v) == p(v^-1).
  bool is_palindromic() const;

  /// Canonical text: ascending exponents, e.g. "-v^-2+3+v".
  std::string to_string(char var = 'v') const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

/// The ring involution v -> v^-1.
LaurentPoly bar(const LaurentPoly& p);

/// Parses the canonical syntax ("2v^-1-v^3", "0", "v+v^-1"); `var` names the indeterminate.
LaurentPoly parse_laurent(std::string_view text, char var = 'v');

/// Formats sparse terms in canonical ascending form with the given variable letter.
std::string format_terms(const std::vector<std::pair<int, Coeff>>& terms, char var);

}  // namespace heckepos

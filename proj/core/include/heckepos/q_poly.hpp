#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "heckepos/checked.hpp"
#include "heckepos/laurent_poly.hpp"

namespace heckepos {

/// Polynomial in q = v^2 with integer coefficients, dense from degree 0.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Coeff c);
  explicit QPoly(std::vector<Coeff> coeffs);

  static QPoly one() { return QPoly(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Coeff coefficient(int i) const;
  const std::vector<Coeff>& coefficients() const { return coeffs_; }

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  /// this += c * q^shift * other
  QPoly& add_scaled(const QPoly& other, Coeff c, int shift = 0);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }

  bool operator==(const QPoly&) const = default;
  /// Ordering used for listings: by degree, then lexicographic coefficients from q^0.
  std::strong_ordering operator<=>(const QPoly& other) const;

  bool all_nonnegative() const;
  bool is_palindromic() const;

  /// P(v^2) as a Laurent polynomial in v.
  LaurentPoly to_laurent() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// Weakly increasing then weakly decreasing coefficient sequence.
bool is_unimodal(const QPoly& p);

QPoly parse_qpoly(std::string_view text);

struct QPolyHash {
  std::size_t operator()(const QPoly& p) const noexcept;
};

}  // namespace heckepos

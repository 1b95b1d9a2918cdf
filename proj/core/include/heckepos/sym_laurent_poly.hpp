#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heckepos/checked.hpp"
#include "heckepos/laurent_poly.hpp"
#include "heckepos/q_poly.hpp"

namespace heckepos {

/// Bar-invariant Laurent polynomial of a single exponent parity, stored by its
/// non-negative half.
///
/// `half()[j]` is the coefficient of v^(parity + 2j), which equals the
/// coefficient of v^-(parity + 2j). The constant term, when the parity is
/// even, is stored once. This is the value type of the structure constants.
class SymLaurentPoly {
 public:
  SymLaurentPoly() = default;
  /// The constant c.
  explicit SymLaurentPoly(Coeff c);
  SymLaurentPoly(int parity, std::vector<Coeff> half);

  /// v + v^-1
  static SymLaurentPoly v_plus_vinv() { return SymLaurentPoly(1, {1}); }

  bool is_zero() const { return half_.empty(); }
  /// Top exponent d; -1 for zero.
  int degree() const { return is_zero() ? -1 : parity_ + 2 * (static_cast<int>(half_.size()) - 1); }
  int parity() const { return parity_; }
  const std::vector<Coeff>& half() const { return half_; }
  Coeff coefficient(int exponent) const;
  Coeff max_coefficient() const;
  Coeff min_coefficient() const;

  /// Multiplication by v + v^-1; flips the parity.
  SymLaurentPoly times_v_plus_vinv() const;
  /// this += c * other. Operands of different parity are rejected unless one is zero.
  SymLaurentPoly& add_scaled(const SymLaurentPoly& other, Coeff c);
  /// this += (v + v^-1) * other, without a temporary.
  SymLaurentPoly& add_times_v_plus_vinv(const SymLaurentPoly& other);
  /// Sets to zero, keeping the allocation.
  void clear() {
    half_.clear();
    parity_ = 0;
  }
  SymLaurentPoly& operator+=(const SymLaurentPoly& other) { return add_scaled(other, 1); }
  SymLaurentPoly& operator-=(const SymLaurentPoly& other) { return add_scaled(other, -1); }

  bool operator==(const SymLaurentPoly& other) const {
    return half_ == other.half_ && (half_.empty() || parity_ == other.parity_);
  }

  LaurentPoly to_laurent() const;
  std::string to_string() const { return to_laurent().to_string(); }

 private:
  void trim();
  int parity_ = 0;
  std::vector<Coeff> half_;
};

/// Compresses a palindromic single-parity Laurent polynomial.
SymLaurentPoly sym_from_laurent(const LaurentPoly& p);

/// v^d * h written in q = v^2, where d is the degree of h.
QPoly qpoly_from_sym(const SymLaurentPoly& h);

struct SymLaurentPolyHash {
  std::size_t operator()(const SymLaurentPoly& p) const noexcept;
};

}  // namespace heckepos

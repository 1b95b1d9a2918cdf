#pragma once

#include <memory>
#include <string>
#include <vector>

#include "heckepos/checked.hpp"

namespace heckepos {

/// The real field Q(zeta) with zeta = 2cos(pi/n), presented by the minimal
/// polynomial of zeta. Elements used by the root-system code are algebraic
/// integers, so coordinates are integers in the power basis 1, zeta, ...
class CosineField {
 public:
  /// n >= 1. The field contains 2cos(pi*k/n) for every integer k.
  explicit CosineField(int n);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  /// Monic minimal polynomial of zeta, ascending coefficients.
  const std::vector<Coeff>& minimal_polynomial() const { return minpoly_; }
  long double zeta() const { return zeta_; }

 private:
  int n_;
  std::vector<Coeff> minpoly_;
  long double zeta_;
};

/// Exact element of a CosineField.
class AlgebraicReal {
 public:
  AlgebraicReal() = default;
  AlgebraicReal(std::shared_ptr<const CosineField> field, Coeff integer);
  AlgebraicReal(std::shared_ptr<const CosineField> field, std::vector<Coeff> coords);

  /// 2cos(pi*k/n) for the field's n.
  static AlgebraicReal two_cos(std::shared_ptr<const CosineField> field, int k);

  const std::vector<Coeff>& coordinates() const { return coords_; }
  bool is_zero() const;
  /// Exact sign: zero is decided on coordinates, nonzero values by a certified
  /// floating-point evaluation.
  int sign() const;
  long double approx() const;

  AlgebraicReal& operator+=(const AlgebraicReal& o);
  AlgebraicReal& operator-=(const AlgebraicReal& o);
  friend AlgebraicReal operator+(AlgebraicReal a, const AlgebraicReal& b) { return a += b; }
  friend AlgebraicReal operator-(AlgebraicReal a, const AlgebraicReal& b) { return a -= b; }
  friend AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b);
  bool operator==(const AlgebraicReal& o) const { return coords_ == o.coords_; }

  std::string to_string() const;

 private:
  void reduce(std::vector<Coeff>& c) const;
  std::shared_ptr<const CosineField> field_;
  std::vector<Coeff> coords_;
};

/// Cyclotomic polynomial Phi_n, ascending coefficients.
std::vector<Coeff> cyclotomic_polynomial(int n);

}  // namespace heckepos

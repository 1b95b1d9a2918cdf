#include "heckepos/q_poly.hpp"

#include <algorithm>

#include "heckepos/error.hpp"

namespace heckepos {

QPoly::QPoly(Coeff c) {
  if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff QPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

QPoly& QPoly::add_scaled(const QPoly& other, Coeff c, int shift) {
  if (other.is_zero() || c == 0) return *this;
  const std::size_t need = other.coeffs_.size() + static_cast<std::size_t>(shift);
  if (coeffs_.size() < need) coeffs_.resize(need, 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    Coeff& slot = coeffs_[i + static_cast<std::size_t>(shift)];
    slot = checked_add(slot, checked_mul(c, other.coeffs_[i]));
  }
  trim();
  return *this;
}

QPoly& QPoly::operator+=(const QPoly& other) { return add_scaled(other, 1); }

QPoly& QPoly::operator-=(const QPoly& other) { return add_scaled(other, -1); }

std::strong_ordering QPoly::operator<=>(const QPoly& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(coeffs_.begin(), coeffs_.end(),
                                                other.coeffs_.begin(), other.coeffs_.end());
}

bool QPoly::all_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c >= 0; });
}

bool QPoly::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

LaurentPoly QPoly::to_laurent() const {
  std::vector<std::pair<int, Coeff>> t;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) t.emplace_back(2 * static_cast<int>(i), coeffs_[i]);
  return LaurentPoly::from_terms(t);
}

std::string QPoly::to_string() const {
  std::vector<std::pair<int, Coeff>> t;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) t.emplace_back(static_cast<int>(i), coeffs_[i]);
  return format_terms(t, 'q');
}

bool is_unimodal(const QPoly& p) {
  const auto& c = p.coefficients();
  std::size_t i = 1;
  while (i < c.size() && c[i] >= c[i - 1]) ++i;
  while (i < c.size() && c[i] <= c[i - 1]) ++i;
  return i >= c.size();
}

QPoly parse_qpoly(std::string_view text) {
  LaurentPoly p = parse_laurent(text, 'q');
  if (!p.is_zero() && p.min_exponent() < 0) throw ParseError("negative power of q");
  std::vector<Coeff> c(p.is_zero() ? 0 : static_cast<std::size_t>(p.max_exponent() + 1), 0);
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
  return QPoly(std::move(c));
}

std::size_t QPolyHash::operator()(const QPoly& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Coeff c : p.coefficients()) h = (h ^ std::hash<Coeff>{}(c)) * 0x100000001b3ULL;
  return h;
}

}  // namespace heckepos

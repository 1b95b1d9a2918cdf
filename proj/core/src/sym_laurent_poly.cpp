#include "heckepos/sym_laurent_poly.hpp"

#include <algorithm>
#include <functional>

#include "heckepos/error.hpp"

namespace heckepos {

SymLaurentPoly::SymLaurentPoly(Coeff c) {
  if (c != 0) half_.push_back(c);
}

SymLaurentPoly::SymLaurentPoly(int parity, std::vector<Coeff> half) : parity_(parity & 1), half_(std::move(half)) {
  trim();
}

void SymLaurentPoly::trim() {
  while (!half_.empty() && half_.back() == 0) half_.pop_back();
  if (half_.empty()) parity_ = 0;
}

Coeff SymLaurentPoly::coefficient(int exponent) const {
  int e = exponent < 0 ? -exponent : exponent;
  if (is_zero() || ((e - parity_) & 1) != 0 || e < parity_) return 0;
  std::size_t j = static_cast<std::size_t>((e - parity_) / 2);
  return j < half_.size() ? half_[j] : 0;
}

Coeff SymLaurentPoly::max_coefficient() const {
  return half_.empty() ? 0 : *std::max_element(half_.begin(), half_.end());
}

Coeff SymLaurentPoly::min_coefficient() const {
  return half_.empty() ? 0 : *std::min_element(half_.begin(), half_.end());
}

SymLaurentPoly SymLaurentPoly::times_v_plus_vinv() const {
  if (is_zero()) return {};
  const std::size_t n = half_.size();
  std::vector<Coeff> out(n + (parity_ == 0 ? 0 : 1), 0);
  if (parity_ == 0) {
    // exponents 0,2,..  ->  1,3,..: g[2j+1] = a_j + a_{j+1}
    for (std::size_t j = 0; j < n; ++j) out[j] = checked_add(half_[j], j + 1 < n ? half_[j + 1] : 0);
  } else {
    // exponents 1,3,..  ->  0,2,..: g[0] = 2 b_0, g[2j] = b_{j-1} + b_j
    out[0] = checked_mul(2, half_[0]);
    for (std::size_t j = 1; j <= n; ++j) out[j] = checked_add(half_[j - 1], j < n ? half_[j] : 0);
  }
  return SymLaurentPoly(1 - parity_, std::move(out));
}

SymLaurentPoly& SymLaurentPoly::add_scaled(const SymLaurentPoly& other, Coeff c) {
  if (other.is_zero() || c == 0) return *this;
  if (is_zero()) {
    parity_ = other.parity_;
  } else if (parity_ != other.parity_) {
    throw MixedParity("adding symmetric polynomials of different parity");
  }
  if (half_.size() < other.half_.size()) half_.resize(other.half_.size(), 0);
  for (std::size_t j = 0; j < other.half_.size(); ++j)
    half_[j] = checked_add(half_[j], checked_mul(c, other.half_[j]));
  trim();
  return *this;
}

SymLaurentPoly& SymLaurentPoly::add_times_v_plus_vinv(const SymLaurentPoly& other) {
  if (other.is_zero()) return *this;
  const int parity = 1 - other.parity_;
  if (is_zero()) {
    parity_ = parity;
  } else if (parity_ != parity) {
    throw MixedParity("adding symmetric polynomials of different parity");
  }
  const auto& b = other.half_;
  const std::size_t n = b.size();
  const std::size_t len = n + (other.parity_ == 0 ? 0 : 1);
  if (half_.size() < len) half_.resize(len, 0);
  if (other.parity_ == 0) {
    for (std::size_t j = 0; j < n; ++j) half_[j] = checked_add(half_[j], checked_add(b[j], j + 1 < n ? b[j + 1] : 0));
  } else {
    half_[0] = checked_add(half_[0], checked_mul(2, b[0]));
    for (std::size_t j = 1; j <= n; ++j) half_[j] = checked_add(half_[j], checked_add(b[j - 1], j < n ? b[j] : 0));
  }
  trim();
  return *this;
}

LaurentPoly SymLaurentPoly::to_laurent() const {
  std::vector<std::pair<int, Coeff>> t;
  for (std::size_t j = 0; j < half_.size(); ++j) {
    int e = parity_ + 2 * static_cast<int>(j);
    t.emplace_back(e, half_[j]);
    if (e != 0) t.emplace_back(-e, half_[j]);
  }
  return LaurentPoly::from_terms(t);
}

SymLaurentPoly sym_from_laurent(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  if (!p.is_palindromic()) throw NotSymmetric("polynomial " + p.to_string() + " is not bar-invariant");
  const int d = p.max_exponent();
  const int parity = d & 1;
  std::vector<Coeff> half;
  for (int e = parity; e <= d; e += 2) half.push_back(p.coefficient(e));
  for (const auto& [e, c] : p.terms())
    if (((e - parity) & 1) != 0) throw MixedParity("polynomial " + p.to_string() + " mixes exponent parities");
  return SymLaurentPoly(parity, std::move(half));
}

QPoly qpoly_from_sym(const SymLaurentPoly& h) {
  if (h.is_zero()) return {};
  const int d = h.degree();
  // v^d h has exponents 0..2d; the coefficient of q^i is that of v^(2i-d).
  std::vector<Coeff> c(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = h.coefficient(2 * i - d);
  return QPoly(std::move(c));
}

std::size_t SymLaurentPolyHash::operator()(const SymLaurentPoly& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.parity()) * 0x9e3779b97f4a7c15ULL + 0x51ed27;
  for (Coeff c : p.half()) h = (h ^ std::hash<Coeff>{}(c)) * 0x100000001b3ULL;
  return h;
}

}  // namespace heckepos

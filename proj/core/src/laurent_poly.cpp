#include "heckepos/laurent_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "heckepos/error.hpp"

namespace heckepos {

LaurentPoly::LaurentPoly(Coeff c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Coeff>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_scaled(LaurentPoly(1), c, e);
  return p;
}

LaurentPoly LaurentPoly::v_plus_vinv() { return from_terms({{-1, 1}, {1, 1}}); }

LaurentPoly LaurentPoly::v_minus_vinv() { return from_terms({{-1, -1}, {1, 1}}); }

Coeff LaurentPoly::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Coeff>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Coeff>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  low_ += static_cast<int>(first);
}

LaurentPoly& LaurentPoly::add_scaled(const LaurentPoly& other, Coeff c, int shift) {
  if (other.is_zero() || c == 0) return *this;
  const int olow = other.low_ + shift;
  const int ohigh = other.max_exponent() + shift;
  if (is_zero()) {
    low_ = olow;
    coeffs_.assign(other.coeffs_.size(), 0);
  } else {
    const int high = std::max(max_exponent(), ohigh);
    if (olow < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - olow), 0);
      low_ = olow;
    }
    coeffs_.resize(static_cast<std::size_t>(high - low_ + 1), 0);
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    Coeff& slot = coeffs_[static_cast<std::size_t>(olow - low_) + i];
    slot = checked_add(slot, checked_mul(c, other.coeffs_[i]));
  }
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) { return add_scaled(other, 1); }

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return add_scaled(other, -1); }

LaurentPoly& LaurentPoly::operator*=(Coeff c) {
  for (auto& x : coeffs_) x = checked_mul(x, c);
  normalize();
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.coeffs_) x = checked_sub(0, x);
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  out.normalize();
  return out;
}

bool LaurentPoly::is_palindromic() const {
  if (is_zero()) return true;
  if (low_ != -max_exponent()) return false;
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::string LaurentPoly::to_string(char var) const { return format_terms(terms(), var); }

LaurentPoly bar(const LaurentPoly& p) {
  std::vector<std::pair<int, Coeff>> t = p.terms();
  for (auto& term : t) term.first = -term.first;
  return LaurentPoly::from_terms(t);
}

std::string format_terms(const std::vector<std::pair<int, Coeff>>& terms, char var) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    Coeff mag = c;
    if (c < 0) {
      out += '-';
      mag = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

LaurentPoly parse_laurent(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<std::pair<int, Coeff>> terms;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      throw ParseError("expected integer in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
  };
  while (i < s.size()) {
    Coeff sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!terms.empty()) {
      throw ParseError("expected sign in '" + s + "'");
    }
    Coeff mag = 1;
    bool have_digits = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mag = read_int(i);
      have_digits = true;
    }
    int exponent = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        exponent = static_cast<int>(read_int(i));
      }
    } else if (!have_digits) {
      throw ParseError("malformed term in '" + s + "'");
    }
    terms.emplace_back(exponent, sign * mag);
  }
  return LaurentPoly::from_terms(terms);
}

}  // namespace heckepos

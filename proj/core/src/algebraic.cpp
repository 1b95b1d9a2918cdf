#include "heckepos/algebraic.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>

#include "heckepos/error.hpp"
#include "heckepos/laurent_poly.hpp"

namespace heckepos {
namespace {

using Poly = std::vector<Coeff>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  return out;
}

// Exact quotient a / b for monic b dividing a.
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Coeff c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = checked_sub(a[i - db + j], checked_mul(c, b[j]));
  }
  trim(a);
  if (!a.empty()) throw Error("cyclotomic division left a remainder");
  return q;
}

// x^k + x^-k as a polynomial in y = x + 1/x.
std::vector<Poly> lucas_table(int upto) {
  std::vector<Poly> c{{2}, {0, 1}};
  for (int k = 2; k <= upto; ++k) {
    Poly next = mul({0, 1}, c[static_cast<std::size_t>(k - 1)]);
    const Poly& prev = c[static_cast<std::size_t>(k - 2)];
    if (next.size() < prev.size()) next.resize(prev.size(), 0);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] = checked_sub(next[i], prev[i]);
    c.push_back(std::move(next));
  }
  return c;
}

// Minimal polynomial of 2cos(2pi/m).
Poly real_cyclotomic(int m) {
  if (m == 1) return {-2, 1};
  if (m == 2) return {2, 1};
  Poly phi = cyclotomic_polynomial(m);
  const int half = static_cast<int>(phi.size() - 1) / 2;
  auto lucas = lucas_table(half);
  Poly out{phi[static_cast<std::size_t>(half)]};
  for (int k = 1; k <= half; ++k) {
    const Poly& ck = lucas[static_cast<std::size_t>(k)];
    if (out.size() < ck.size()) out.resize(ck.size(), 0);
    for (std::size_t i = 0; i < ck.size(); ++i)
      out[i] = checked_add(out[i], checked_mul(phi[static_cast<std::size_t>(half + k)], ck[i]));
  }
  trim(out);
  return out;
}

}  // namespace

std::vector<Coeff> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidIndex("cyclotomic index must be positive");
  Poly num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = divide_exact(num, cyclotomic_polynomial(d));
  return num;
}

CosineField::CosineField(int n) : n_(n) {
  if (n < 1) throw InvalidIndex("cosine field conductor must be positive");
  minpoly_ = real_cyclotomic(2 * n);
  zeta_ = 2.0L * std::cos(std::numbers::pi_v<long double> / static_cast<long double>(n));
}

AlgebraicReal::AlgebraicReal(std::shared_ptr<const CosineField> field, Coeff integer) : field_(std::move(field)) {
  if (integer != 0) coords_.push_back(integer);
}

AlgebraicReal::AlgebraicReal(std::shared_ptr<const CosineField> field, std::vector<Coeff> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  reduce(coords_);
}

AlgebraicReal AlgebraicReal::two_cos(std::shared_ptr<const CosineField> field, int k) {
  // 2cos(k t) = C_k(2cos t) with C_0 = 2, C_1 = y, C_{k+1} = y C_k - C_{k-1}.
  if (k < 0) k = -k;
  auto lucas = lucas_table(std::max(k, 1));
  return AlgebraicReal(std::move(field), lucas[static_cast<std::size_t>(k)]);
}

void AlgebraicReal::reduce(std::vector<Coeff>& c) const {
  const Poly& m = field_->minimal_polynomial();
  const std::size_t d = m.size() - 1;
  for (std::size_t i = c.size(); i-- > d;) {
    Coeff lead = c[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) c[i - d + j] = checked_sub(c[i - d + j], checked_mul(lead, m[j]));
  }
  trim(c);
}

bool AlgebraicReal::is_zero() const { return coords_.empty(); }

long double AlgebraicReal::approx() const {
  long double acc = 0, power = 1;
  for (Coeff c : coords_) {
    acc += static_cast<long double>(c) * power;
    power *= field_->zeta();
  }
  return acc;
}

int AlgebraicReal::sign() const {
  if (is_zero()) return 0;
  long double bound = 0, power = 1;
  for (Coeff c : coords_) {
    bound += std::fabs(static_cast<long double>(c)) * std::fabs(power);
    power *= field_->zeta();
  }
  bound *= 1e-12L;
  const long double value = approx();
  if (std::fabs(value) <= bound) throw Error("cannot certify the sign of " + to_string());
  return value > 0 ? 1 : -1;
}

AlgebraicReal& AlgebraicReal::operator+=(const AlgebraicReal& o) {
  if (!field_) field_ = o.field_;
  if (coords_.size() < o.coords_.size()) coords_.resize(o.coords_.size(), 0);
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
  trim(coords_);
  return *this;
}

AlgebraicReal& AlgebraicReal::operator-=(const AlgebraicReal& o) {
  if (!field_) field_ = o.field_;
  if (coords_.size() < o.coords_.size()) coords_.resize(o.coords_.size(), 0);
  for (std::size_t i = 0; i < o.coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], o.coords_[i]);
  trim(coords_);
  return *this;
}

AlgebraicReal operator*(const AlgebraicReal& a, const AlgebraicReal& b) {
  AlgebraicReal out;
  out.field_ = a.field_ ? a.field_ : b.field_;
  out.coords_ = mul(a.coords_, b.coords_);
  if (out.field_) out.reduce(out.coords_);
  return out;
}

std::string AlgebraicReal::to_string() const {
  std::vector<std::pair<int, Coeff>> t;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) t.emplace_back(static_cast<int>(i), coords_[i]);
  return format_terms(t, 'z');
}

}  // namespace heckepos

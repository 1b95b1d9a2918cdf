#include "heckepos/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cctype>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "heckepos/algebraic.hpp"
#include "heckepos/error.hpp"

namespace heckepos {
namespace {

CoxeterMatrix chain(int rank, std::string name) {
  CoxeterMatrix m;
  m.rank = rank;
  m.name = std::move(name);
  m.labels.assign(static_cast<std::size_t>(rank * rank), 2);
  for (int s = 0; s < rank; ++s) m.labels[static_cast<std::size_t>(s * rank + s)] = 1;
  for (int s = 0; s + 1 < rank; ++s) {
    m.labels[static_cast<std::size_t>(s * rank + s + 1)] = 3;
    m.labels[static_cast<std::size_t>((s + 1) * rank + s)] = 3;
  }
  return m;
}

void set_label(CoxeterMatrix& m, int s, int t, int label) {
  m.labels[static_cast<std::size_t>(s * m.rank + t)] = label;
  m.labels[static_cast<std::size_t>(t * m.rank + s)] = label;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
  return v;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : k) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

// Determinant over the cosine field by cofactor expansion along the rows,
// memoized on the set of remaining columns.
AlgebraicReal leading_minor(const std::vector<std::vector<AlgebraicReal>>& a, int k,
                            const std::shared_ptr<const CosineField>& field) {
  std::map<std::uint32_t, AlgebraicReal> memo;
  auto det = [&](auto&& self, std::uint32_t cols) -> AlgebraicReal {
    const int row = k - std::popcount(cols);
    if (cols == 0) return AlgebraicReal(field, 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    AlgebraicReal acc(field, 0);
    int sign = 1;
    for (int c = 0; c < k; ++c) {
      if (((cols >> c) & 1U) == 0) continue;
      AlgebraicReal term = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] * self(self, cols & ~(1U << c));
      if (sign > 0) acc += term; else acc -= term;
      sign = -sign;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return det(det, (1U << k) - 1);
}

}  // namespace

CoxeterMatrix preset(std::string_view type) {
  std::string t(type);
  for (auto& ch : t) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (t.size() >= 4 && t.rfind("I2(", 0) == 0 && t.back() == ')') {
    int m = parse_int(std::string_view(t).substr(3, t.size() - 4));
    if (m < 2 || m > 30) throw InvalidIndex("I2(m) preset needs 2 <= m <= 30");
    CoxeterMatrix c = chain(2, "I2(" + std::to_string(m) + ")");
    set_label(c, 0, 1, m);
    return c;
  }
  if (t == "G2") {
    CoxeterMatrix c = chain(2, "G2");
    set_label(c, 0, 1, 6);
    return c;
  }
  if (t == "H3" || t == "H4") {
    CoxeterMatrix c = chain(t == "H3" ? 3 : 4, t);
    set_label(c, 0, 1, 5);
    return c;
  }
  if (t == "F4") {
    CoxeterMatrix c = chain(4, t);
    set_label(c, 1, 2, 4);
    return c;
  }
  if (t.size() >= 2 && (t[0] == 'A' || t[0] == 'B' || t[0] == 'D')) {
    int n = parse_int(std::string_view(t).substr(1));
    if (n < 1 || n > 6) throw InvalidIndex("A/B/D presets need 1 <= n <= 6");
    if (t[0] == 'A') return chain(n, t);
    if (t[0] == 'B') {
      CoxeterMatrix c = chain(n, t);
      if (n >= 2) set_label(c, 0, 1, 4);
      return c;
    }
    if (n < 4) throw InvalidIndex("D_n preset needs n >= 4");
    CoxeterMatrix c = chain(n, t);
    set_label(c, n - 2, n - 1, 2);
    set_label(c, n - 3, n - 1, 3);
    return c;
  }
  throw ParseError("unknown group type '" + std::string(type) + "'");
}

CoxeterMatrix parse_matrix_text(std::string_view text, std::string name) {
  std::istringstream in{std::string(text)};
  CoxeterMatrix m;
  m.name = std::move(name);
  if (!(in >> m.rank) || m.rank < 1) throw ParseError("matrix text must start with a positive rank");
  m.labels.assign(static_cast<std::size_t>(m.rank * m.rank), 1);
  for (int s = 0; s < m.rank; ++s)
    for (int t = s + 1; t < m.rank; ++t) {
      int label = 0;
      if (!(in >> label)) throw ParseError("matrix text ended before the upper triangle was complete");
      set_label(m, s, t, label);
    }
  std::string extra;
  if (in >> extra) throw ParseError("trailing data in matrix text: '" + extra + "'");
  return m;
}

GroupTable build_group(const CoxeterMatrix& m, const BuildLimits& limits) {
  const int n = m.rank;
  if (n < 1) throw ParseError("rank must be positive");
  if (n > limits.max_rank) throw RankTooLarge("rank " + std::to_string(n) + " exceeds the configured bound");
  if (m.labels.size() != static_cast<std::size_t>(n * n)) throw ParseError("label table has the wrong size");
  int conductor = 1;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int label = m.at(s, t);
      if (label != m.at(t, s)) throw ParseError("Coxeter matrix is not symmetric");
      if (s == t && label != 1) throw ParseError("diagonal labels must be 1");
      if (s != t && label == 0) throw InfiniteType(m.name + " has an infinite label");
      if (s != t && label < 2) throw ParseError("off-diagonal labels must be at least 2");
      if (s != t && label >= 4) conductor = std::lcm(conductor, label);
    }

  auto field = std::make_shared<const CosineField>(conductor);
  auto two_cos_label = [&](int label) {
    if (label == 2) return AlgebraicReal(field, 0);
    if (label == 3) return AlgebraicReal(field, 1);
    return AlgebraicReal::two_cos(field, conductor / label);
  };
  // Twice the bilinear form: 2 on the diagonal, -2cos(pi/m) elsewhere.
  std::vector<std::vector<AlgebraicReal>> gram(static_cast<std::size_t>(n), std::vector<AlgebraicReal>(static_cast<std::size_t>(n)));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      gram[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
          s == t ? AlgebraicReal(field, 2) : AlgebraicReal(field, 0) - two_cos_label(m.at(s, t));
  for (int k = 1; k <= n; ++k)
    if (leading_minor(gram, k, field).sign() <= 0) throw InfiniteType(m.name + " is not of finite type");

  // Positive roots, in simple-root coordinates.
  using Root = std::vector<AlgebraicReal>;
  auto encode = [](const Root& r) {
    std::vector<Coeff> key;
    for (const auto& c : r) {
      key.push_back(static_cast<Coeff>(c.coordinates().size()));
      key.insert(key.end(), c.coordinates().begin(), c.coordinates().end());
    }
    return key;
  };
  auto reflect = [&](Generator s, const Root& r) {
    AlgebraicReal pairing(field, 0);
    for (int t = 0; t < n; ++t) pairing += gram[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] * r[static_cast<std::size_t>(t)];
    Root out = r;
    out[static_cast<std::size_t>(s)] -= pairing;
    return out;
  };
  std::vector<Root> roots;
  std::map<std::vector<Coeff>, int> root_index;
  for (int s = 0; s < n; ++s) {
    Root r(static_cast<std::size_t>(n), AlgebraicReal(field, 0));
    r[static_cast<std::size_t>(s)] = AlgebraicReal(field, 1);
    root_index.emplace(encode(r), static_cast<int>(roots.size()));
    roots.push_back(std::move(r));
  }
  constexpr std::size_t kMaxRoots = 4096;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (int s = 0; s < n; ++s) {
      if (static_cast<int>(i) == s) continue;
      Root r = reflect(s, roots[i]);
      if (r[static_cast<std::size_t>(s)].sign() < 0) throw Error("reflection of a positive root left the positive cone");
      if (root_index.emplace(encode(r), static_cast<int>(roots.size())).second) roots.push_back(std::move(r));
      if (roots.size() > kMaxRoots) throw InfiniteType(m.name + " has too many roots");
    }
  }
  const int npos = static_cast<int>(roots.size());
  // Root permutation of each simple reflection; negatives are offset by npos.
  std::vector<std::vector<std::uint16_t>> simple(static_cast<std::size_t>(n), std::vector<std::uint16_t>(static_cast<std::size_t>(2 * npos)));
  for (int s = 0; s < n; ++s) {
    auto& p = simple[static_cast<std::size_t>(s)];
    for (int b = 0; b < npos; ++b) {
      int image = b == s ? npos + s : root_index.at(encode(reflect(s, roots[static_cast<std::size_t>(b)])));
      p[static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(image);
      p[static_cast<std::size_t>(b + npos)] = static_cast<std::uint16_t>(image >= npos ? image - npos : image + npos);
    }
  }

  GroupTable g;
  g.name_ = m.name;
  g.matrix_ = m;
  g.rank_ = n;
  g.num_positive_roots_ = npos;
  const std::size_t words = static_cast<std::size_t>(npos + 63) / 64;
  using Perm = std::vector<std::uint16_t>;
  auto inversion_key = [&](const Perm& p) {
    std::vector<std::uint64_t> key(words, 0);
    for (int b = 0; b < npos; ++b)
      if (p[static_cast<std::size_t>(b)] >= npos) key[static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
    return key;
  };
  auto inversions = [](const std::vector<std::uint64_t>& key) {
    int c = 0;
    for (auto w : key) c += std::popcount(w);
    return c;
  };

  std::vector<Perm> perms;
  std::unordered_map<std::vector<std::uint64_t>, ElementId, KeyHash> ids;
  Perm identity(static_cast<std::size_t>(2 * npos));
  std::iota(identity.begin(), identity.end(), std::uint16_t{0});
  ids.emplace(inversion_key(identity), 0);
  perms.push_back(identity);
  g.length_.push_back(0);
  g.parent_.push_back(0);
  g.length_start_.push_back(0);
  const auto un = static_cast<std::size_t>(n);
  for (std::size_t x = 0; x < perms.size(); ++x) {
    for (int s = 0; s < n; ++s) {
      Perm y(perms[x].size());
      const auto& ps = simple[static_cast<std::size_t>(s)];
      for (std::size_t b = 0; b < y.size(); ++b) y[b] = perms[x][ps[b]];
      auto key = inversion_key(y);
      auto [it, inserted] = ids.emplace(key, static_cast<ElementId>(perms.size()));
      if (inserted) {
        const int len = g.length_[x] + 1;
        if (inversions(key) != len) throw Error("length disagrees with the inversion count");
        if (len > g.length_.back()) g.length_start_.push_back(static_cast<ElementId>(perms.size()));
        perms.push_back(std::move(y));
        g.length_.push_back(len);
        g.parent_.push_back(static_cast<ElementId>(x));
        if (perms.size() > limits.max_size) throw RankTooLarge(m.name + " exceeds the configured group size bound");
      }
      g.right_.push_back(it->second);
    }
  }
  const std::size_t size = perms.size();
  g.length_start_.push_back(static_cast<ElementId>(size));
  g.left_.resize(size * un);
  g.inverse_.resize(size);
  g.ldesc_.assign(size, 0);
  g.rdesc_.assign(size, 0);
  for (std::size_t x = 0; x < size; ++x) {
    const Perm& p = perms[x];
    for (int s = 0; s < n; ++s) {
      const auto& ps = simple[static_cast<std::size_t>(s)];
      Perm y(p.size());
      for (std::size_t b = 0; b < y.size(); ++b) y[b] = ps[p[b]];
      ElementId sx = ids.at(inversion_key(y));
      g.left_[x * un + static_cast<std::size_t>(s)] = sx;
      if (g.length_[sx] < g.length_[x]) g.ldesc_[x] |= 1U << s;
      if (g.length_[g.right_[x * un + static_cast<std::size_t>(s)]] < g.length_[x]) g.rdesc_[x] |= 1U << s;
    }
    Perm inv(p.size());
    for (std::size_t b = 0; b < p.size(); ++b) inv[p[b]] = static_cast<std::uint16_t>(b);
    g.inverse_[x] = ids.at(inversion_key(inv));
  }
  return g;
}

std::vector<Generator> GroupTable::word(ElementId x) const {
  std::vector<Generator> w;
  while (x != kIdentity) {
    ElementId p = parent_[x];
    for (int s = 0; s < rank_; ++s)
      if (right_mult(p, s) == x) {
        w.push_back(s);
        break;
      }
    x = p;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

ElementId GroupTable::element_from_word(std::span<const Generator> word) const {
  ElementId x = kIdentity;
  for (Generator s : word) {
    if (s < 0 || s >= rank_) throw InvalidIndex("generator out of range");
    x = right_mult(x, s);
  }
  return x;
}

bool bruhat_leq(const GroupTable& g, ElementId x, ElementId y) {
  while (true) {
    if (x == kIdentity) return true;
    if (g.length(x) > g.length(y)) return false;
    if (x == y) return true;
    // y != e here since l(y) >= l(x) > 0.
    const Generator s = first_generator(g.left_descents(y));
    if (g.is_left_descent(s, x)) x = g.left_mult(s, x);
    y = g.left_mult(s, y);
  }
}

ElementId longest_element(const GroupTable& g) { return g.longest(); }

BruhatIdeals::BruhatIdeals(const GroupTable& g) : words_((g.size() + 63) / 64), bits_(g.size() * words_, 0) {
  bits_[0] = 1;
  for (ElementId y = 1; y < g.size(); ++y) {
    const Generator s = first_generator(g.left_descents(y));
    const ElementId sy = g.left_mult(s, y);
    std::uint64_t* dst = bits_.data() + static_cast<std::size_t>(y) * words_;
    const std::uint64_t* src = bits_.data() + static_cast<std::size_t>(sy) * words_;
    std::copy(src, src + words_, dst);
    // [e, y] = [e, sy] union s[e, sy]
    for_each_below(sy, [&](ElementId x) {
      ElementId sx = g.left_mult(s, x);
      dst[sx >> 6] |= std::uint64_t{1} << (sx & 63);
    });
  }
}

std::size_t BruhatIdeals::ideal_size(ElementId y) const {
  std::size_t c = 0;
  for (auto w : row(y)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::string format_element(const GroupTable& g, ElementId x) {
  std::string out = std::to_string(x) + "(";
  auto w = g.word(x);
  if (w.empty()) out += "e";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (g.rank() >= 10 && i > 0) out += '.';
    out += std::to_string(w[i] + 1);
  }
  return out + ")";
}

ElementId parse_element(const GroupTable& g, std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated word '" + std::string(text) + "'");
    std::vector<Generator> w;
    std::string body(text.substr(1, text.size() - 2));
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    int s = 0;
    while (in >> s) w.push_back(s - 1);
    if (!in.eof()) throw ParseError("bad word '" + std::string(text) + "'");
    return g.element_from_word(w);
  }
  const int id = parse_int(text);
  if (id < 0 || static_cast<std::size_t>(id) >= g.size()) throw InvalidIndex("element id " + std::string(text) + " out of range");
  return static_cast<ElementId>(id);
}

}  // namespace heckepos

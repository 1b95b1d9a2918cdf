#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heckepos {

using ElementId = std::uint32_t;
using Generator = int;
/// Bit s set iff generator s belongs to the set.
using GeneratorMask = std::uint32_t;

inline constexpr ElementId kIdentity = 0;

struct CoxeterMatrix {
  int rank = 0;
  /// Row-major rank x rank labels; 1 on the diagonal, 0 encodes infinity.
  std::vector<int> labels;
  std::string name;

  int at(Generator s, Generator t) const { return labels[static_cast<std::size_t>(s * rank + t)]; }
};

/// Named finite types: A_n, B_n, D_n, I2(m), H3, H4, F4.
CoxeterMatrix preset(std::string_view type);
/// First token the rank, then the strict upper triangle of labels row by row.
CoxeterMatrix parse_matrix_text(std::string_view text, std::string name = "custom");

struct BuildLimits {
  int max_rank = 8;
  std::size_t max_size = 2'000'000;
};

/// Enumerated finite Coxeter group. Element ids follow ShortLex order of the
/// normal forms, so ids are sorted by length and 0 is the identity.
class GroupTable {
 public:
  const std::string& name() const { return name_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return rank_; }
  std::size_t size() const { return length_.size(); }
  int max_length() const { return length_.back(); }
  int num_positive_roots() const { return num_positive_roots_; }

  int length(ElementId x) const { return length_[x]; }
  GeneratorMask left_descents(ElementId x) const { return ldesc_[x]; }
  GeneratorMask right_descents(ElementId x) const { return rdesc_[x]; }
  /// L(x) in the low `rank` bits, R(x) above them.
  std::uint64_t lr_descents(ElementId x) const {
    return std::uint64_t{ldesc_[x]} | (std::uint64_t{rdesc_[x]} << rank_);
  }
  bool is_left_descent(Generator s, ElementId x) const { return (ldesc_[x] >> s) & 1U; }
  bool is_right_descent(ElementId x, Generator s) const { return (rdesc_[x] >> s) & 1U; }

  ElementId left_mult(Generator s, ElementId x) const { return left_[x * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(s)]; }
  ElementId right_mult(ElementId x, Generator s) const { return right_[x * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(s)]; }
  ElementId inverse(ElementId x) const { return inverse_[x]; }
  ElementId longest() const { return static_cast<ElementId>(size() - 1); }

  /// ShortLex normal form, generators 0-based.
  std::vector<Generator> word(ElementId x) const;
  /// Product of the generators, read left to right.
  ElementId element_from_word(std::span<const Generator> word) const;

  /// First element of each length: ids of length k are [length_begin(k), length_begin(k+1)).
  ElementId length_begin(int k) const { return length_start_[static_cast<std::size_t>(k)]; }

 private:
  friend GroupTable build_group(const CoxeterMatrix& m, const BuildLimits& limits);

  std::string name_;
  CoxeterMatrix matrix_;
  int rank_ = 0;
  int num_positive_roots_ = 0;
  std::vector<int> length_;
  std::vector<GeneratorMask> ldesc_;
  std::vector<GeneratorMask> rdesc_;
  std::vector<ElementId> left_;
  std::vector<ElementId> right_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> parent_;
  std::vector<ElementId> length_start_;
};

GroupTable build_group(const CoxeterMatrix& m, const BuildLimits& limits = {});
inline GroupTable build_group(std::string_view type) { return build_group(preset(type)); }

/// Bruhat order by descent recursion.
bool bruhat_leq(const GroupTable& g, ElementId x, ElementId y);
ElementId longest_element(const GroupTable& g);

/// Lowest-order generator of a nonempty mask.
inline Generator first_generator(GeneratorMask m) { return __builtin_ctz(m); }
inline Generator last_generator(GeneratorMask m) { return 31 - __builtin_clz(m); }

/// All lower Bruhat intervals [e, y] as bitsets, |W|^2 bits in total.
class BruhatIdeals {
 public:
  explicit BruhatIdeals(const GroupTable& g);

  bool leq(ElementId x, ElementId y) const { return (row(y)[x >> 6] >> (x & 63)) & 1U; }
  std::span<const std::uint64_t> row(ElementId y) const {
    return {bits_.data() + static_cast<std::size_t>(y) * words_, words_};
  }
  std::size_t ideal_size(ElementId y) const;

  template <typename F>
  void for_each_below(ElementId y, F&& f) const {
    auto r = row(y);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t bits = r[w];
      while (bits != 0) {
        f(static_cast<ElementId>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// "17(121)": id followed by the 1-based ShortLex word, "e" for the identity.
std::string format_element(const GroupTable& g, ElementId x);
/// Accepts a plain id, or a word in brackets such as "[1,2,1]" (1-based, "[]" for e).
ElementId parse_element(const GroupTable& g, std::string_view text);

}  // namespace heckepos

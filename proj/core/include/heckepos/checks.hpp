#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckepos/coxeter.hpp"
#include "heckepos/hecke.hpp"
#include "heckepos/klbase.hpp"

namespace heckepos {

/// Outcome of one verification pass. `passed` holds exactly when no
/// counterexample was found.
struct CheckReport {
  CheckReport() = default;
  CheckReport(std::string check_name, std::string group_name)
      : check(std::move(check_name)), group(std::move(group_name)) {}

  std::string check;
  std::string group;
  bool passed = true;
  /// Counters are summed on merge, except names ending in "max_coefficient",
  /// which take the maximum.
  std::map<std::string, std::int64_t> counters;
  std::vector<std::string> counterexamples;
  /// Number of counterexamples found; only the first few are kept verbatim.
  std::int64_t failures = 0;

  void fail(std::string counterexample);
  void count(const std::string& name, std::int64_t by = 1) { counters[name] += by; }
  void record_max(const std::string& name, std::int64_t value);

  /// Associative merge of two reports of the same check.
  CheckReport& merge(const CheckReport& other);

  std::string to_text() const;
  /// Single-line JSON record.
  std::string to_json() const;
};

inline constexpr std::size_t kMaxKeptCounterexamples = 20;

/// Crystallographic groups: every label is 2, 3, 4 or 6.
bool is_weyl_group(const GroupTable& g);

/// Nonnegativity of all KL polynomials, scanned over the extremal pairs.
CheckReport check_p1(const KLStore& store);
/// P_{x,y} - P_{z,y} nonnegative for x <= z <= y, on extremal pairs.
CheckReport check_p2(const KLStore& store);

struct ColumnProgress {
  ElementId y;
  Coeff column_max;
  Coeff running_max;
  std::size_t distinct;
};

/// Nonnegativity of all h_{x,y,z} for y in [y_begin, y_end); also collects the
/// inline unimodality flags.
CheckReport check_p3(const WGraph& wg, ElementId y_begin, ElementId y_end,
                     DescentStrategy strategy = DescentStrategy::First,
                     const std::function<void(const ColumnProgress&)>& progress = {});
CheckReport check_unimodal(const GroupTable& g, const HColumn& col);
/// P3 and the inline unimodality flags for one finished column.
CheckReport check_column(const GroupTable& g, const HColumn& col);

/// c_x c_{w0} = (sum_{z<=x} p_{z,x} v^{l(z)}) c_{w0} for every x, with the
/// palindromy/unimodality of v^{l(x)} h_x required when `require_unimodal`.
CheckReport check_w0_identity(const KLStore& store, const WGraph& wg, bool require_unimodal);
inline CheckReport check_w0_identity(const KLStore& store, const WGraph& wg) {
  return check_w0_identity(store, wg, is_weyl_group(store.group()));
}

/// Columns built with the first and the last descent agree exactly.
CheckReport check_strategy_invariance(const WGraph& wg);

/// h_{x,y,z} = h_{y^-1,x^-1,z^-1} over all triples; also compares the global
/// maximum coefficient of the sweep with that of its transpose.
CheckReport check_h_symmetry(const WGraph& wg);

}  // namespace heckepos

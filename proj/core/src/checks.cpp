#include "heckepos/checks.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace heckepos {
namespace {

bool ends_with_max(const std::string& name) {
  static const std::string suffix = "max_coefficient";
  return name.size() >= suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string pair_text(const GroupTable& g, ElementId x, ElementId y) {
  return "(" + format_element(g, x) + ", " + format_element(g, y) + ")";
}

std::string triple_text(const GroupTable& g, ElementId x, ElementId y, ElementId z) {
  return "(" + format_element(g, x) + ", " + format_element(g, y) + ", " + format_element(g, z) + ")";
}

}  // namespace

void CheckReport::fail(std::string counterexample) {
  passed = false;
  ++failures;
  if (counterexamples.size() < kMaxKeptCounterexamples) counterexamples.push_back(std::move(counterexample));
}

void CheckReport::record_max(const std::string& name, std::int64_t value) {
  auto [it, inserted] = counters.try_emplace(name, value);
  if (!inserted) it->second = std::max(it->second, value);
}

CheckReport& CheckReport::merge(const CheckReport& other) {
  passed = passed && other.passed;
  failures += other.failures;
  for (const auto& [name, value] : other.counters) {
    if (ends_with_max(name)) record_max(name, value);
    else counters[name] += value;
  }
  for (const auto& c : other.counterexamples)
    if (counterexamples.size() < kMaxKeptCounterexamples) counterexamples.push_back(c);
  return *this;
}

std::string CheckReport::to_text() const {
  std::string out = check + " [" + group + "]: " + (passed ? "PASS" : "FAIL");
  for (const auto& [name, value] : counters) out += " " + name + "=" + std::to_string(value);
  if (!passed) out += " failures=" + std::to_string(failures);
  out += "\n";
  for (const auto& c : counterexamples) out += "  counterexample: " + c + "\n";
  return out;
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["group"] = group;
  j["passed"] = passed;
  j["counters"] = counters;
  j["failures"] = failures;
  j["counterexamples"] = counterexamples;
  return j.dump();
}

bool is_weyl_group(const GroupTable& g) {
  return std::all_of(g.matrix().labels.begin(), g.matrix().labels.end(),
                     [](int m) { return m == 1 || m == 2 || m == 3 || m == 4 || m == 6; });
}

CheckReport check_p1(const KLStore& store) {
  const GroupTable& g = store.group();
  CheckReport r("P1", g.name());
  for (ElementId y = 0; y < g.size(); ++y) {
    if (!store.is_canonical(y)) continue;
    auto xs = store.extremal_row(y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const QPoly& p = store.stored(y, i);
      r.count("pairs_examined");
      for (Coeff c : p.coefficients()) r.record_max("max_coefficient", c);
      if (!p.all_nonnegative()) r.fail("P" + pair_text(g, xs[i], y) + " = " + p.to_string());
    }
  }
  r.counters["distinct_polynomials"] = static_cast<std::int64_t>(store.distinct_polynomials().size()) - 1;
  return r;
}

CheckReport check_p2(const KLStore& store) {
  const GroupTable& g = store.group();
  const BruhatIdeals& ideals = store.ideals();
  CheckReport r("P2", g.name());
  std::set<std::pair<const QPoly*, const QPoly*>> verified;
  for (ElementId y = 0; y < g.size(); ++y) {
    if (!store.is_canonical(y)) continue;
    auto xs = store.extremal_row(y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const QPoly& px = store.stored(y, i);
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (!ideals.leq(xs[i], xs[j])) continue;
        r.count("pairs_examined");
        const QPoly& pz = store.stored(y, j);
        if (&px == &pz || !verified.emplace(&px, &pz).second) continue;
        if (!(px - pz).all_nonnegative())
          r.fail("P" + pair_text(g, xs[i], y) + " - P" + pair_text(g, xs[j], y) + " = " + (px - pz).to_string());
      }
    }
  }
  r.counters["distinct_differences"] = static_cast<std::int64_t>(verified.size());
  return r;
}

CheckReport check_unimodal(const GroupTable& g, const HColumn& col) {
  CheckReport r("unimodality", g.name());
  const auto& polys = col.store().polynomials();
  r.count("polynomials_examined", static_cast<std::int64_t>(polys.size()));
  for (PolyStore::Handle h = 0; h < polys.size(); ++h) {
    if (is_unimodal(qpoly_from_sym(polys[h]))) continue;
    auto [x, z] = col.locate(h);
    r.fail("h" + triple_text(g, x, col.y(), z) + " = " + polys[h].to_string());
  }
  return r;
}

CheckReport check_column(const GroupTable& g, const HColumn& col) {
  CheckReport r("P3", g.name());
  const ElementId y = col.y();
  r.count("columns");
  std::int64_t triples = 0;
  for (ElementId x = 0; x < col.size(); ++x) triples += static_cast<std::int64_t>(col.row(x).size());
  r.count("nonzero_triples", triples);
  r.count("distinct_polynomials_summed", static_cast<std::int64_t>(col.store().size()));
  for (auto h : col.negative_handles()) {
    auto [x, z] = col.locate(h);
    r.fail("h" + triple_text(g, x, y, z) + " = " + col.poly(h).to_string());
  }
  for (auto h : col.nonunimodal_handles()) {
    auto [x, z] = col.locate(h);
    r.fail("non-unimodal h" + triple_text(g, x, y, z) + " = " + col.poly(h).to_string());
  }
  r.record_max("max_coefficient", col.max_coefficient());
  return r;
}

CheckReport check_p3(const WGraph& wg, ElementId y_begin, ElementId y_end, DescentStrategy strategy,
                     const std::function<void(const ColumnProgress&)>& progress) {
  const GroupTable& g = wg.group();
  CheckReport r("P3", g.name());
  Coeff running = 0;
  for (ElementId y = y_begin; y < y_end; ++y) {
    HColumn col = column(wg, y, strategy);
    r.merge(check_column(g, col));
    running = std::max(running, col.max_coefficient());
    if (progress) progress({y, col.max_coefficient(), running, col.store().size()});
  }
  return r;
}

CheckReport check_w0_identity(const KLStore& store, const WGraph& wg, bool require_unimodal) {
  const GroupTable& g = store.group();
  const ElementId w0 = g.longest();
  CheckReport r("w0-identity", g.name());
  HColumn col = column(wg, w0);
  for (ElementId x = 0; x < g.size(); ++x) {
    r.count("elements");
    LaurentPoly expected;
    store.ideals().for_each_below(x, [&](ElementId z) {
      expected += store.polynomial(z, x).to_laurent().shifted(2 * g.length(z) - g.length(x));
    });
    auto row = col.row(x);
    if (row.size() != 1 || row[0].z != w0) {
      r.fail("c_x c_w0 is not a multiple of c_w0 for x = " + format_element(g, x));
      continue;
    }
    const SymLaurentPoly& h = col.poly(row[0].handle);
    if (h.to_laurent() != expected) {
      r.fail("h_x for x = " + format_element(g, x) + ": got " + h.to_string() + ", expected " + expected.to_string());
      continue;
    }
    QPoly shifted = qpoly_from_sym(h);
    const bool good = shifted.is_palindromic() && is_unimodal(shifted);
    if (!good) {
      r.count("non_unimodal");
      if (require_unimodal) r.fail("v^l(x) h_x not palindromic/unimodal for x = " + format_element(g, x));
    }
    r.record_max("max_coefficient", h.max_coefficient());
  }
  r.counters["unimodality_required"] = require_unimodal ? 1 : 0;
  return r;
}

CheckReport check_strategy_invariance(const WGraph& wg) {
  const GroupTable& g = wg.group();
  CheckReport r("strategy-invariance", g.name());
  for (ElementId y = 0; y < g.size(); ++y) {
    HColumn a = column(wg, y, DescentStrategy::First);
    HColumn b = column(wg, y, DescentStrategy::Last);
    r.count("columns");
    r.record_max("first_max_coefficient", a.max_coefficient());
    r.record_max("last_max_coefficient", b.max_coefficient());
    for (ElementId x = 0; x < g.size(); ++x) {
      auto ra = a.row(x);
      auto rb = b.row(x);
      bool same = ra.size() == rb.size();
      for (std::size_t i = 0; same && i < ra.size(); ++i)
        same = ra[i].z == rb[i].z && a.poly(ra[i].handle) == b.poly(rb[i].handle);
      if (!same) r.fail("c_x c_y differs between strategies for (x, y) = " + pair_text(g, x, y));
    }
  }
  if (r.counters["first_max_coefficient"] != r.counters["last_max_coefficient"])
    r.fail("maximum coefficients differ between strategies");
  return r;
}

CheckReport check_h_symmetry(const WGraph& wg) {
  const GroupTable& g = wg.group();
  CheckReport r("h-symmetry", g.name());
  std::vector<HColumn> cols;
  cols.reserve(g.size());
  for (ElementId y = 0; y < g.size(); ++y) cols.push_back(column(wg, y));
  Coeff forward_max = 0, transpose_max = 0;
  for (ElementId y = 0; y < g.size(); ++y) {
    forward_max = std::max(forward_max, cols[y].max_coefficient());
    for (ElementId x = 0; x < g.size(); ++x) {
      // h_{x,y,z} against h_{y^-1,x^-1,z^-1}, which lives in column x^-1.
      const HColumn& other = cols[g.inverse(x)];
      auto row = cols[y].row(x);
      auto mirror = other.row(g.inverse(y));
      r.count("nonzero_triples", static_cast<std::int64_t>(row.size()));
      if (row.size() != mirror.size()) {
        r.fail("support of c_x c_y and its transpose differ at (x, y) = " + pair_text(g, x, y));
        continue;
      }
      for (const auto& e : row) {
        const SymLaurentPoly& h = cols[y].poly(e.handle);
        const SymLaurentPoly hm = other.value(g.inverse(y), g.inverse(e.z));
        transpose_max = std::max(transpose_max, hm.max_coefficient());
        if (hm != h)
          r.fail("h" + triple_text(g, x, y, e.z) + " != h" + triple_text(g, g.inverse(y), g.inverse(x), g.inverse(e.z)));
      }
    }
  }
  r.record_max("max_coefficient", forward_max);
  r.record_max("transpose_max_coefficient", transpose_max);
  if (forward_max != transpose_max) r.fail("sweep and transpose sweep disagree on the maximum coefficient");
  return r;
}

}  // namespace heckepos

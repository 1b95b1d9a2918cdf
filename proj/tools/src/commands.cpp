#include "heckepos_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "heckepos/dihedral.hpp"
#include "heckepos/error.hpp"
#include "heckepos/klbase.hpp"

namespace heckepos::cli {
namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode) {
  std::ofstream f(path, mode);
  if (!f) throw Error("cannot write " + path.string());
  return f;
}

int finish(const RunConfig& cfg, const CheckReport& r, std::ostream& out) {
  out << r.to_text();
  if (!cfg.report_json.empty()) open_out(cfg.report_json, std::ios::app) << r.to_json() << "\n";
  return r.passed ? 0 : 1;
}

ElementId element_arg(const GroupTable& g, const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidIndex(std::string("--") + flag + " is required");
  return parse_element(g, text);
}

// Leading "<y>:" of a log line, if any.
std::optional<ElementId> line_key(const std::string& line) {
  std::size_t pos = 0;
  while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
  if (pos == 0 || pos >= line.size() || line[pos] != ':') return std::nullopt;
  return static_cast<ElementId>(std::stoul(line.substr(0, pos)));
}

// Keeps the whole lines keyed at or below `last`; drops everything when `last` is empty.
void trim_log(const fs::path& path, std::optional<ElementId> last) {
  if (!fs::exists(path)) return;
  std::string text = read_file(path);
  std::string kept;
  std::size_t start = 0;
  while (last) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) break;
    std::string line = text.substr(start, nl - start);
    auto key = line_key(line);
    if (key && *key > *last) break;
    kept += line + "\n";
    start = nl + 1;
  }
  open_out(path, std::ios::trunc | std::ios::binary) << kept;
}

std::size_t poly_bytes(const SymLaurentPoly& p) {
  return sizeof(SymLaurentPoly) + p.half().size() * sizeof(Coeff) + 32;
}

}  // namespace

GroupTable load_group(const RunConfig& cfg) {
  if (!cfg.matrix_file.empty()) {
    const std::string name = fs::path(cfg.matrix_file).stem().string();
    return build_group(parse_matrix_text(read_file(cfg.matrix_file), name));
  }
  if (cfg.group.empty()) throw ParseError("either --group or --matrix is required");
  return build_group(cfg.group);
}

LogState read_positivity_log(const fs::path& path) {
  LogState st;
  if (!fs::exists(path)) return st;
  const std::string text = read_file(path);
  std::size_t start = 0;
  for (std::size_t nl; (nl = text.find('\n', start)) != std::string::npos; start = nl + 1) {
    const std::string line = text.substr(start, nl - start);
    const auto key = line_key(line);
    const std::string tag = ": maxcoeff = ";
    const auto at = line.find(tag);
    if (!key || at == std::string::npos) throw ParseError("malformed positivity_log line: " + line);
    st.last_y = key;
    st.running_max = std::stoll(line.substr(at + tag.size()));
    st.complete_bytes = nl + 1;
  }
  return st;
}

int cmd_klplist(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  const KLStore store(g);
  std::vector<QPoly> polys;
  for (const QPoly& p : store.distinct_polynomials())
    if (p.degree() >= 0) polys.push_back(p);
  std::sort(polys.begin(), polys.end());
  std::string listing = "# " + std::to_string(polys.size()) + " distinct Kazhdan-Lusztig polynomials for " + g.name() + "\n";
  for (const QPoly& p : polys) listing += p.to_string() + "\n";
  fs::create_directories(cfg.outdir);
  open_out(cfg.outdir / "klplist", std::ios::trunc) << listing;
  out << listing;
  return finish(cfg, check_p1(store), out);
}

int cmd_decrklpol(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  return finish(cfg, check_p2(KLStore(g)), out);
}

int cmd_positivity(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  fs::create_directories(cfg.outdir);
  const fs::path log_path = cfg.outdir / "positivity_log";
  const fs::path verbose_path = cfg.outdir / "positivity_verbose_log";
  const fs::path error_path = cfg.outdir / "error_log";

  ElementId begin = 0, end = static_cast<ElementId>(g.size());
  if (cfg.range) {
    begin = cfg.range->first;
    end = cfg.range->second;
    if (begin > end || end > g.size()) throw InvalidIndex("--range must lie within [0, " + std::to_string(g.size()) + ")");
  }

  Coeff running = 0;
  if (cfg.resume) {
    const LogState st = read_positivity_log(log_path);
    if (fs::exists(log_path)) fs::resize_file(log_path, st.complete_bytes);
    trim_log(verbose_path, st.last_y);
    trim_log(error_path, st.last_y);
    if (st.last_y) {
      begin = std::max(begin, *st.last_y + 1);
      running = st.running_max;
    }
  } else {
    for (const auto& p : {log_path, verbose_path, error_path}) open_out(p, std::ios::trunc);
  }
  std::ofstream log = open_out(log_path, std::ios::app);
  std::ofstream verbose = open_out(verbose_path, std::ios::app);
  std::ofstream errors = open_out(error_path, std::ios::app);

  // A resumed run pays only for rebuilding the W-graph.
  const WGraph wg = build_wgraph(KLStore(g));

  struct Outcome {
    CheckReport report;
    Coeff column_max = 0;
    std::size_t distinct = 0;
    std::vector<SymLaurentPoly> polys;
    std::string error;
  };
  const unsigned threads = std::max(1U, cfg.threads);
  const ElementId window = 2 * threads + 2;
  const std::size_t budget = cfg.store_budget_mib << 20;
  std::mutex mu;
  std::condition_variable cv;
  std::map<ElementId, Outcome> done;
  ElementId next = begin, emitted = begin;

  auto worker = [&] {
    for (;;) {
      ElementId y;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return next >= end || next < emitted + window; });
        if (next >= end) return;
        y = next++;
      }
      Outcome o;
      try {
        if (cfg.column_delay_ms) std::this_thread::sleep_for(std::chrono::milliseconds(cfg.column_delay_ms));
        const HColumn col = column(wg, y, cfg.strategy);
        o.report = check_column(g, col);
        o.column_max = col.max_coefficient();
        o.distinct = col.store().size();
        if (budget) o.polys = col.store().polynomials();
      } catch (const std::exception& e) {
        o.report = CheckReport("P3", g.name());
        o.error = e.what();
        o.report.fail(o.error);
      }
      {
        std::lock_guard lock(mu);
        done.emplace(y, std::move(o));
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  CheckReport total("P3", g.name());
  std::unordered_set<SymLaurentPoly, SymLaurentPolyHash> global;
  std::size_t global_bytes = 0;
  bool saturated = false;
  for (ElementId y = begin; y < end; ++y) {
    Outcome o;
    {
      std::unique_lock lock(mu);
      cv.wait(lock, [&] { return done.count(y) != 0; });
      o = std::move(done.at(y));
      done.erase(y);
      emitted = y + 1;
    }
    cv.notify_all();
    // Errors go out before the log line, so a resumed run never loses them.
    if (!o.error.empty()) {
      errors << y << ": " << o.error << "\n";
    } else {
      for (const auto& c : o.report.counterexamples) errors << y << ": " << c << "\n";
      if (o.report.failures > static_cast<std::int64_t>(o.report.counterexamples.size()))
        errors << y << ": " << o.report.failures - static_cast<std::int64_t>(o.report.counterexamples.size())
               << " further counterexamples\n";
    }
    errors.flush();
    for (auto& p : o.polys) {
      if (saturated || global.count(p)) continue;
      if (global_bytes + poly_bytes(p) > budget) {
        saturated = true;
        continue;
      }
      global_bytes += poly_bytes(p);
      global.insert(std::move(p));
    }
    running = std::max(running, o.column_max);
    verbose << y << ": column maxcoeff = " << o.column_max << ", distinct = " << o.distinct << "\n";
    verbose.flush();
    log << y << ": maxcoeff = " << running << "\n";
    log.flush();
    total.merge(o.report);
  }
  for (auto& t : pool) t.join();

  total.record_max("max_coefficient", running);
  if (budget) {
    total.count("global_distinct", static_cast<std::int64_t>(global.size()));
    total.count("global_store_saturated", saturated ? 1 : 0);
  }
  errors.close();
  const bool clean = fs::file_size(error_path) == 0;
  const int code = finish(cfg, total, out);
  return code == 0 && clean ? 0 : 1;
}

int cmd_cycltable(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  const WGraph wg = build_wgraph(KLStore(g));
  const HColumn col = column(wg, element_arg(g, cfg.y, "y"), cfg.strategy);
  for (ElementId x = 0; x < g.size(); ++x)
    if (!col.row(x).empty()) out << format_product_line(g, col, x) << "\n";
  return 0;
}

int cmd_cprod(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  const ElementId x = element_arg(g, cfg.x, "x");
  const WGraph wg = build_wgraph(KLStore(g));
  const HColumn col = column(wg, element_arg(g, cfg.y, "y"), cfg.strategy);
  out << format_c_combo(g, col.product(x)) << "\n";
  return 0;
}

int cmd_triangle(const RunConfig& cfg, std::ostream& out) {
  using namespace dihedral;
  std::optional<int> m;
  if (cfg.m > 0) m = cfg.m;
  const int rows = cfg.rows > 0 ? cfg.rows : (m ? *m - 1 : cfg.k + 2);
  out << triangle_table(m, cfg.k, parse_side(cfg.side), rows).render(cfg.k);
  return 0;
}

int cmd_dihedral(const RunConfig& cfg, std::ostream& out) {
  using namespace dihedral;
  const Side side = parse_side(cfg.side);
  const DihedralProduct p = cfg.m > 0 ? finite_product(cfg.m, side, cfg.i, cfg.k) : infinite_product(side, cfg.i, cfg.k);
  out << p.to_string() << "\n";
  return 0;
}

int cmd_dihedral_check(const RunConfig& cfg, std::ostream& out) {
  const int lo = cfg.m > 0 ? cfg.m : 2, hi = cfg.m > 0 ? cfg.m : 12;
  int code = 0;
  for (int m = lo; m <= hi; ++m) code |= finish(cfg, dihedral::crosscheck_dihedral(m), out);
  return code;
}

int cmd_extremal(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  const BruhatIdeals ideals(g);
  const ExtremalPairs pairs(g, ideals);
  CheckReport r("extremal-pairs", g.name());
  r.count("elements", static_cast<std::int64_t>(g.size()));
  r.count("extremal_pairs", static_cast<std::int64_t>(pairs.count_all()));
  r.count("inverse_reduced", static_cast<std::int64_t>(pairs.count()));
  return finish(cfg, r, out);
}

int cmd_w0identity(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  const KLStore store(g);
  return finish(cfg, check_w0_identity(store, build_wgraph(store)), out);
}

int cmd_strategy(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  return finish(cfg, check_strategy_invariance(build_wgraph(KLStore(g))), out);
}

int cmd_symmetry(const RunConfig& cfg, std::ostream& out) {
  const GroupTable g = load_group(cfg);
  return finish(cfg, check_h_symmetry(build_wgraph(KLStore(g))), out);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using Handler = int (*)(const RunConfig&, std::ostream&);
  static const std::map<std::string, Handler> handlers = {
      {"klplist", cmd_klplist},       {"decrklpol", cmd_decrklpol},
      {"positivity", cmd_positivity}, {"cycltable", cmd_cycltable},
      {"cprod", cmd_cprod},           {"triangle", cmd_triangle},
      {"dihedral", cmd_dihedral},     {"dihedral-check", cmd_dihedral_check},
      {"extremal", cmd_extremal},     {"w0identity", cmd_w0identity},
      {"strategy", cmd_strategy},     {"symmetry", cmd_symmetry},
  };
  auto it = handlers.find(cfg.command);
  if (it == handlers.end()) {
    err << "unknown command '" << cfg.command << "'\n";
    return 2;
  }
  try {
    return it->second(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace heckepos::cli

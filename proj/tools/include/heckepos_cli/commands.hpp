#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "heckepos/checks.hpp"
#include "heckepos/coxeter.hpp"
#include "heckepos/hecke.hpp"

namespace heckepos::cli {

struct RunConfig {
  std::string group;              // preset name, e.g. "H3"
  std::string matrix_file;        // alternative to `group`
  std::string command;
  std::optional<std::pair<ElementId, ElementId>> range;  // [begin, end)
  DescentStrategy strategy = DescentStrategy::First;
  unsigned threads = 1;
  bool resume = false;
  std::filesystem::path outdir = ".";
  std::size_t store_budget_mib = 0;  // 0 disables the global h store
  std::string report_json;           // append one JSON record per check when set
  std::string x, y;
  int m = 0;  // 0 means the infinite dihedral group for `triangle`
  int k = 0;
  int i = 0;
  std::string side = "same";
  int rows = 0;
  unsigned column_delay_ms = 0;  // slows the positivity sweep down; for checkpoint tests
};

inline constexpr const char* kCommands[] = {"klplist",  "decrklpol",  "positivity", "cycltable",
                                            "cprod",    "triangle",   "dihedral",   "dihedral-check",
                                            "extremal", "w0identity", "strategy",   "symmetry"};

GroupTable load_group(const RunConfig& cfg);

/// Dispatches cfg.command; returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_klplist(const RunConfig& cfg, std::ostream& out);
int cmd_decrklpol(const RunConfig& cfg, std::ostream& out);
int cmd_positivity(const RunConfig& cfg, std::ostream& out);
int cmd_cycltable(const RunConfig& cfg, std::ostream& out);
int cmd_cprod(const RunConfig& cfg, std::ostream& out);
int cmd_triangle(const RunConfig& cfg, std::ostream& out);
int cmd_dihedral(const RunConfig& cfg, std::ostream& out);
int cmd_dihedral_check(const RunConfig& cfg, std::ostream& out);
int cmd_extremal(const RunConfig& cfg, std::ostream& out);
int cmd_w0identity(const RunConfig& cfg, std::ostream& out);
int cmd_strategy(const RunConfig& cfg, std::ostream& out);
int cmd_symmetry(const RunConfig& cfg, std::ostream& out);

/// State recovered from an existing positivity_log.
struct LogState {
  std::optional<ElementId> last_y;
  Coeff running_max = 0;
  std::uintmax_t complete_bytes = 0;  // length of the prefix made of whole lines
};
/// Parses "<y>: maxcoeff = <N>" lines; a torn final line is ignored.
LogState read_positivity_log(const std::filesystem::path& path);

}  // namespace heckepos::cli

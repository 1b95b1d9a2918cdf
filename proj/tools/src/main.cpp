#include <iostream>

#include "CLI11.hpp"
#include "heckepos_cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace heckepos;
  cli::RunConfig cfg;
  std::string range, strategy = "first";

  CLI::App app{"Kazhdan-Lusztig polynomials and KL-basis structure constants for finite Coxeter groups"};
  app.add_option("--group,-g", cfg.group, "Preset type: A1..A6, B2..B6, D4..D6, F4, G2, H3, H4, I2(m)");
  app.add_option("--matrix", cfg.matrix_file, "Coxeter matrix file: rank, then the upper triangle");
  app.add_option("--command,-c", cfg.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(cli::kCommands), std::end(cli::kCommands))));
  app.add_option("--range", range, "Half-open y range BEGIN:END for positivity");
  app.add_option("--strategy", strategy, "Descent used by the column recursion")
      ->check(CLI::IsMember({"first", "last"}));
  app.add_option("--threads,-j", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--resume", cfg.resume, "Continue after the last line of positivity_log");
  app.add_option("--outdir,-o", cfg.outdir, "Directory for positivity_log and error_log");
  app.add_option("--store-budget", cfg.store_budget_mib, "MiB for the global h-polynomial store (0 = off)");
  app.add_option("--report-json", cfg.report_json, "Append one JSON record per check to this file");
  app.add_option("--x", cfg.x, "Element: id or word such as [1,2,1]");
  app.add_option("--y", cfg.y, "Element: id or word such as [1,2,1]");
  app.add_option("--m", cfg.m, "Dihedral order parameter (0 = infinite)");
  app.add_option("--k", cfg.k, "Dihedral right factor length");
  app.add_option("--i", cfg.i, "Dihedral left factor length");
  app.add_option("--side", cfg.side, "Dihedral left factor side")->check(CLI::IsMember({"same", "opposite"}));
  app.add_option("--rows", cfg.rows, "Triangle table rows");
  app.add_option("--column-delay-ms", cfg.column_delay_ms, "Sleep before each column (checkpoint testing)")
      ->group("");
  CLI11_PARSE(app, argc, argv);

  cfg.strategy = parse_strategy(strategy);
  if (!range.empty()) {
    const auto colon = range.find(':');
    if (colon == std::string::npos) {
      std::cerr << "--range expects BEGIN:END\n";
      return 2;
    }
    cfg.range = {static_cast<ElementId>(std::stoul(range.substr(0, colon))),
                 static_cast<ElementId>(std::stoul(range.substr(colon + 1)))};
  }
  return cli::run(cfg, std::cout, std::cerr);
}

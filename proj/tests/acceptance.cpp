// Acceptance suite: one PASS/FAIL/SKIP line per criterion; exit status 1 if any FAIL.

#include <fcntl.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "heckepos/checks.hpp"
#include "heckepos/dihedral.hpp"
#include "heckepos/hecke.hpp"
#include "heckepos/klbase.hpp"
#include "heckepos_cli/commands.hpp"

extern char** environ;

using namespace heckepos;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  enum Kind { Pass, Fail, Skip } kind = Pass;
  std::string detail;
};

Outcome pass(std::string d) { return {Outcome::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Outcome::Fail, std::move(d)}; }

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = fail(std::string("exception: ") + e.what());
  }
  const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const char* tag = o.kind == Outcome::Pass ? "PASS" : o.kind == Outcome::Fail ? "FAIL" : "SKIP";
  if (o.kind == Outcome::Fail) ++failures;
  std::ostringstream line;
  line << "[" << tag << "] " << std::setw(2) << id << " " << title << " -- " << o.detail << " (" << std::fixed
       << std::setprecision(2) << sec << " s)";
  std::cout << line.str() << std::endl;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const fs::path& p) {
  const std::string s = slurp(p);
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

pid_t spawn(const std::vector<std::string>& args) {
  std::vector<char*> argv;
  for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
  argv.push_back(nullptr);
  posix_spawn_file_actions_t quiet;
  posix_spawn_file_actions_init(&quiet);
  posix_spawn_file_actions_addopen(&quiet, 1, "/dev/null", O_WRONLY, 0);
  pid_t pid = 0;
  const int rc = posix_spawn(&pid, argv[0], &quiet, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&quiet);
  if (rc != 0) throw std::runtime_error("spawn failed");
  return pid;
}

int wait_exit(pid_t pid) {
  int status = 0;
  waitpid(pid, &status, 0);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string first_failure(const CheckReport& r) {
  return r.counterexamples.empty() ? r.check + " failed" : r.check + ": " + r.counterexamples.front();
}

Outcome all_pass(const std::vector<CheckReport>& reports, const std::string& summary) {
  for (const auto& r : reports)
    if (!r.passed) return fail(r.group + " " + first_failure(r));
  return pass(summary);
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  fs::path workdir = fs::temp_directory_path() / "heckepos_acceptance";
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  CLI::App app{"acceptance criteria"};
  app.add_flag("--extended", extended, "Also run the full H4 positivity sweep");
  app.add_option("--workdir", workdir, "Scratch directory");
  app.add_option("--threads", threads, "Workers for the extended run");
  fs::path h4_dir;
  app.add_option("--h4-dir", h4_dir, "Output directory of the extended run; an existing run there is resumed");
  CLI11_PARSE(app, argc, argv);
  fs::create_directories(workdir);

  criterion(1, "dihedral closed forms equal generic columns, I2(2..12)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckReport> reports;
    std::int64_t products = 0;
    for (int m = 2; m <= 12; ++m) {
      reports.push_back(dihedral::crosscheck_dihedral(m));
      products += reports.back().counters["products"];
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (sec >= 10) return fail("took " + std::to_string(sec) + " s");
    // the worked example, through both the closed form and the engine
    const std::string eq1 = dihedral::finite_product(9, dihedral::Side::Same, 6, 6).to_string();
    if (eq1 != "2c_2 + 2c_4 + c_6 + (v^-3+2v^-1+2v+v^3)c_9") return fail("example reads " + eq1);
    const GroupTable g = build_group("I2(9)");
    const WGraph wg = build_wgraph(KLStore(g));
    const ElementId y = parse_element(g, "[1,2,1,2,1,2]");
    const std::string line = format_product_line(g, column(wg, y), y);
    if (line != "11(121212): 3(12) -> 2; 7(1212) -> 2; 11(121212) -> 1; 17(121212121) -> v^-3+2v^-1+2v+v^3")
      return fail("engine line reads " + line);
    return all_pass(reports, std::to_string(products) + " products, example (1): " + eq1);
  });

  criterion(2, "triangle tables reproduce the printed tables", [] {
    using V = std::vector<std::vector<Coeff>>;
    const V inf = {{0, 1, 0, 1, 0, 0, 0, 0}, {1, 0, 2, 0, 1, 0, 0, 0}, {0, 2, 0, 2, 0, 1, 0, 0},
                   {1, 0, 2, 0, 2, 0, 1, 0}, {0, 1, 0, 2, 0, 2, 0, 1}};
    const V fin = {{0, 0, 0, 0, 1, 0, 1, 0}, {0, 0, 0, 1, 0, 2, 0, 1}, {0, 0, 1, 0, 2, 0, 2, 0},
                   {0, 1, 0, 2, 0, 2, 0, 1}, {1, 0, 2, 0, 2, 0, 1, 0}, {0, 2, 0, 2, 0, 1, 0, 0},
                   {1, 0, 2, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0}};
    if (dihedral::triangle_table(std::nullopt, 3, dihedral::Side::Same, 5).rows != inf)
      return fail("infinite k=3 table differs");
    if (dihedral::triangle_table(9, 6, dihedral::Side::Same, 9).rows != fin) return fail("m=9 k=6 table differs");
    return pass("infinite k=3 (5 rows) and m=9 k=6 (8 rows + zero row 9)");
  });

  criterion(3, "KL basis: recursion equals bar-invariance oracle", [] {
    std::size_t elements = 0;
    for (std::string name : {"A3", "B3", "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "H3"}) {
      const GroupTable g = build_group(name);
      const KLStore store(g);
      KLBasisOracle oracle(g);
      for (ElementId y = 0; y < g.size(); ++y, ++elements)
        if (!(oracle.c(y) == c_in_t_basis(store, y))) return fail(name + " differs at " + format_element(g, y));
    }
    return pass(std::to_string(elements) + " elements over A3, B3, I2(2..8), H3");
  });

  criterion(4, "structure constants expand to the t-basis product", [] {
    std::size_t pairs = 0;
    for (std::string name : {"A2", "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)"}) {
      const GroupTable g = build_group(name);
      const KLStore store(g);
      const WGraph wg = build_wgraph(store);
      for (ElementId y = 0; y < g.size(); ++y) {
        const HColumn col = column(wg, y);
        const TCombo cy = c_in_t_basis(store, y);
        for (ElementId x = 0; x < g.size(); ++x, ++pairs)
          if (!(c_to_t(store, col.product(x)) == t_product(g, c_in_t_basis(store, x), cy)))
            return fail(name + " differs at x=" + format_element(g, x) + " y=" + format_element(g, y));
      }
    }
    return pass(std::to_string(pairs) + " pairs over A2, I2(2..6)");
  });

  criterion(5, "H3 full sweep: P1, P2, P3, unimodality", [] {
    const GroupTable g = build_group("H3");
    const KLStore store(g);
    const WGraph wg = build_wgraph(store);
    std::vector<CheckReport> reports{check_p1(store), check_p2(store)};
    CheckReport uni("unimodality", g.name());
    for (ElementId y = 0; y < g.size(); ++y) uni.merge(check_unimodal(g, column(wg, y)));
    reports.push_back(uni);
    reports.push_back(check_p3(wg, 0, static_cast<ElementId>(g.size())));
    const auto& p3 = reports.back();
    return all_pass(reports, "P3 over " + std::to_string(p3.counters.at("columns")) + " columns, " +
                                 std::to_string(p3.counters.at("nonzero_triples")) + " nonzero h, max coefficient " +
                                 std::to_string(p3.counters.at("max_coefficient")));
  });

  criterion(6, "first and last descent give identical tables (H3, I2(7))", [] {
    std::vector<CheckReport> reports;
    for (const char* name : {"H3", "I2(7)"}) {
      const GroupTable g = build_group(name);
      reports.push_back(check_strategy_invariance(build_wgraph(KLStore(g))));
    }
    return all_pass(reports, "tables and max coefficients agree");
  });

  criterion(7, "h(x,y,z) = h(y^-1,x^-1,z^-1) on all H3 triples", [] {
    const GroupTable g = build_group("H3");
    const CheckReport r = check_h_symmetry(build_wgraph(KLStore(g)));
    return all_pass({r}, std::to_string(r.counters.at("nonzero_triples")) + " nonzero h compared with their mirrors");
  });

  criterion(8, "c_x c_w0 identity (A3, B3, I2(2..8), H3; unimodal on A3, B3)", [] {
    std::vector<CheckReport> reports;
    for (std::string name : {"A3", "B3", "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "H3"}) {
      const GroupTable g = build_group(name);
      const KLStore store(g);
      const bool weyl = name == "A3" || name == "B3";
      reports.push_back(check_w0_identity(store, build_wgraph(store), weyl));
    }
    return all_pass(reports, "identity holds; v^l(x) h_x palindromic and unimodal on A3, B3");
  });

  criterion(9, "H4 inverse-reduced extremal pairs = 2 348 942", [] {
    const GroupTable g = build_group("H4");
    const BruhatIdeals ideals(g);
    const ExtremalPairs pairs(g, ideals);
    const std::string got = std::to_string(pairs.count());
    if (pairs.count() != 2348942) return fail("counted " + got);
    return pass("counted " + got + " (" + std::to_string(pairs.count_all()) + " before the inverse reduction)");
  });

  criterion(10, "H4 full positivity sweep, final maxcoeff = 710904968", [&]() -> Outcome {
    if (!extended) return {Outcome::Skip, "desk-scale suite; run with --extended"};
    cli::RunConfig cfg;
    cfg.group = "H4";
    cfg.command = "positivity";
    cfg.outdir = h4_dir.empty() ? workdir / "h4" : h4_dir;
    cfg.threads = threads;
    cfg.resume = true;
    std::ostringstream out, err;
    const int code = cli::run(cfg, out, err);
    const cli::LogState st = cli::read_positivity_log(cfg.outdir / "positivity_log");
    if (code != 0) return fail("exit code " + std::to_string(code) + ": " + out.str() + err.str());
    if (!st.last_y || *st.last_y != 14399) return fail("log incomplete");
    if (st.running_max != 710904968) return fail("final maxcoeff " + std::to_string(st.running_max));
    return pass("14399: maxcoeff = 710904968, error_log empty");
  });

  criterion(11, "positivity killed at a random y and resumed matches an uninterrupted run", [&] {
    const fs::path ref = workdir / "resume_ref", cut = workdir / "resume_cut";
    fs::remove_all(ref);
    fs::remove_all(cut);
    cli::RunConfig cfg;
    cfg.group = "H3";
    cfg.command = "positivity";
    cfg.outdir = ref;
    std::ostringstream sink;
    if (cli::run(cfg, sink, sink) != 0) return fail("reference run failed");

    std::random_device rd;
    const unsigned seed = rd();
    std::mt19937 rng(seed);
    const std::size_t target = std::uniform_int_distribution<std::size_t>(1, 110)(rng);
    const std::string tool = HECKEPOS_TOOL;
    const pid_t pid = spawn({tool, "-c", "positivity", "-g", "H3", "-o", cut.string(), "--threads", "2",
                             "--column-delay-ms", "15"});
    while (count_lines(cut / "positivity_log") < target) {
      int status = 0;
      if (waitpid(pid, &status, WNOHANG) == pid) return fail("run ended before it could be interrupted");
      std::this_thread::sleep_for(std::chrono::milliseconds(1));
    }
    kill(pid, SIGKILL);
    wait_exit(pid);
    const cli::LogState st = cli::read_positivity_log(cut / "positivity_log");
    const std::string killed_at = st.last_y ? std::to_string(*st.last_y) : "none";
    if (st.last_y && *st.last_y >= 119) return fail("run finished before the kill");

    const int code = wait_exit(spawn({tool, "-c", "positivity", "-g", "H3", "-o", cut.string(), "--resume"}));
    if (code != 0) return fail("resume exited with " + std::to_string(code));
    for (const char* f : {"positivity_log", "positivity_verbose_log", "error_log"})
      if (slurp(ref / f) != slurp(cut / f)) return fail(std::string(f) + " differs after resume at y=" + killed_at);
    return pass("killed after y=" + killed_at + " (seed " + std::to_string(seed) + "), logs byte-identical");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

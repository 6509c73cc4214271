#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"

namespace {

using weuler::cli::Options;
using weuler::cli::RunReport;

std::string join_args(int argc, char** argv) {
  std::string echo;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) echo += ' ';
    echo += argv[i];
  }
  return echo;
}

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_flag("--table", opts.table, "render a readable table instead of JSON");
  cmd->add_flag("--json", [](std::int64_t) {}, "emit canonical JSON (default)");
  cmd->add_flag("--timing", opts.timing, "include wall-clock phases in the JSON report");
  cmd->add_option("--budget", opts.budget, "enumeration scan budget override");
}

int emit(const RunReport& report, const Options& opts) {
  if (opts.table) {
    std::cout << weuler::cli::render_table(report.report);
  } else {
    std::cout << report.report.dump(2) << "\n";
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact orbifold Euler characteristics of finite group actions and their "
               "symmetric-product generating functions"};
  app.require_subcommand(1);

  Options opts;
  opts.echo = join_args(argc, argv);

  auto* chi = app.add_subcommand("chi", "generalized Euler characteristic with every cross-route");
  chi->add_option("--group", opts.group_file, "group JSON file")->required();
  chi->add_option("--gset", opts.gset_file, "G-set or chi-table JSON file (default: point)");
  chi->add_option("--d", opts.d, "number of commuting directions");
  chi->add_option("--p", opts.p, "restrict to p-power order (p prime)");
  chi->add_option("--K", opts.k_file, "presentation JSON file overriding --d/--p");
  add_common(chi, opts);

  auto* genfun = app.add_subcommand("genfun", "symmetric-product generating function, both sides");
  genfun->add_option("--group", opts.group_file, "group JSON file")->required();
  genfun->add_option("--gset", opts.gset_file, "G-set JSON file (default: point)");
  genfun->add_option("--d", opts.d, "number of commuting directions");
  genfun->add_option("--p", opts.p, "p-typical version (p prime)");
  genfun->add_option("--order", opts.order, "series truncation order");
  genfun->add_option("--side", opts.side, "lhs | rhs | both")
      ->check(CLI::IsMember({"lhs", "rhs", "both"}));
  add_common(genfun, opts);

  auto* wreath = app.add_subcommand("wreath", "wreath product structure data");
  wreath->add_option("--group", opts.group_file, "group JSON file")->required();
  wreath->add_option("--n", opts.n, "wreath degree");
  wreath->add_flag("--types", opts.types, "emit the full type table");
  add_common(wreath, opts);

  auto* mobius = app.add_subcommand("mobius", "Moebius tables over the subgroup lattice");
  mobius->add_option("--group", opts.group_file, "group JSON file")->required();
  mobius->add_option("--gset", opts.gset_file, "G-set or chi-table JSON file (default: point)");
  mobius->add_option("--kind", opts.kind, "subgroup | abelian-chi | abelian-one | all")
      ->check(CLI::IsMember({"subgroup", "abelian-chi", "abelian-one", "all"}));
  add_common(mobius, opts);

  auto* j = app.add_subcommand("j", "subgroup counts of free and p-adic modules");
  j->add_option("--d", opts.d, "module rank");
  j->add_option("--p", opts.p, "p-adic counts (p prime)");
  j->add_option("--max", opts.max_r, "largest index");
  add_common(j, opts);

  auto* verify = app.add_subcommand("verify", "run the identity suites");
  verify->add_option("--suite", opts.suite, "chi | wreath | arithmetic | scaling | morava | series | all")
      ->check(CLI::IsMember({"chi", "wreath", "arithmetic", "scaling", "morava", "series", "all"}));
  verify->add_option("--group", opts.group_file, "group JSON file (default: built-in corpus)");
  verify->add_option("--gset", opts.gset_file, "G-set JSON file");
  verify->add_option("--d", opts.d, "largest d");
  verify->add_option("--p", opts.p, "restrict to a single prime");
  verify->add_option("--max-n", opts.max_n, "brute-force reach for wreath/series suites");
  verify->add_option("--max", opts.max_r, "range for the arithmetic suite");
  add_common(verify, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (chi->parsed()) return emit(weuler::cli::cmd_chi(opts), opts);
    if (genfun->parsed()) return emit(weuler::cli::cmd_genfun(opts), opts);
    if (wreath->parsed()) return emit(weuler::cli::cmd_wreath(opts), opts);
    if (mobius->parsed()) return emit(weuler::cli::cmd_mobius(opts), opts);
    if (j->parsed()) return emit(weuler::cli::cmd_j(opts), opts);
    if (verify->parsed()) return emit(weuler::cli::cmd_verify(opts), opts);
  } catch (const weuler::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const weuler::SizeGuardExceeded& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const weuler::CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const weuler::InvalidInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const weuler::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

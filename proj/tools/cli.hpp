#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "weuler/json_io.hpp"
#include "weuler/verify.hpp"

namespace weuler::cli {

/// Parsed command-line options shared by the subcommands; main() fills this
/// from flags, tests construct it directly.
struct Options {
  std::string echo;  // command line as typed, echoed in the report

  std::string group_file;
  std::string gset_file;
  std::string k_file;

  unsigned d = 1;
  std::optional<unsigned> p;
  std::size_t order = 8;     // series truncation
  std::size_t n = 2;         // wreath degree
  std::size_t max_n = 2;     // brute-force reach for series/wreath suites
  std::uint64_t max_r = 10;  // range for subgroup counts
  std::string suite = "all";
  std::string side = "both";
  std::string kind = "all";  // moebius table selection
  bool types = false;
  bool table = false;   // human-readable rendering instead of JSON
  bool timing = false;  // include wall-clock phases in the JSON report
  std::optional<std::uint64_t> budget;
};

/// Exit codes: 0 all checks pass, 1 a mathematical check failed,
/// 2 input/usage error, 3 a budget or size guard tripped.
struct RunReport {
  Json report;
  int exit_code = 0;
};

RunReport cmd_chi(const Options& opts);
RunReport cmd_genfun(const Options& opts);
RunReport cmd_wreath(const Options& opts);
RunReport cmd_mobius(const Options& opts);
RunReport cmd_j(const Options& opts);
RunReport cmd_verify(const Options& opts);

/// Render a report as aligned text for --table mode.
std::string render_table(const Json& report);

}  // namespace weuler::cli

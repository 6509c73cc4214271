#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cli.hpp"
#include "oracles.hpp"

using namespace weuler;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const Json& content)
      : path("weuler_test_" + name + ".json") {
    std::ofstream out(path);
    out << content.dump();
  }
  ~TempFile() { std::remove(path.c_str()); }
};

Json z2_json() {
  return Json{{"kind", "table"}, {"order", 2}, {"mul", {{0, 1}, {1, 0}}}, {"label", "Z2"}};
}

Json s3_json() {
  return Json{{"kind", "perm"}, {"degree", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}},
              {"label", "S3"}};
}

}  // namespace

TEST_CASE("group JSON round trip") {
  const ParsedGroup g = group_from_json(z2_json());
  CHECK(g.group->order() == 2);
  CHECK(g.group->label() == "Z2");
  CHECK_FALSE(g.perms.has_value());
  CHECK(group_from_json(group_to_json(*g.group)).group->order() == 2);

  const ParsedGroup s3 = group_from_json(s3_json());
  CHECK(s3.group->order() == 6);
  REQUIRE(s3.perms.has_value());
  CHECK(s3.perms->degree == 3);

  CHECK_THROWS_AS(group_from_json(Json{{"kind", "weird"}}), InvalidInput);
  CHECK_THROWS_AS(group_from_json(Json{{"kind", "table"}, {"order", 2}}), InvalidInput);
}

TEST_CASE("G-set JSON forms") {
  const ParsedGroup g = group_from_json(z2_json());

  const GSet by_table = gset_from_json(g, Json{{"size", 2}, {"action", {{0, 1}, {1, 0}}}});
  CHECK(by_table.size() == 2);
  CHECK(by_table.orbit_count() == 1);

  const GSet by_gens = gset_from_json(
      g, Json{{"size", 2}, {"generator_images", {{"1", {1, 0}}}}});
  for (Elem e = 0; e < 2; ++e)
    for (Elem x = 0; x < 2; ++x) CHECK(by_gens.act(e, x) == by_table.act(e, x));

  CHECK_THROWS_AS(gset_from_json(g, Json{{"size", 2}, {"action", {{1, 0}, {0, 1}}}}), NotAnAction);
  CHECK_THROWS_AS(gset_from_json(g, Json{{"size", 2}}), InvalidInput);
  // generators that do not generate
  CHECK_THROWS_AS(gset_from_json(g, Json{{"size", 2}, {"generator_images", Json::object()}}),
                  NotAnAction);
}

TEST_CASE("chi-table JSON") {
  const ParsedGroup g = group_from_json(z2_json());
  const Json table{{"chi", {{{"subgroup", {0}}, {"value", 2}}, {{"subgroup", {0, 1}}, {"value", 0}}}}};
  const VirtualSpace v = gspace_from_json(g, table);
  CHECK(v.chi_fixed({}) == 2);

  const auto space = space_from_json(g, table);
  CHECK_FALSE(space->is_set());
  const auto honest = space_from_json(g, Json{{"size", 1}, {"action", {{0}, {0}}}});
  CHECK(honest->is_set());
}

TEST_CASE("presentation JSON") {
  CHECK(presentation_from_json(Json{{"kind", "free_abelian"}, {"d", 2}}).is_free_abelian());
  const Presentation zp = presentation_from_json(
      Json{{"kind", "profinite_abelian"}, {"d", 1}, {"p", 3}});
  CHECK(zp.uniform_p() == 3u);
  const Presentation pres = presentation_from_json(
      Json{{"kind", "presented"}, {"generators", 2}, {"relators", {{1, 1}, {2, 2, 2}}}});
  CHECK(pres.gens == 2);
  CHECK(pres.relators.size() == 2);
  CHECK_THROWS_AS(presentation_from_json(Json{{"kind", "nope"}}), InvalidInput);
}

TEST_CASE("series JSON keeps big integers exact") {
  PowerSeries s(3);
  s[0] = 1;
  s[2] = BigInt("123456789012345678901234567890");
  s[3] = -7;
  const PowerSeries back = series_from_json(series_to_json(s));
  CHECK(back == s);
}

TEST_CASE("element type JSON round trip") {
  ElementType t;
  t.n = 5;
  t.entries = {{0, 1, 3}, {1, 2, 1}};
  CHECK(element_type_from_json(element_type_to_json(t)) == t);
}

TEST_CASE("cli: j table") {
  cli::Options opts;
  opts.echo = "j --d 2 --max 10";
  opts.d = 2;
  opts.max_r = 10;
  const cli::RunReport report = cli::cmd_j(opts);
  CHECK(report.exit_code == 0);
  const std::vector<std::string> expected{"1", "3", "4", "7", "6", "12", "8", "15", "13", "18"};
  CHECK(report.report["results"]["values"].get<std::vector<std::string>>() == expected);
}

TEST_CASE("cli: chi on Z2") {
  TempFile group("z2", z2_json());
  cli::Options opts;
  opts.group_file = group.path;
  opts.d = 2;
  const cli::RunReport report = cli::cmd_chi(opts);
  CHECK(report.exit_code == 0);
  CHECK(report.report["results"]["value"] == "4");
  CHECK(report.report["results"]["routes"]["definition"] == "4");
  CHECK(report.report["results"]["routes"]["classes"] == "4");
  CHECK(report.report["results"]["routes"]["recursion"] == "4");
  CHECK(report.report["results"]["routes"]["mobius"] == "4");
}

TEST_CASE("cli: genfun equality on Z2") {
  TempFile group("z2gen", z2_json());
  cli::Options opts;
  opts.group_file = group.path;
  opts.d = 1;
  opts.order = 6;
  opts.side = "both";
  const cli::RunReport report = cli::cmd_genfun(opts);
  CHECK(report.exit_code == 0);
  CHECK(report.report["results"]["equal"] == true);
  CHECK(report.report["results"]["exponent"] == "2");
  // two commuting colors: coefficients of a double partition function
  const auto rhs = report.report["results"]["rhs"]["coeffs"].get<std::vector<std::string>>();
  CHECK(rhs == std::vector<std::string>{"1", "2", "5", "10", "20", "36", "65"});
  // n = 6 would need a dense table of the order-46080 wreath product, which
  // the byte guard rejects; the brute side reaches n = 5.
  CHECK(report.report["results"]["max_n_bruteforced"] == 5);
}

TEST_CASE("cli: chi accepts a presentation file") {
  TempFile group("z2k", z2_json());
  TempFile pres("kfile", Json{{"kind", "presented"}, {"generators", 1}, {"relators", {{1, 1}}}});
  cli::Options opts;
  opts.group_file = group.path;
  opts.k_file = pres.path;
  const cli::RunReport report = cli::cmd_chi(opts);
  CHECK(report.exit_code == 0);
  // maps from the two-element cyclic group: both of them, each central
  CHECK(report.report["results"]["value"] == "2");
}

TEST_CASE("cli: genfun one-sided runs") {
  TempFile group("z2side", z2_json());
  cli::Options opts;
  opts.group_file = group.path;
  opts.d = 1;
  opts.order = 4;

  opts.side = "rhs";
  const cli::RunReport rhs_only = cli::cmd_genfun(opts);
  CHECK(rhs_only.exit_code == 0);
  CHECK(rhs_only.report["results"].contains("rhs"));
  CHECK_FALSE(rhs_only.report["results"].contains("lhs"));

  opts.side = "lhs";
  const cli::RunReport lhs_only = cli::cmd_genfun(opts);
  CHECK(lhs_only.exit_code == 0);
  CHECK(lhs_only.report["results"].contains("lhs"));
  CHECK_FALSE(lhs_only.report["results"].contains("equal"));
}

TEST_CASE("cli: p-typical genfun") {
  TempFile group("z2p", z2_json());
  cli::Options opts;
  opts.group_file = group.path;
  opts.d = 1;
  opts.p = 2;
  opts.order = 4;
  const cli::RunReport report = cli::cmd_genfun(opts);
  CHECK(report.exit_code == 0);
  CHECK(report.report["results"]["equal"] == true);
  CHECK(report.report["results"]["exponent"] == "2");
}

TEST_CASE("cli: wreath type table") {
  TempFile group("s3", s3_json());
  cli::Options opts;
  opts.group_file = group.path;
  opts.n = 2;
  opts.types = true;
  const cli::RunReport report = cli::cmd_wreath(opts);
  CHECK(report.exit_code == 0);
  CHECK(report.report["results"]["order"] == "72");
  CHECK(report.report["results"]["type_count"] == 9);
  CHECK(report.report["checks"][0]["status"] == "pass");
}

TEST_CASE("cli: mobius tables") {
  TempFile group("s3m", s3_json());
  cli::Options opts;
  opts.group_file = group.path;
  opts.kind = "all";
  const cli::RunReport report = cli::cmd_mobius(opts);
  CHECK(report.exit_code == 0);
  CHECK(report.report["results"].contains("subgroup"));
  CHECK(report.report["results"].contains("abelian-chi"));
  CHECK(report.report["results"].contains("abelian-one"));
}

TEST_CASE("cli: verify on an explicit input") {
  TempFile group("z2v", z2_json());
  cli::Options opts;
  opts.group_file = group.path;
  opts.suite = "chi";
  opts.d = 2;
  const cli::RunReport report = cli::cmd_verify(opts);
  CHECK(report.exit_code == 0);
  CHECK(report.report["results"]["failed"] == 0);
}

TEST_CASE("cli: reports are byte-identical across runs") {
  TempFile group("z2det", z2_json());
  cli::Options opts;
  opts.group_file = group.path;
  opts.d = 1;
  const std::string a = cli::cmd_chi(opts).report.dump();
  const std::string b = cli::cmd_chi(opts).report.dump();
  CHECK(a == b);
}

TEST_CASE("cli: genfun refuses a formal chi table") {
  TempFile group("z2vt", z2_json());
  TempFile table("z2chi",
                 Json{{"chi", {{{"subgroup", {0}}, {"value", 2}}, {{"subgroup", {0, 1}}, {"value", 0}}}}});
  cli::Options opts;
  opts.group_file = group.path;
  opts.gset_file = table.path;
  CHECK_THROWS_AS(cli::cmd_genfun(opts), InvalidInput);
}

TEST_CASE("cli: error classes") {
  cli::Options opts;
  opts.group_file = "does_not_exist.json";
  CHECK_THROWS_AS(cli::cmd_chi(opts), InvalidInput);

  TempFile group("z2err", z2_json());
  cli::Options budget;
  budget.group_file = group.path;
  budget.d = 3;
  budget.budget = 2;
  CHECK_THROWS_AS(cli::cmd_chi(budget), BudgetExceeded);
}

TEST_CASE("cli: table rendering mentions failures") {
  Json report;
  report["command"] = "verify";
  report["results"] = Json{{"total", 2}};
  report["checks"] = Json::array({Json{{"name", "good"}, {"status", "pass"}, {"lhs", "1"}, {"rhs", "1"}},
                                  Json{{"name", "bad"}, {"status", "fail"}, {"lhs", "1"}, {"rhs", "2"}}});
  const std::string text = cli::render_table(report);
  CHECK(text.find("[pass] good") != std::string::npos);
  CHECK(text.find("[FAIL] bad") != std::string::npos);
  CHECK(text.find("1 != 2") != std::string::npos);
}

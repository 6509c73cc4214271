#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

namespace weuler::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct LoadedFile {
  Json json;
  std::string digest;
};

LoadedFile load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  LoadedFile f;
  f.digest = fnv1a_hex(bytes);
  try {
    f.json = Json::parse(bytes);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return f;
}

Limits effective_limits(const Options& opts) {
  Limits limits = default_limits();
  if (opts.budget) limits.hom_budget = *opts.budget;
  return limits;
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json out = Json::array();
  for (const Check& c : checks) {
    out.push_back(Json{{"name", c.name},
                       {"status", c.pass ? "pass" : "fail"},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs}});
  }
  return out;
}

/// Shared report assembly: command echo, input digests, deterministic body.
class ReportBuilder {
 public:
  ReportBuilder(const char* command, const Options& opts) : opts_(opts), start_(Clock::now()) {
    report_["command"] = command;
    report_["echo"] = opts.echo;
    report_["inputs"] = Json::object();
  }

  LoadedFile input(const char* role, const std::string& path) {
    LoadedFile f = load_json_file(path);
    report_["inputs"][role] = Json{{"path", path}, {"digest", f.digest}};
    return f;
  }

  void phase(const char* name) {
    const auto now = Clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    phases_[name] = ms;
    start_ = now;
  }

  RunReport finish(Json results, const std::vector<Check>& checks) {
    report_["results"] = std::move(results);
    report_["checks"] = checks_to_json(checks);
    if (opts_.timing) report_["timing_ms"] = phases_;
    RunReport out;
    out.exit_code = all_pass(checks) ? 0 : 1;
    out.report = std::move(report_);
    return out;
  }

 private:
  const Options& opts_;
  Json report_ = Json::object();
  Json phases_ = Json::object();
  Clock::time_point start_;
};

struct SpaceInputs {
  ParsedGroup group;
  std::unique_ptr<Space> space;
};

SpaceInputs load_space(ReportBuilder& rb, const Options& opts, const Limits& limits) {
  if (opts.group_file.empty()) throw InvalidInput("--group is required");
  SpaceInputs in;
  in.group = group_from_json(rb.input("group", opts.group_file).json, limits);
  if (opts.gset_file.empty()) {
    in.space = std::make_unique<GSet>(GSet::point(in.group.group));
  } else {
    in.space = space_from_json(in.group, rb.input("gset", opts.gset_file).json, limits);
  }
  return in;
}

std::string big_str(const BigInt& v) { return v.str(); }

}  // namespace

RunReport cmd_chi(const Options& opts) {
  ReportBuilder rb("chi", opts);
  const Limits limits = effective_limits(opts);
  SpaceInputs in = load_space(rb, opts, limits);

  Presentation K = opts.k_file.empty()
                       ? (opts.p ? Presentation::profinite_abelian(opts.d, *opts.p)
                                 : Presentation::free_abelian(opts.d))
                       : presentation_from_json(rb.input("K", opts.k_file).json);
  rb.phase("load");

  EulerOptions eopts;
  eopts.limits = limits;
  eopts.check_recursion = true;
  eopts.check_mobius = in.group.group->order() <= limits.lattice_cap;

  const ChiResult r = chi_k_routes(*in.space, K, eopts);
  rb.phase("compute");

  Json routes;
  routes["definition"] = big_str(r.via_definition);
  routes["classes"] = big_str(r.via_classes);
  if (r.via_recursion) routes["recursion"] = big_str(*r.via_recursion);
  if (r.via_mobius) routes["mobius"] = big_str(*r.via_mobius);

  std::vector<Check> checks;
  checks.push_back(make_check("chi-definition-vs-classes", r.via_definition, r.via_classes));
  if (r.via_recursion)
    checks.push_back(make_check("chi-class-recursion", *r.via_recursion, r.value));
  if (r.via_mobius)
    checks.push_back(make_check("chi-subgroup-expansion", *r.via_mobius, r.value));

  Json results;
  results["K"] = K.describe();
  results["value"] = big_str(r.value);
  results["routes"] = routes;
  results["scanned"] = r.scanned;
  return rb.finish(std::move(results), checks);
}

RunReport cmd_genfun(const Options& opts) {
  ReportBuilder rb("genfun", opts);
  const Limits limits = effective_limits(opts);
  SpaceInputs in = load_space(rb, opts, limits);
  const auto* X = dynamic_cast<const GSet*>(in.space.get());
  if (X == nullptr) throw InvalidInput("genfun needs an honest G-set, not a chi table");
  rb.phase("load");

  EulerOptions eopts;
  eopts.limits = limits;

  const BigInt exponent = opts.p ? chi_p_d(*X, opts.d, *opts.p, eopts) : chi_d(*X, opts.d, eopts);
  Json results;
  results["exponent"] = big_str(exponent);

  std::optional<PowerSeries> closed;
  if (opts.side == "rhs" || opts.side == "both") {
    closed = opts.p ? symmetric_series_product_p(exponent, opts.d, *opts.p, opts.order)
                    : symmetric_series_product(exponent, opts.d, opts.order);
    results["rhs"] = series_to_json(*closed);
  }
  std::optional<BruteSeries> brute;
  if (opts.side == "lhs" || opts.side == "both") {
    brute = symmetric_series_bruteforce(*X, opts.d, opts.order, opts.p, eopts);
    results["lhs"] = series_to_json(brute->series.truncated(brute->max_n));
    results["max_n_bruteforced"] = brute->max_n;
  }
  rb.phase("compute");

  std::vector<Check> checks;
  if (closed && brute) {
    bool equal = true;
    for (std::size_t n = 0; n <= brute->max_n; ++n) {
      checks.push_back(make_check("series-coefficient[n=" + std::to_string(n) + "]",
                                  brute->series[n], (*closed)[n]));
      equal = equal && checks.back().pass;
    }
    results["equal"] = equal;
  }
  return rb.finish(std::move(results), checks);
}

RunReport cmd_wreath(const Options& opts) {
  ReportBuilder rb("wreath", opts);
  const Limits limits = effective_limits(opts);
  if (opts.group_file.empty()) throw InvalidInput("--group is required");
  const ParsedGroup parsed = group_from_json(rb.input("group", opts.group_file).json, limits);
  rb.phase("load");

  const ConjugacyTable classes = conjugacy_classes(*parsed.group);
  const BigInt order = big_pow(BigInt(parsed.group->order()), static_cast<unsigned>(opts.n)) *
                       factorial(static_cast<unsigned>(opts.n));

  Json results;
  results["base_order"] = parsed.group->order();
  results["n"] = opts.n;
  results["order"] = big_str(order);

  std::vector<Check> checks;
  if (opts.types) {
    const auto types = enumerate_types(classes, opts.n);
    Json table = Json::array();
    BigInt size_sum = 0;
    for (const ElementType& t : types) {
      const BigInt centralizer = centralizer_order(t, *parsed.group, classes);
      const BigInt size = class_size(t, *parsed.group, classes);
      size_sum += size;
      Json row = element_type_to_json(t);
      row["centralizer_order"] = big_str(centralizer);
      row["class_size"] = big_str(size);
      table.push_back(std::move(row));
    }
    results["types"] = table;
    results["type_count"] = types.size();
    checks.push_back(make_check("class-sizes-sum-to-order", size_sum, order));
  }
  rb.phase("compute");
  return rb.finish(std::move(results), checks);
}

RunReport cmd_mobius(const Options& opts) {
  ReportBuilder rb("mobius", opts);
  const Limits limits = effective_limits(opts);
  SpaceInputs in = load_space(rb, opts, limits);
  rb.phase("load");

  Json results;
  std::vector<Check> checks;
  auto emit = [&](const char* name, MobiusKind kind) {
    // Construction rechecks the defining resummation; surface that as a check.
    try {
      results[name] = mobius_table_to_json(mobius_mu(*in.space, kind, limits));
      checks.push_back(Check{std::string("mobius-resummation-") + name, true, "exact", "exact"});
    } catch (const Error& e) {
      checks.push_back(Check{std::string("mobius-resummation-") + name, false, "error", e.what()});
    }
  };
  if (opts.kind == "all" || opts.kind == "subgroup") emit("subgroup", MobiusKind::Subgroup);
  if (opts.kind == "all" || opts.kind == "abelian-chi") emit("abelian-chi", MobiusKind::AbelianComplex);
  if (opts.kind == "all" || opts.kind == "abelian-one") emit("abelian-one", MobiusKind::AbelianOne);
  if (results.empty()) throw InvalidInput("unknown moebius kind \"" + opts.kind + "\"");
  rb.phase("compute");
  return rb.finish(std::move(results), checks);
}

RunReport cmd_j(const Options& opts) {
  ReportBuilder rb("j", opts);
  rb.phase("load");
  Json results;
  results["d"] = opts.d;
  results["max"] = opts.max_r;

  std::vector<Check> checks;
  std::vector<std::string> values;
  if (opts.p) {
    results["p"] = *opts.p;
    for (std::uint64_t ell = 1; ell <= opts.max_r; ++ell)
      values.push_back(lattice_subgroup_count_p(*opts.p, ell, opts.d).str());
  } else {
    std::vector<BigInt> counts;
    for (std::uint64_t r = 1; r <= opts.max_r; ++r) {
      counts.push_back(lattice_subgroup_count(r, opts.d));
      values.push_back(counts.back().str());
    }
    // Independent route: iterated Dirichlet convolution of power functions.
    const ArithmeticFunction zp = zeta_product_coeffs(opts.d, opts.max_r);
    bool equal = zp.values == counts;
    checks.push_back(Check{"zeta-convolution-equals-subgroup-count", equal,
                           equal ? "equal" : "mismatch", "equal"});
  }
  results["values"] = values;
  rb.phase("compute");
  return rb.finish(std::move(results), checks);
}

namespace {

struct CorpusEntry {
  std::string name;
  std::shared_ptr<GSet> space;
};

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> corpus;
  const GroupPtr z2 = cyclic_group(2);
  const PermGroup s3 = symmetric_group(3);
  corpus.push_back({"Z2-point", std::make_shared<GSet>(GSet::point(z2))});
  corpus.push_back({"Z2-regular", std::make_shared<GSet>(GSet::regular(z2))});
  corpus.push_back({"S3-point", std::make_shared<GSet>(GSet::point(s3.group))});
  corpus.push_back({"S3-natural", std::make_shared<GSet>(GSet::from_permutations(s3))});
  return corpus;
}

}  // namespace

RunReport cmd_verify(const Options& opts) {
  ReportBuilder rb("verify", opts);
  const Limits limits = effective_limits(opts);
  EulerOptions eopts;
  eopts.limits = limits;

  std::vector<CorpusEntry> corpus;
  if (!opts.group_file.empty()) {
    SpaceInputs in = load_space(rb, opts, limits);
    const auto* X = dynamic_cast<const GSet*>(in.space.get());
    if (X == nullptr) throw InvalidInput("verify needs an honest G-set input");
    corpus.push_back(CorpusEntry{"input", std::make_shared<GSet>(*X)});
  } else {
    corpus = default_corpus();
  }
  rb.phase("load");

  const std::vector<unsigned> primes = opts.p ? std::vector<unsigned>{*opts.p}
                                              : std::vector<unsigned>{2, 3};
  const bool all = opts.suite == "all";
  std::vector<Check> checks;

  if (all || opts.suite == "chi") {
    for (const auto& entry : corpus) {
      auto suite = chi_identity_suite(*entry.space, opts.d, primes, eopts);
      checks.insert(checks.end(), suite.begin(), suite.end());
    }
    if (corpus.size() >= 2) {
      checks.push_back(multiplicativity_check(*corpus[0].space, *corpus[1].space,
                                              Presentation::free_abelian(std::min(opts.d, 2u)),
                                              eopts));
    }
  }
  if (all || opts.suite == "wreath") {
    for (const auto& entry : corpus) {
      for (std::size_t n = 2; n <= opts.max_n; ++n) {
        auto suite = wreath_structure_suite(entry.space->group(), n,
                                            entry.space->size() > 1 ? entry.space.get() : nullptr,
                                            limits);
        checks.insert(checks.end(), suite.begin(), suite.end());
      }
    }
  }
  if (all || opts.suite == "arithmetic") {
    auto suite = arithmetic_suite(opts.max_r >= 10 ? opts.max_r : 30, std::max(opts.d, 3u), primes);
    checks.insert(checks.end(), suite.begin(), suite.end());
  }
  if (all || opts.suite == "scaling") {
    for (const auto& entry : corpus) {
      auto suite = scaling_suite(*entry.space, {2, 3, 4}, opts.d, primes, eopts);
      checks.insert(checks.end(), suite.begin(), suite.end());
    }
  }
  if (all || opts.suite == "morava") {
    for (const auto& entry : corpus) {
      auto suite = morava_suite(*entry.space, opts.d, primes, eopts);
      checks.insert(checks.end(), suite.begin(), suite.end());
    }
  }
  if (all || opts.suite == "series") {
    for (const auto& entry : corpus) {
      for (unsigned d = 0; d <= opts.d; ++d) {
        auto suite = series_suite(*entry.space, d, opts.max_n, std::nullopt, eopts);
        checks.insert(checks.end(), suite.begin(), suite.end());
        for (unsigned p : primes) {
          auto psuite = series_suite(*entry.space, d, opts.max_n, p, eopts);
          checks.insert(checks.end(), psuite.begin(), psuite.end());
        }
      }
    }
  }
  if (checks.empty()) throw InvalidInput("unknown suite \"" + opts.suite + "\"");
  rb.phase("compute");

  std::size_t failed = 0;
  for (const Check& c : checks)
    if (!c.pass) ++failed;
  Json results;
  results["suite"] = opts.suite;
  results["total"] = checks.size();
  results["failed"] = failed;
  return rb.finish(std::move(results), checks);
}

std::string render_table(const Json& report) {
  std::ostringstream out;
  out << "command: " << report.value("command", std::string{}) << "\n";
  if (report.contains("results")) {
    for (const auto& [key, value] : report["results"].items()) {
      if (value.is_array() && std::all_of(value.begin(), value.end(),
                                          [](const Json& v) { return v.is_primitive(); })) {
        out << "  " << key << ": ";
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) out << ",";
          out << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
        }
        out << "\n";
        continue;
      }
      if (value.is_structured()) continue;
      out << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
  if (report.contains("checks") && !report["checks"].empty()) {
    std::size_t width = 0;
    for (const auto& c : report["checks"])
      width = std::max(width, c["name"].get<std::string>().size());
    for (const auto& c : report["checks"]) {
      const std::string name = c["name"].get<std::string>();
      const bool pass = c["status"] == "pass";
      out << "  " << (pass ? "[pass] " : "[FAIL] ") << name;
      if (!pass) {
        out << std::string(width - name.size() + 2, ' ') << c["lhs"].get<std::string>()
            << " != " << c["rhs"].get<std::string>();
      }
      out << "\n";
    }
  }
  if (report.contains("timing_ms")) {
    for (const auto& [key, value] : report["timing_ms"].items())
      out << "  time[" << key << "]: " << value.dump() << " ms\n";
  }
  return out.str();
}

}  // namespace weuler::cli

#include "kr/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kr/closed_forms.hpp"
#include "kr/errors.hpp"
#include "kr/graph_io.hpp"
#include "kr/perfectness.hpp"
#include "kr/trail.hpp"
#include "kr/weyl_words.hpp"

namespace kr {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string algebra;
  int node = 0;  // 0: the default minuscule node of the family
  int level = 1;
  std::string format;
  std::string budget_text;
  std::string checks = "p2,p3,p4,p5";
  std::string out_path;
  std::string emit;
};

std::size_t parse_budget(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0) throw UsageError("invalid budget '" + text + "' from " + source);
  return static_cast<std::size_t>(value);
}

std::size_t resolve_budget(const RunConfig& config) {
  if (!config.budget_text.empty()) return parse_budget(config.budget_text, "--budget");
  if (const char* env = std::getenv("KR_BUDGET"); env && *env) return parse_budget(env, "KR_BUDGET");
  return kDefaultBudget;
}

AlgebraCase resolve_case(const RunConfig& config) {
  Family family = parse_family(config.algebra);
  Node node = config.node != 0 ? config.node : (family == Family::E6 ? 1 : 7);
  return AlgebraCase::make(family, node);
}

void check_level(int level) {
  if (level < 1) throw UsageError("--level must be at least 1");
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + config.out_path);
  file << text;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  AlgebraCase algebra = resolve_case(config);
  check_level(config.level);
  EnumeratedCrystal crystal = enumerate_crystal(algebra, config.level, resolve_budget(config));
  GraphDocument doc = document_of(crystal);
  if (config.format == "json") {
    emit(config, to_json(doc), out);
    return kExitOk;
  }
  if (!config.format.empty() && config.format != "text")
    throw UsageError("enumerate supports --format text or json");
  std::ostringstream os;
  os << "# " << algebra.name() << " s=" << config.level << "\n";
  os << "elements " << doc.elements.size() << "\n";
  for (std::size_t v = 0; v < doc.elements.size(); ++v) {
    os << v;
    for (int x : doc.elements[v]) os << ' ' << x;
    os << "  " << crystal.elements[v].position_set() << "\n";
  }
  os << "edges " << doc.edges.size() << "\n";
  for (const Edge& e : doc.edges) os << e.src << ' ' << e.dst << ' ' << e.label << "\n";
  emit(config, os.str(), out);
  return kExitOk;
}

int cmd_graph(const RunConfig& config, std::ostream& out) {
  AlgebraCase algebra = resolve_case(config);
  check_level(config.level);
  GraphDocument doc = document_of(enumerate_crystal(algebra, config.level, resolve_budget(config)));
  if (config.format.empty() || config.format == "dot") emit(config, to_dot(doc), out);
  else if (config.format == "json") emit(config, to_json(doc), out);
  else throw UsageError("graph supports --format dot or json");
  return kExitOk;
}

std::string yes_no(bool ok) { return ok ? "yes" : "NO"; }

std::string summary(const PerfectnessReport& r) {
  std::ostringstream os;
  os << r.algebra.name() << " s=" << r.level << ": |B| = " << r.crystal_size << "\n";
  os << "  P1 " << r.p1 << "\n";
  if (r.checked(kCheckP2))
    os << "  P2 B(x)B connected: " << yes_no(r.p2_connected) << " (" << r.p2_components
       << " component(s) over " << r.p2_product_size << " elements)\n";
  if (r.checked(kCheckP3))
    os << "  P3 weight s(L" << r.algebra.node << " - L0) unique: " << yes_no(r.p3_unique)
       << " (multiplicity " << r.p3_multiplicity << ")\n";
  if (r.checked(kCheckP4))
    os << "  P4 min <c, eps(b)> = " << r.p4_min_level << " (want " << r.level << ")\n";
  if (r.checked(kCheckP5))
    os << "  P5 |B_min| = " << r.minimal_count << ", level-s weights = " << r.dominant_weight_count
       << ", eps bijective: " << yes_no(r.p5_eps.bijective)
       << ", phi bijective: " << yes_no(r.p5_phi.bijective) << "\n";
  os << "  delta statistics: " << r.delta_source << "\n";
  os << (r.perfect() ? "PERFECT" : "NOT PERFECT") << "\n";
  return os.str();
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  AlgebraCase algebra = resolve_case(config);
  check_level(config.level);
  VerifyOptions options;
  options.budget = resolve_budget(config);
  try {
    options.checks = parse_checks(config.checks);
  } catch (const Error& ex) {
    throw UsageError(ex.what());
  }
  PerfectnessReport report = verify_perfect(algebra, config.level, options);
  std::string json_text = report_to_json(report);
  if (config.format == "json") {
    emit(config, json_text, out);
  } else if (config.format.empty() || config.format == "text") {
    out << summary(report);
    if (!config.out_path.empty()) emit(config, json_text, out);
  } else {
    throw UsageError("verify supports --format text or json");
  }
  return report.perfect() ? kExitOk : kExitVerificationFailed;
}

nlohmann::json tables_json(const CaseTables& t) {
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& r : t.roots) roots.push_back(r.str());
  nlohmann::json sigma = nlohmann::json::object();
  for (const auto& [i, pairs] : t.sigma) {
    nlohmann::json list = nlohmann::json::array();
    for (const SigmaPair& p : pairs) list.push_back({p.minus, p.plus});
    sigma[std::to_string(i)] = list;
  }
  nlohmann::json masks = nlohmann::json::array();
  for (const TrailMask& m : t.masks) masks.push_back(m.positions);
  return {{"algebra", std::string(family_name(t.algebra.family))},
          {"node", t.algebra.node},
          {"word_head", t.word_head},
          {"word_tail", t.word_tail},
          {"roots", roots},
          {"sigma", sigma},
          {"masks", masks}};
}

int cmd_tables(const RunConfig& config, std::ostream& out) {
  std::vector<AlgebraCase> cases;
  if (config.algebra.empty()) cases = AlgebraCase::all();
  else cases.push_back(resolve_case(config));

  if (!config.emit.empty()) {
    if (config.emit != "json") throw UsageError("tables supports --emit json");
    nlohmann::json doc = {{"schema_version", kSchemaVersion}, {"cases", nlohmann::json::array()}};
    for (AlgebraCase c : cases) doc["cases"].push_back(tables_json(validated_tables(c)));
    emit(config, doc.dump(1) + "\n", out);
    return kExitOk;
  }

  bool all_ok = true;
  std::ostringstream os;
  auto line = [&](const std::string& what, bool ok, const std::string& detail = {}) {
    all_ok = all_ok && ok;
    os << (ok ? "PASS " : "FAIL ") << what;
    if (!detail.empty()) os << " (" << detail << ")";
    os << "\n";
  };
  for (AlgebraCase c : cases) {
    const CaseTables& t = validated_tables(c);
    const CartanData& cartan = t.cartan();
    line(c.name() + " tables validated", true);
    ReducedWord word{t.full_word()};
    std::vector<Root> order = papi_convex_order(cartan, word);
    bool convex = std::equal(t.roots.begin(), t.roots.end(), order.begin());
    line(c.name() + " convex order of the reduced word", convex);
    for (const auto& [i, pairs] : t.sigma) {
      SigmaDerivation d = derive_sigma_table(cartan, word, i, t.size());
      line(c.name() + " sigma_" + std::to_string(i), d.pairs == pairs,
           std::to_string(d.pairs.size()) + " pairs, " + std::to_string(d.moves.size()) + " moves");
    }
    if (c.family == Family::E6) {
      TrailFunctionals trails(t);
      const auto& printed = e6_printed_xl_forms();
      std::vector<std::vector<Position>> supports;
      for (int l = 0; l < trails.count(); ++l) supports.push_back(trails.support(l));
      std::vector<std::vector<Position>> forms = printed;
      std::sort(supports.begin(), supports.end());
      std::sort(forms.begin(), forms.end());
      bool same = supports == forms;
      line(c.name() + " trail masks give the x_l forms", same);
    }
    std::vector<DeltaIndex> derived = derive_delta_indices(t);
    if (c.node != 6)
      line(c.name() + " delta indices", derived == printed_delta_indices(c.family),
           std::to_string(derived.size()) + " statistics");
    else
      line(c.name() + " delta indices derived", !derived.empty(),
           std::to_string(derived.size()) + " statistics");
  }
  emit(config, os.str(), out);
  return all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kirillov-Reshetikhin crystals of type E6(1), E7(1) and their perfectness"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_case = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--algebra", config.algebra, "E6 or E7");
    if (required) opt->required();
    cmd->add_option("--node", config.node, "minuscule node (E6: 1 or 6, E7: 7)");
  };
  auto add_common = [&](CLI::App* cmd) {
    add_case(cmd, true);
    cmd->add_option("--level", config.level, "level s >= 1");
    cmd->add_option("--budget", config.budget_text, "maximum number of materialized states");
    cmd->add_option("--out", config.out_path, "write output to a file");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "list elements and edges");
  add_common(enumerate);
  enumerate->add_option("--format", config.format, "text or json");

  CLI::App* graph = app.add_subcommand("graph", "export the crystal graph");
  add_common(graph);
  graph->add_option("--format", config.format, "dot or json");

  CLI::App* verify = app.add_subcommand("verify", "check the perfectness axioms");
  add_common(verify);
  verify->add_option("--format", config.format, "text or json");
  verify->add_option("--checks", config.checks, "comma-separated subset of p2,p3,p4,p5");

  CLI::App* tables = app.add_subcommand("tables", "regenerate and cross-check the embedded tables");
  add_case(tables, false);
  tables->add_option("--emit", config.emit, "dump the tables (json)");
  tables->add_option("--out", config.out_path, "write output to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(config, out);
    if (graph->parsed()) return cmd_graph(config, out);
    if (verify->parsed()) return cmd_verify(config, out);
    return cmd_tables(config, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const InvalidCase& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ScaleExceeded& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitScaleExceeded;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace kr

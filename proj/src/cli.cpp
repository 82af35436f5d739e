#include "kegraph/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kegraph/criticality.hpp"
#include "kegraph/edge_list.hpp"
#include "kegraph/harness/checks.hpp"
#include "kegraph/harness/fixtures.hpp"
#include "kegraph/harness/fuzz.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/reports.hpp"

namespace kegraph {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kOverCapacity = 3;

using nlohmann::json;

void print(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Graph load_graph(const CliConfig& cfg) {
  if (!cfg.input.empty() && !cfg.fixture.empty()) throw InputError("give either --input or --fixture, not both");
  if (!cfg.input.empty()) return read_edge_list_file(cfg.input);
  if (!cfg.fixture.empty()) return harness::fixture(cfg.fixture).graph;
  throw InputError(cfg.command + ": an input graph is required (--input PATH or --fixture NAME)");
}

void require_format(const CliConfig& cfg, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end()) {
    throw InputError(cfg.command + ": unsupported format '" + cfg.format + "'");
  }
}

std::vector<std::string> selected_checks(const CliConfig& cfg) {
  if (cfg.checks.empty()) return harness::default_check_ids();
  for (const auto& id : cfg.checks) {
    if (!harness::is_known_check(id)) throw InputError("unknown check id '" + id + "'");
  }
  return cfg.checks;
}

int analyze(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "dot", "text"});
  const Graph g = load_graph(cfg);
  const auto r = parameter_report(g, cfg.limits);
  if (cfg.format == "json") print(out, to_json(r));
  if (cfg.format == "text") out << to_text(r);
  if (cfg.format == "dot") out << to_dot(g, r.core, r.alpha_critical_edges, r.mu_critical_edges);
  return kOk;
}

int critical(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "dot", "text"});
  const Graph g = load_graph(cfg);
  const auto r = criticality_report(g, cfg.limits);
  if (cfg.format == "json") print(out, to_json(r));
  if (cfg.format == "text") out << to_text(r);
  if (cfg.format == "dot") out << to_dot(g, r.alpha_critical_vertices, r.alpha_critical_edges, r.mu_critical_edges);
  return kOk;
}

int decompose(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  const Graph g = load_graph(cfg);
  const auto d = ke_decompose(g, cfg.limits);
  if (cfg.format == "json") print(out, to_json(d));
  if (cfg.format == "text") out << to_text(d);
  return kOk;
}

int verify(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  const Graph g = load_graph(cfg);
  if (g.order() > cfg.limits.max_alpha_vertices) {
    throw CapacityError("verify: n=" + std::to_string(g.order()) + " exceeds --max-n " +
                        std::to_string(cfg.limits.max_alpha_vertices));
  }
  harness::GraphFacts facts(g, cfg.limits);
  bool failed = false;
  bool capped = false;
  auto verdicts = json::array();
  std::ostringstream text;
  for (const auto& id : selected_checks(cfg)) {
    auto v = harness::check(facts, id);
    if (v.status == harness::CheckStatus::kFail) {
      failed = true;
      v.witness = format_edge_list(harness::shrink_failure(g, id, cfg.limits));
    }
    if (v.status == harness::CheckStatus::kNotApplicable && v.detail.starts_with("capacity")) capped = true;
    verdicts.push_back({{"check", v.check_id},
                        {"status", std::string(harness::to_string(v.status))},
                        {"detail", v.detail},
                        {"witness", v.witness}});
    text << v.check_id << ' ' << harness::to_string(v.status);
    if (!v.detail.empty()) text << ": " << v.detail;
    text << '\n';
    if (!v.witness.empty()) text << v.witness;
  }
  if (cfg.format == "json") {
    print(out, {{"n", g.order()}, {"m", g.size()}, {"verdicts", verdicts}});
  } else {
    out << text.str();
  }
  if (failed) return kCheckFailed;
  return capped ? kOverCapacity : kOk;
}

int fuzz(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  harness::Campaign c;
  const auto kind = harness::parse_generator_kind(cfg.gen);
  if (!kind) throw InputError("unknown generator '" + cfg.gen + "'");
  if (cfg.p.empty()) throw InputError("fuzz: --p needs at least one value");
  c.gen.kind = *kind;
  c.gen.n = cfg.n;
  c.gen.p = cfg.p.front();
  c.gen.seed = cfg.seed;
  c.n_min = std::min(cfg.n_min, cfg.n);
  if (cfg.p.size() > 1) c.p_grid = cfg.p;
  c.trials = cfg.trials;
  c.checks = selected_checks(cfg);
  c.limits = cfg.limits;
  c.threads = cfg.threads;
  c.shrink = cfg.shrink;
  if (cfg.n > cfg.limits.max_alpha_vertices) {
    throw CapacityError("fuzz: n=" + std::to_string(cfg.n) + " exceeds --max-n " +
                        std::to_string(cfg.limits.max_alpha_vertices));
  }
  const auto s = harness::fuzz(c);
  if (cfg.format == "json") {
    print(out, to_json(s));
  } else {
    for (const auto& [id, t] : s.per_check) {
      out << id << " pass=" << t.pass << " fail=" << t.fail << " na=" << t.na << '\n';
    }
    for (const auto& w : s.witnesses) out << "witness " << w.check_id << " trial " << w.trial << ": " << w.detail << '\n' << w.graph;
  }
  return s.failures() ? kCheckFailed : kOk;
}

int list_fixtures(const CliConfig& cfg, std::ostream& out) {
  require_format(cfg, {"json", "text"});
  if (!cfg.fixture.empty()) {
    const auto& f = harness::fixture(cfg.fixture);
    if (cfg.format == "text") {
      out << f.to_edge_list();
      return kOk;
    }
    json expected = json::object();
    for (const auto& e : f.expected) {
      expected[e.field] = {{"value", e.value}, {"provenance", std::string(harness::to_string(e.provenance))}};
    }
    print(out, {{"name", f.name},
                {"description", f.description},
                {"labels", f.labels},
                {"edge_list", f.to_edge_list()},
                {"expected", expected},
                {"notes", f.notes}});
    return kOk;
  }
  if (cfg.format == "text") {
    for (const auto& f : harness::fixtures()) out << f.name << "  " << f.description << '\n';
    return kOk;
  }
  auto list = json::array();
  for (const auto& f : harness::fixtures()) {
    list.push_back({{"name", f.name}, {"description", f.description}, {"n", f.graph.order()}, {"m", f.graph.size()}});
  }
  print(out, list);
  return kOk;
}

}  // namespace

int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "analyze") return analyze(cfg, out);
    if (cfg.command == "critical") return critical(cfg, out);
    if (cfg.command == "decompose") return decompose(cfg, out);
    if (cfg.command == "verify") return verify(cfg, out);
    if (cfg.command == "fuzz") return fuzz(cfg, out);
    if (cfg.command == "fixtures") return list_fixtures(cfg, out);
    err << "unknown command '" << cfg.command << "'\n";
    return kBadInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kOverCapacity;
  } catch (const InternalError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"König-Egerváry graph analysis and conjecture checking"};
  app.require_subcommand(1, 1);

  auto graph_input = [&](CLI::App* sub) {
    auto* in = sub->add_option("--input", cfg.input, "edge-list file");
    auto* fx = sub->add_option("--fixture", cfg.fixture, "named fixture (see `fixtures`)");
    in->excludes(fx);
  };
  auto caps = [&](CLI::App* sub) {
    sub->add_option("--max-n", cfg.limits.max_alpha_vertices, "vertex cap for stability computations")
        ->check(CLI::Range(1, 64));
    sub->add_option("--max-omega-n", cfg.limits.max_omega_vertices, "vertex cap for enumerating maximum stable sets")
        ->check(CLI::Range(1, 64));
    sub->add_option("--max-bhp-n", cfg.limits.max_odd_cycle_vertices, "vertex cap for the odd-cycle search")
        ->check(CLI::Range(1, 24));
  };
  auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto checks = [&](CLI::App* sub) {
    sub->add_option("--checks", cfg.checks, "comma-separated check ids")->delimiter(',');
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "all graph parameters");
  graph_input(analyze_cmd);
  format(analyze_cmd, {"json", "dot", "text"});
  caps(analyze_cmd);

  auto* critical_cmd = app.add_subcommand("critical", "alpha- and mu-critical edges");
  graph_input(critical_cmd);
  format(critical_cmd, {"json", "dot", "text"});
  caps(critical_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "stable set plus matched remainder of a KE graph");
  graph_input(decompose_cmd);
  format(decompose_cmd, {"json", "text"});
  caps(decompose_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run checks on one graph");
  graph_input(verify_cmd);
  format(verify_cmd, {"json", "text"});
  checks(verify_cmd);
  caps(verify_cmd);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "run checks on random graphs");
  format(fuzz_cmd, {"json", "text"});
  checks(fuzz_cmd);
  caps(fuzz_cmd);
  fuzz_cmd->add_option("--gen", cfg.gen, "tree|bipartite|ke|gnp|cycle|path|complete");
  fuzz_cmd->add_option("--n", cfg.n, "largest order")->check(CLI::Range(0, 64));
  fuzz_cmd->add_option("--n-min", cfg.n_min, "smallest order")->check(CLI::Range(0, 64));
  fuzz_cmd->add_option("--p", cfg.p, "edge probability, or a comma-separated grid")->delimiter(',');
  fuzz_cmd->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--seed", cfg.seed);
  fuzz_cmd->add_option("--threads", cfg.threads, "0 = hardware concurrency");
  fuzz_cmd->add_flag("!--no-shrink", cfg.shrink, "report failing graphs unshrunk");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list fixtures or print one as an edge list");
  fixtures_cmd->add_option("--fixture", cfg.fixture, "fixture to print");
  format(fixtures_cmd, {"json", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  // Fixtures are edge lists first; JSON only on request.
  if (cfg.command == "fixtures" && fixtures_cmd->count("--format") == 0) cfg.format = "text";
  return run(cfg, out, err);
}

}  // namespace kegraph

#include "kegraph/harness/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "kegraph/edge_list.hpp"

namespace kegraph::harness {

namespace {

struct TrialResult {
  std::vector<CheckVerdict> verdicts;
  std::vector<Witness> witnesses;
};

void validate_campaign(const Campaign& c) {
  validate(c.gen);
  if (c.trials < 1) throw InputError("fuzz: trials must be at least 1");
  if (c.n_min < 0 || c.n_min > c.gen.n) throw InputError("fuzz: need 0 <= n-min <= n");
  for (double p : c.p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("fuzz: grid probabilities must lie in [0, 1]");
  }
  if (c.checks.empty()) throw InputError("fuzz: no checks selected");
  for (const auto& id : c.checks) {
    if (!is_known_check(id)) throw InputError("unknown check id '" + id + "'");
  }
}

TrialResult run_trial(const Campaign& c, int trial) {
  const Graph g = trial_graph(c, trial);
  GraphFacts facts(g, c.limits);
  TrialResult out;
  for (const auto& id : c.checks) {
    CheckVerdict v = check(facts, id);
    if (v.status == CheckStatus::kFail) {
      const Graph small = c.shrink ? shrink_failure(g, id, c.limits) : g;
      const CheckVerdict again = check(small, id, c.limits);
      out.witnesses.push_back(Witness{id, trial, again.detail, format_edge_list(small), format_edge_list(g)});
    }
    out.verdicts.push_back(std::move(v));
  }
  return out;
}

}  // namespace

int FuzzSummary::failures() const {
  int total = 0;
  for (const auto& [id, t] : per_check) total += t.fail;
  return total;
}

Graph trial_graph(const Campaign& c, int trial) {
  const auto seed = c.gen.seed;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  GeneratorConfig cfg = c.gen;
  const int n = std::uniform_int_distribution<int>(c.n_min, c.gen.n)(rng);
  if (!c.p_grid.empty()) {
    cfg.p = c.p_grid[std::uniform_int_distribution<std::size_t>(0, c.p_grid.size() - 1)(rng)];
  }
  if (cfg.kind == GeneratorKind::kBipartite) {
    cfg.n = std::uniform_int_distribution<int>(0, n)(rng);
    cfg.n2 = n - cfg.n;
  } else {
    cfg.n = n;
  }
  if (cfg.kind == GeneratorKind::kCycle) cfg.n = std::max(cfg.n, 3);
  cfg.seed = rng();
  return generate(cfg);
}

FuzzSummary fuzz(const Campaign& c) {
  validate_campaign(c);
  std::vector<TrialResult> results(static_cast<std::size_t>(c.trials));
  unsigned workers = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(c.trials));

  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto work = [&] {
    for (int t; (t = next.fetch_add(1)) < c.trials;) {
      try {
        results[static_cast<std::size_t>(t)] = run_trial(c, t);
      } catch (...) {
        std::lock_guard lock(error_lock);
        if (!error) error = std::current_exception();
        next = c.trials;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  FuzzSummary s;
  s.campaign = c;
  for (const auto& id : c.checks) s.per_check[id];
  for (auto& r : results) {
    for (const auto& v : r.verdicts) {
      auto& t = s.per_check[v.check_id];
      switch (v.status) {
        case CheckStatus::kPass: ++t.pass; break;
        case CheckStatus::kFail: ++t.fail; break;
        case CheckStatus::kNotApplicable: ++t.na; break;
      }
    }
    for (auto& w : r.witnesses) s.witnesses.push_back(std::move(w));
  }
  return s;
}

nlohmann::json to_json(const FuzzSummary& s) {
  const Campaign& c = s.campaign;
  nlohmann::json per_check = nlohmann::json::object();
  for (const auto& [id, t] : s.per_check) per_check[id] = {{"pass", t.pass}, {"fail", t.fail}, {"na", t.na}};
  auto witnesses = nlohmann::json::array();
  for (const auto& w : s.witnesses) {
    witnesses.push_back(
        {{"check", w.check_id}, {"trial", w.trial}, {"detail", w.detail}, {"graph", w.graph}, {"original", w.original}});
  }
  return {
      {"seed", c.gen.seed},
      {"cfg",
       {{"gen", std::string(to_string(c.gen.kind))},
        {"n_min", c.n_min},
        {"n_max", c.gen.n},
        {"p", c.p_grid.empty() ? nlohmann::json(c.gen.p) : nlohmann::json(c.p_grid)},
        {"checks", c.checks},
        {"shrink", c.shrink}}},
      {"trials", c.trials},
      {"per_check", per_check},
      {"witnesses", witnesses},
  };
}

}  // namespace kegraph::harness

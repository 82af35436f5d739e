#include "kegraph/reports.hpp"

#include <sstream>

namespace kegraph {

namespace {

std::string braces(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  const char* sep = "";
  for (Vertex v : s) {
    out << sep << v;
    sep = ", ";
  }
  out << '}';
  return out.str();
}

std::string braces(const EdgeSet& s) {
  std::ostringstream out;
  out << '{';
  const char* sep = "";
  for (const auto& e : s) {
    out << sep << e.u << '-' << e.v;
    sep = ", ";
  }
  out << '}';
  return out.str();
}

}  // namespace

nlohmann::json to_json(const VertexSet& s) { return nlohmann::json(s.vec()); }

nlohmann::json to_json(const EdgeSet& s) {
  auto out = nlohmann::json::array();
  for (const auto& e : s) out.push_back({e.u, e.v});
  return out;
}

nlohmann::json to_json(const ParameterReport& r) {
  return {
      {"n", r.n},
      {"m", r.m},
      {"alpha", r.alpha},
      {"mu", r.mu},
      {"xi", r.xi},
      {"sigma", r.sigma},
      {"eta", r.eta},
      {"is_ke", r.is_ke},
      {"is_bipartite", r.is_bipartite},
      {"is_tree", r.is_tree},
      {"core", to_json(r.core)},
      {"anticore", to_json(r.anticore)},
      {"alpha_critical_edges", to_json(r.alpha_critical_edges)},
      {"mu_critical_edges", to_json(r.mu_critical_edges)},
      {"g0_size", r.g0_size},
      {"g0_pm_status", static_cast<int>(r.g0_pm_status)},
      {"equalities",
       {{"xi_eta_alpha", r.equalities.xi_eta_alpha},
        {"sigma_eta_mu", r.equalities.sigma_eta_mu},
        {"xi_2eta_sigma_n", r.equalities.xi_2eta_sigma_n}}},
  };
}

nlohmann::json to_json(const CriticalityReport& r) {
  return {
      {"alpha_critical_edges", to_json(r.alpha_critical_edges)},
      {"eta", r.eta()},
      {"mu_critical_edges", to_json(r.mu_critical_edges)},
      {"alpha_critical_vertices", to_json(r.alpha_critical_vertices)},
  };
}

nlohmann::json to_json(const KeDecomposition& d) {
  return {
      {"s", to_json(d.s)},
      {"h_vertices", to_json(d.h_vertices)},
      {"cut_matching", to_json(d.cut_matching.edges())},
  };
}

nlohmann::json to_json(const S0Trace& t) {
  auto steps = nlohmann::json::array();
  for (const auto& s : t.steps) steps.push_back({{"s0", to_json(s.s0)}, {"d", to_json(s.d)}});
  return {{"s0", to_json(t.s0)}, {"steps", steps}, {"target_edge", {t.target_edge.u, t.target_edge.v}}};
}

nlohmann::json to_json(const G0Equivalence& t) {
  return {
      {"g0_unique_perfect_matching", t.g0_unique_perfect_matching},
      {"g0_alpha_critical_maximal_matching", t.g0_alpha_critical_maximal_matching},
      {"xi_eta_alpha", t.xi_eta_alpha},
      {"sigma_eta_mu", t.sigma_eta_mu},
      {"xi_2eta_sigma_n", t.xi_2eta_sigma_n},
      {"consistent", t.consistent()},
  };
}

std::string to_dot(const Graph& g, const VertexSet& core, const EdgeSet& alpha_critical, const EdgeSet& mu_critical) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (core.contains(v)) out << " [class=core]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    const bool a = alpha_critical.contains(e);
    const bool m = mu_critical.contains(e);
    if (a && m) {
      out << " [class=\"alpha_critical mu_critical\"]";
    } else if (a) {
      out << " [class=alpha_critical]";
    } else if (m) {
      out << " [class=mu_critical]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const ParameterReport& r) {
  std::ostringstream out;
  out << "n=" << r.n << " m=" << r.m << '\n'
      << "alpha=" << r.alpha << " mu=" << r.mu << " xi=" << r.xi << " sigma=" << r.sigma << " eta=" << r.eta << '\n'
      << "koenig-egervary=" << (r.is_ke ? "yes" : "no") << " bipartite=" << (r.is_bipartite ? "yes" : "no")
      << " tree=" << (r.is_tree ? "yes" : "no") << '\n'
      << "core=" << braces(r.core) << " anticore=" << braces(r.anticore) << '\n'
      << "alpha-critical edges=" << braces(r.alpha_critical_edges) << '\n'
      << "mu-critical edges=" << braces(r.mu_critical_edges) << '\n'
      << "G0: n=" << r.g0_size << " perfect matchings="
      << (r.g0_pm_status == PerfectMatchingCount::kMany ? ">=2" : std::to_string(static_cast<int>(r.g0_pm_status)))
      << '\n'
      << "xi+eta=alpha: " << (r.equalities.xi_eta_alpha ? "yes" : "no")
      << "  sigma+eta=mu: " << (r.equalities.sigma_eta_mu ? "yes" : "no")
      << "  xi+2eta+sigma=n: " << (r.equalities.xi_2eta_sigma_n ? "yes" : "no") << '\n';
  return out.str();
}

std::string to_text(const CriticalityReport& r) {
  std::ostringstream out;
  out << "alpha-critical edges (eta=" << r.eta() << ")=" << braces(r.alpha_critical_edges) << '\n'
      << "mu-critical edges=" << braces(r.mu_critical_edges) << '\n'
      << "alpha-critical vertices=" << braces(r.alpha_critical_vertices) << '\n';
  return out.str();
}

std::string to_text(const KeDecomposition& d) {
  std::ostringstream out;
  out << "S=" << braces(d.s) << '\n'
      << "V-S=" << braces(d.h_vertices) << '\n'
      << "cut matching=" << braces(d.cut_matching.edges()) << '\n';
  return out.str();
}

}  // namespace kegraph

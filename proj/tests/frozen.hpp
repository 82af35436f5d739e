#pragma once

// Values produced once by the brute-force oracle (and by hand for the
// drawn examples) and frozen here. test_criticality re-derives them with the
// oracle so a typo in this table cannot hide.

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace frozen {

using Pair = std::pair<int, int>;

struct Row {
  std::string fixture;
  int n, m, alpha, mu, xi, sigma, eta;
  bool ke;
  std::vector<int> core, anticore;
  std::set<Pair> alpha_critical, mu_critical;
  bool equalities;  // all three hold (else all three fail)
};

inline const std::vector<Row>& rows() {
  static const std::vector<Row> all = {
      {"k3_plus_e", 4, 4, 2, 2, 1, 1, 1, true, {3}, {0}, {{1, 2}}, {{0, 3}, {1, 2}}, true},
      {"p4", 4, 3, 2, 2, 0, 0, 2, true, {}, {}, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}}, true},
      {"w1", 6, 6, 3, 2, 2, 1, 3, false, {0, 4}, {1}, {{2, 3}, {2, 5}, {3, 5}}, {}, false},
      {"fig2_ke_nonbipartite", 6, 6, 3, 3, 0, 0, 3, true, {}, {}, {{0, 1}, {2, 3}, {4, 5}}, {{0, 1}, {2, 3}, {4, 5}},
       true},
      {"fig8_bipartite", 7, 7, 4, 3, 2, 1, 0, true, {0, 4}, {1}, {}, {}, false},
      {"fig9_forest", 7, 7, 4, 3, 2, 1, 2, true, {0, 1}, {4}, {{2, 5}, {3, 6}}, {{2, 5}, {3, 6}}, true},
      {"fig9_counterexample", 6, 7, 3, 3, 2, 2, 1, true, {0, 1}, {4, 5}, {{2, 3}}, {{2, 3}}, true},
      {"fig7_g0", 10, 12, 5, 5, 0, 0, 5, true, {}, {}, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}},
       {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}, true},
      {"c4", 4, 4, 2, 2, 0, 0, 0, true, {}, {}, {}, {}, false},
      {"c6", 6, 6, 3, 3, 0, 0, 0, true, {}, {}, {}, {}, false},
      {"star3", 4, 3, 3, 1, 3, 1, 0, true, {1, 2, 3}, {0}, {}, {}, true},
      {"k3", 3, 3, 1, 1, 0, 0, 3, false, {}, {}, {{0, 1}, {0, 2}, {1, 2}}, {}, false},
  };
  return all;
}

}  // namespace frozen

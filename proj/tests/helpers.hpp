#pragma once

#include <random>
#include <vector>

#include "rifle/core.hpp"

namespace testutil {

using rifle::Instance;
using rifle::Value;

inline Instance make_instance(int n, std::vector<std::vector<std::pair<Value, Value>>> cells,
                              std::vector<int> rigid_p, std::vector<int> rigid_q) {
  std::vector<Value> beta, gamma;
  for (const auto& row : cells)
    for (const auto& [b, g] : row) {
      beta.push_back(b);
      gamma.push_back(g);
    }
  std::vector<std::uint8_t> rp(rigid_p.begin(), rigid_p.end());
  std::vector<std::uint8_t> rq(rigid_q.begin(), rigid_q.end());
  return Instance(n, std::move(beta), std::move(gamma), std::move(rp), std::move(rq));
}

// 2x2 market, p2 and q2 rigid; the only flexible pair is (p1, q1).
inline Instance first_example() {
  return make_instance(2,
                       {{{3, 3}, {3, 6}},
                        {{2, 5}, {10, 5}}},
                       {0, 1}, {0, 1});
}

// 2x2 market with both Q-agents rigid; admits a "side payment" outcome only
// if the rigidity rule were relaxed.
inline Instance relaxed_rigidity_example() {
  return make_instance(2,
                       {{{3, 3}, {4, 6}},
                        {{1, 1}, {10, 5}}},
                       {0, 0}, {1, 1});
}

// 2x2 market with one rigid Q-agent; stable but not strongly stable outcome
// exists.  Flexible pairs carry alpha as beta.
inline Instance strong_stability_example() {
  return make_instance(2,
                       {{{18, 0}, {10, 7}},
                        {{21, 0}, {14, 5}}},
                       {0, 0}, {0, 1});
}

// 5x5 market with rigid p1, p2 and q1; the worked auction trace.
inline Instance auction_example() {
  return make_instance(5,
                       {{{7, 6}, {9, 9}, {4, 9}, {6, 5}, {6, 4}},
                        {{8, 5}, {9, 9}, {3, 5}, {7, 7}, {2, 5}},
                        {{5, 8}, {17, 0}, {13, 0}, {13, 0}, {8, 0}},
                        {{1, 5}, {8, 0}, {10, 0}, {9, 0}, {6, 0}},
                        {{1, 6}, {12, 0}, {8, 0}, {9, 0}, {7, 0}}},
                       {1, 1, 0, 0, 0}, {1, 0, 0, 0, 0});
}

// 2x2 degenerate market: the payoff max/min of its two stable outcomes is
// compatible with no matching.
inline Instance degenerate_example() {
  return make_instance(2,
                       {{{4, 5}, {2, 3}},
                        {{11, 0}, {6, 7}}},
                       {1, 0}, {0, 1});
}

// Man-proposing deferred acceptance over full strict preference lists;
// prefs[a][r] is the r-th choice (0-based indices).  Returns the matching
// as a q-of-p vector.  Kept independent of the solver on purpose.
inline std::vector<int> deferred_acceptance(const std::vector<std::vector<int>>& prefs_p,
                                            const std::vector<std::vector<int>>& prefs_q) {
  const int n = static_cast<int>(prefs_p.size());
  std::vector<std::vector<int>> rank_q(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) rank_q[j][prefs_q[j][r]] = r;

  std::vector<int> next(n, 0), engaged_to(n, -1), q_of_p(n, -1);
  std::vector<int> free_men(n);
  for (int i = 0; i < n; ++i) free_men[i] = n - 1 - i;
  while (!free_men.empty()) {
    const int m = free_men.back();
    free_men.pop_back();
    const int w = prefs_p[m][next[m]++];
    const int cur = engaged_to[w];
    if (cur < 0) {
      engaged_to[w] = m;
      q_of_p[m] = w;
    } else if (rank_q[w][m] < rank_q[w][cur]) {
      engaged_to[w] = m;
      q_of_p[m] = w;
      q_of_p[cur] = -1;
      free_men.push_back(cur);
    } else {
      free_men.push_back(m);
    }
  }
  return q_of_p;
}

// Classical marriage-model blocking check for a full strict profile.
inline bool marriage_stable(const std::vector<std::vector<int>>& prefs_p,
                            const std::vector<std::vector<int>>& prefs_q,
                            const std::vector<int>& q_of_p) {
  const int n = static_cast<int>(prefs_p.size());
  std::vector<std::vector<int>> rank_p(n, std::vector<int>(n)), rank_q(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r) rank_p[i][prefs_p[i][r]] = r;
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) rank_q[j][prefs_q[j][r]] = r;
  std::vector<int> p_of_q(n);
  for (int i = 0; i < n; ++i) p_of_q[q_of_p[i]] = i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rank_p[i][j] < rank_p[i][q_of_p[i]] && rank_q[j][i] < rank_q[j][p_of_q[j]])
        return false;
  return true;
}

inline std::vector<std::vector<int>> random_profile(int n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> prefs(n);
  for (auto& row : prefs) {
    row.resize(n);
    for (int k = 0; k < n; ++k) row[k] = k;
    for (int k = n - 1; k > 0; --k)
      std::swap(row[k], row[rng() % static_cast<std::uint64_t>(k + 1)]);
  }
  return prefs;
}

}  // namespace testutil

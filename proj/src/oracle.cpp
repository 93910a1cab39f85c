#include "rifle/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rifle/errors.hpp"
#include "rifle/verify.hpp"

namespace rifle {

std::vector<Matching> enumerate_matchings(int n) {
  constexpr int kGuard = 8;
  if (n > kGuard) throw SizeGuardError("enumerate_matchings", n, kGuard);
  if (n < 0) throw std::invalid_argument("enumerate_matchings: negative n");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Matching> out;
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

struct FlexPair {
  int p, q;
  Value alpha;
};

// Enumerates all integer stable outcomes compatible with one matching.
// Rigid matched pairs are forced; flexible matched pairs range over integer
// splits.  Partial assignments are pruned as soon as a pair with both
// payoffs decided blocks.
class MatchingEnumerator {
 public:
  MatchingEnumerator(const Instance& inst, const Matching& m)
      : inst_(inst), m_(m), n_(inst.n()), u_(n_, 0), v_(n_, 0),
        u_known_(n_, 0), v_known_(n_, 0) {
    for (int i = 0; i < n_; ++i) {
      const int j = m.q_of(i);
      if (inst.pair_class(i, j) == PairClass::Rigid) {
        u_[i] = inst.beta(i, j);
        v_[j] = inst.gamma(i, j);
        u_known_[i] = v_known_[j] = 1;
      } else {
        flex_.push_back({i, j, inst.alpha(i, j)});
      }
    }
  }

  std::vector<Outcome> run() {
    // Pairs between forced agents never change; reject the matching early
    // if one of them already blocks.
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (u_known_[i] && v_known_[j] && blocks(i, j)) return {};
    descend(0);
    return std::move(found_);
  }

 private:
  bool blocks(int i, int j) const {
    if (inst_.pair_class(i, j) == PairClass::Flexible)
      return u_[i] + v_[j] < inst_.alpha(i, j);
    return u_[i] < inst_.beta(i, j) && v_[j] < inst_.gamma(i, j);
  }

  // True if fixing (u_i, v_j) keeps all pairs among decided agents unblocked.
  bool consistent(int i, int j) const {
    for (int k = 0; k < n_; ++k) {
      if (v_known_[k] && blocks(i, k)) return false;
      if (u_known_[k] && k != i && blocks(k, j)) return false;
    }
    return true;
  }

  void descend(std::size_t level) {
    if (level == flex_.size()) {
      found_.push_back({m_, u_, v_});
      return;
    }
    const FlexPair& f = flex_[level];
    for (Value ui = 0; ui <= f.alpha; ++ui) {
      u_[f.p] = ui;
      v_[f.q] = f.alpha - ui;
      u_known_[f.p] = v_known_[f.q] = 1;
      if (consistent(f.p, f.q)) descend(level + 1);
      u_known_[f.p] = v_known_[f.q] = 0;
    }
    u_[f.p] = v_[f.q] = 0;
  }

  const Instance& inst_;
  const Matching& m_;
  int n_;
  std::vector<Value> u_, v_;
  std::vector<std::uint8_t> u_known_, v_known_;
  std::vector<FlexPair> flex_;
  std::vector<Outcome> found_;
};

constexpr int kOracleGuard = 6;

StableSet collect(const Instance& inst, bool parallel) {
  if (inst.n() > kOracleGuard)
    throw SizeGuardError("stable_outcomes", inst.n(), kOracleGuard);
  const std::vector<Matching> matchings = enumerate_matchings(inst.n());
  std::vector<std::vector<Outcome>> per(matchings.size());

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < matchings.size(); ++k)
      per[k] = MatchingEnumerator(inst, matchings[k]).run();
  } else {
    for (std::size_t k = 0; k < matchings.size(); ++k)
      per[k] = MatchingEnumerator(inst, matchings[k]).run();
  }

  StableSet set{inst, {}};
  for (auto& chunk : per)
    set.outcomes.insert(set.outcomes.end(), chunk.begin(), chunk.end());
  // Matchings come out lexicographically and splits in u-order, so the
  // concatenation is already canonical; dedup is a formality.
  set.outcomes.erase(std::unique(set.outcomes.begin(), set.outcomes.end()),
                     set.outcomes.end());
  return set;
}

}  // namespace

StableSet stable_outcomes(const Instance& inst) { return collect(inst, true); }

StableSet stable_outcomes_serial(const Instance& inst) {
  return collect(inst, false);
}

PartialOrder compare_p(const Outcome& a, const Outcome& b) {
  if (a.u.size() != b.u.size() || a.v.size() != b.v.size())
    throw std::invalid_argument("compare_p: dimension mismatch");
  bool a_up = true, b_up = true;
  for (std::size_t i = 0; i < a.u.size(); ++i) {
    if (a.u[i] < b.u[i]) a_up = false;
    if (b.u[i] < a.u[i]) b_up = false;
  }
  for (std::size_t j = 0; j < a.v.size(); ++j) {
    if (a.v[j] > b.v[j]) a_up = false;
    if (b.v[j] > a.v[j]) b_up = false;
  }
  if (a_up && b_up) return PartialOrder::Equal;
  if (a_up) return PartialOrder::Greater;
  if (b_up) return PartialOrder::Less;
  return PartialOrder::Incomparable;
}

std::optional<Outcome> p_optimal(const StableSet& set) {
  if (set.outcomes.empty())
    throw std::invalid_argument("p_optimal: empty stable set");
  std::vector<const Outcome*> maxima;
  for (const Outcome& cand : set.outcomes) {
    bool dominates_all = true;
    for (const Outcome& other : set.outcomes) {
      const PartialOrder c = compare_p(cand, other);
      if (c != PartialOrder::Greater && c != PartialOrder::Equal) {
        dominates_all = false;
        break;
      }
    }
    if (dominates_all) maxima.push_back(&cand);
  }
  if (maxima.size() != 1) return std::nullopt;
  return *maxima.front();
}

}  // namespace rifle

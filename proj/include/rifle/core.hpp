#pragma once

#include <cstdint>
#include <vector>

namespace rifle {

using Value = std::int64_t;

enum class PairClass { Rigid, Flexible };

// A two-sided market with n agents per side.  Every pair (p_i, q_j) carries a
// prescribed split (beta_ij, gamma_ij) of its joint productivity
// alpha_ij = beta_ij + gamma_ij.  An agent is either rigid (accepts exactly
// its prescribed share) or flexible (negotiates any nonnegative split).
// A pair is rigid as soon as one of its members is rigid.
//
// Immutable after construction.
class Instance {
 public:
  Instance() = default;
  Instance(int n, std::vector<Value> beta, std::vector<Value> gamma,
           std::vector<std::uint8_t> rigid_p, std::vector<std::uint8_t> rigid_q);

  int n() const { return n_; }
  Value beta(int i, int j) const { return beta_[idx(i, j)]; }
  Value gamma(int i, int j) const { return gamma_[idx(i, j)]; }
  Value alpha(int i, int j) const { return beta_[idx(i, j)] + gamma_[idx(i, j)]; }
  bool p_rigid(int i) const;
  bool q_rigid(int j) const;
  PairClass pair_class(int i, int j) const;

  const std::vector<std::uint8_t>& rigid_p() const { return rigid_p_; }
  const std::vector<std::uint8_t>& rigid_q() const { return rigid_q_; }

  bool operator==(const Instance&) const = default;

 private:
  std::size_t idx(int i, int j) const;

  int n_ = 0;
  std::vector<Value> beta_;
  std::vector<Value> gamma_;
  std::vector<std::uint8_t> rigid_p_;
  std::vector<std::uint8_t> rigid_q_;
};

// A bijection from P-indices to Q-indices.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<int> q_of_p);
  static Matching identity(int n);

  int n() const { return static_cast<int>(q_of_p_.size()); }
  int q_of(int i) const { return q_of_p_.at(i); }
  const std::vector<int>& raw() const { return q_of_p_; }
  std::vector<int> p_of() const;  // inverse map

  bool operator==(const Matching&) const = default;
  bool operator<(const Matching& o) const { return q_of_p_ < o.q_of_p_; }

 private:
  std::vector<int> q_of_p_;
};

// A matching together with payoff vectors.  Carries no judgement; whether it
// is feasible or stable is decided by the verify functions.
struct Outcome {
  Matching matching;
  std::vector<Value> u;
  std::vector<Value> v;

  bool operator==(const Outcome&) const = default;
};

Value total_productivity(const Instance& inst, const Matching& m);

// Marriage-model embedding: every agent rigid, values encode list positions
// (n + 1 - rank for listed partners, 0 for unlisted ones).  Distinct ranks
// give distinct values, so strict preferences stay strict.
Instance from_marriage(const std::vector<std::vector<int>>& prefs_p,
                       const std::vector<std::vector<int>>& prefs_q);

// Assignment-game embedding: every agent flexible, beta_ij = a_ij, gamma = 0.
// Only alpha matters for flexible pairs, so no split needs to be invented.
Instance from_assignment(const std::vector<std::vector<Value>>& a);

// Returns a 2n x 2n instance where each real agent gains a rigid dummy
// partner worth its reservation price; every other dummy pair is worthless.
Instance add_reservation_prices(const Instance& inst,
                                const std::vector<Value>& u_r,
                                const std::vector<Value>& v_r);

}  // namespace rifle

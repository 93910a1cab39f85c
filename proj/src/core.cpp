#include "rifle/core.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "rifle/errors.hpp"

namespace rifle {

Instance::Instance(int n, std::vector<Value> beta, std::vector<Value> gamma,
                   std::vector<std::uint8_t> rigid_p,
                   std::vector<std::uint8_t> rigid_q)
    : n_(n),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      rigid_p_(std::move(rigid_p)),
      rigid_q_(std::move(rigid_q)) {
  if (n_ < 0) throw std::invalid_argument("instance: negative size");
  const auto nn = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
  if (beta_.size() != nn || gamma_.size() != nn)
    throw std::invalid_argument("instance: beta/gamma must be n x n");
  if (rigid_p_.size() != static_cast<std::size_t>(n_) ||
      rigid_q_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("instance: rigidity flags must have length n");
  // Keeps sums of n entries and the solver's step budget inside 64 bits.
  constexpr Value kMaxEntry = 1'000'000'000'000'000;
  for (Value b : beta_) {
    if (b < 0) throw std::invalid_argument("instance: negative beta entry");
    if (b > kMaxEntry) throw std::invalid_argument("instance: beta entry too large");
  }
  for (Value g : gamma_) {
    if (g < 0) throw std::invalid_argument("instance: negative gamma entry");
    if (g > kMaxEntry) throw std::invalid_argument("instance: gamma entry too large");
  }
}

std::size_t Instance::idx(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::out_of_range("instance: pair index (" + std::to_string(i) +
                            ", " + std::to_string(j) + ") out of range");
  return static_cast<std::size_t>(i) * n_ + j;
}

bool Instance::p_rigid(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("instance: P-index out of range");
  return rigid_p_[i] != 0;
}

bool Instance::q_rigid(int j) const {
  if (j < 0 || j >= n_) throw std::out_of_range("instance: Q-index out of range");
  return rigid_q_[j] != 0;
}

PairClass Instance::pair_class(int i, int j) const {
  idx(i, j);  // bounds check
  return (rigid_p_[i] || rigid_q_[j]) ? PairClass::Rigid : PairClass::Flexible;
}

Matching::Matching(std::vector<int> q_of_p) : q_of_p_(std::move(q_of_p)) {
  const int n = static_cast<int>(q_of_p_.size());
  std::vector<std::uint8_t> seen(n, 0);
  for (int q : q_of_p_) {
    if (q < 0 || q >= n) throw std::invalid_argument("matching: index out of range");
    if (seen[q]) throw std::invalid_argument("matching: not injective");
    seen[q] = 1;
  }
}

Matching Matching::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Matching(std::move(v));
}

std::vector<int> Matching::p_of() const {
  std::vector<int> inv(q_of_p_.size());
  for (int i = 0; i < n(); ++i) inv[q_of_p_[i]] = i;
  return inv;
}

Value total_productivity(const Instance& inst, const Matching& m) {
  if (m.n() != inst.n())
    throw std::invalid_argument("total_productivity: matching size mismatch");
  Value t = 0;
  for (int i = 0; i < inst.n(); ++i) t += inst.alpha(i, m.q_of(i));
  return t;
}

namespace {

void fill_ranks(const std::vector<std::vector<int>>& prefs, int n,
                std::vector<Value>& out, bool transpose) {
  for (int a = 0; a < n; ++a) {
    std::set<int> seen;
    int rank = 1;
    for (int b : prefs[a]) {
      if (b < 0 || b >= n)
        throw std::out_of_range("from_marriage: listed partner out of range");
      if (!seen.insert(b).second)
        throw std::invalid_argument("from_marriage: duplicate entry in preference list");
      const Value value = static_cast<Value>(n) + 1 - rank;
      if (transpose)
        out[static_cast<std::size_t>(b) * n + a] = value;
      else
        out[static_cast<std::size_t>(a) * n + b] = value;
      ++rank;
    }
  }
}

}  // namespace

Instance from_marriage(const std::vector<std::vector<int>>& prefs_p,
                       const std::vector<std::vector<int>>& prefs_q) {
  if (prefs_p.size() != prefs_q.size())
    throw std::invalid_argument("from_marriage: sides must be equally large");
  const int n = static_cast<int>(prefs_p.size());
  const auto nn = static_cast<std::size_t>(n) * n;
  std::vector<Value> beta(nn, 0), gamma(nn, 0);
  fill_ranks(prefs_p, n, beta, /*transpose=*/false);
  fill_ranks(prefs_q, n, gamma, /*transpose=*/true);
  return Instance(n, std::move(beta), std::move(gamma),
                  std::vector<std::uint8_t>(n, 1), std::vector<std::uint8_t>(n, 1));
}

Instance from_assignment(const std::vector<std::vector<Value>>& a) {
  const int n = static_cast<int>(a.size());
  const auto nn = static_cast<std::size_t>(n) * n;
  std::vector<Value> beta(nn, 0), gamma(nn, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i].size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("from_assignment: matrix must be square");
    for (int j = 0; j < n; ++j) {
      if (a[i][j] < 0) throw std::invalid_argument("from_assignment: negative entry");
      beta[static_cast<std::size_t>(i) * n + j] = a[i][j];
    }
  }
  return Instance(n, std::move(beta), std::move(gamma),
                  std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0));
}

Instance add_reservation_prices(const Instance& inst,
                                const std::vector<Value>& u_r,
                                const std::vector<Value>& v_r) {
  const int n = inst.n();
  if (u_r.size() != static_cast<std::size_t>(n) ||
      v_r.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("add_reservation_prices: dimension mismatch");
  for (Value x : u_r)
    if (x < 0) throw std::invalid_argument("add_reservation_prices: negative reservation price");
  for (Value x : v_r)
    if (x < 0) throw std::invalid_argument("add_reservation_prices: negative reservation price");

  // Layout: real agents keep indices 0..n-1, dummies take n..2n-1.
  // Dummy Q-agent n+i is the fallback partner of p_i, dummy P-agent n+j the
  // fallback partner of q_j.
  const int m = 2 * n;
  const auto mm = static_cast<std::size_t>(m) * m;
  std::vector<Value> beta(mm, 0), gamma(mm, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      beta[static_cast<std::size_t>(i) * m + j] = inst.beta(i, j);
      gamma[static_cast<std::size_t>(i) * m + j] = inst.gamma(i, j);
    }
  for (int i = 0; i < n; ++i)
    beta[static_cast<std::size_t>(i) * m + (n + i)] = u_r[i];
  for (int j = 0; j < n; ++j)
    gamma[static_cast<std::size_t>(n + j) * m + j] = v_r[j];

  std::vector<std::uint8_t> rigid_p(m, 1), rigid_q(m, 1);
  for (int i = 0; i < n; ++i) rigid_p[i] = inst.p_rigid(i) ? 1 : 0;
  for (int j = 0; j < n; ++j) rigid_q[j] = inst.q_rigid(j) ? 1 : 0;
  return Instance(m, std::move(beta), std::move(gamma), std::move(rigid_p),
                  std::move(rigid_q));
}

}  // namespace rifle

#include "rifle/generator.hpp"

#include <random>
#include <stdexcept>

namespace rifle {

Instance generate_instance(const GenParams& params) {
  if (params.n < 1) throw std::invalid_argument("generate_instance: n must be >= 1");
  if (params.max_value < 0)
    throw std::invalid_argument("generate_instance: max_value must be >= 0");
  if (params.rigid_prob < 0.0 || params.rigid_prob > 1.0)
    throw std::invalid_argument("generate_instance: rigid_prob must lie in [0, 1]");

  std::mt19937_64 rng(params.seed);
  // Plain modulo and a 53-bit mantissa draw; std::distributions are not
  // pinned down across library implementations.
  const auto draw_value = [&]() -> Value {
    return static_cast<Value>(rng() % static_cast<std::uint64_t>(params.max_value + 1));
  };
  const auto draw_rigid = [&]() -> std::uint8_t {
    const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return x < params.rigid_prob ? 1 : 0;
  };

  const int n = params.n;
  std::vector<std::uint8_t> rigid_p(n), rigid_q(n);
  for (auto& f : rigid_p) f = draw_rigid();
  for (auto& f : rigid_q) f = draw_rigid();
  const auto nn = static_cast<std::size_t>(n) * n;
  std::vector<Value> beta(nn), gamma(nn);
  for (std::size_t k = 0; k < nn; ++k) {
    beta[k] = draw_value();
    gamma[k] = draw_value();
  }
  return Instance(n, std::move(beta), std::move(gamma), std::move(rigid_p),
                  std::move(rigid_q));
}

}  // namespace rifle

// Benchmark comparing the serial reference kernels against their OpenMP
// variants on seeded random instances.  The outputs must agree exactly;
// any mismatch aborts with a nonzero exit.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <omp.h>

#include "rifle/analysis.hpp"
#include "rifle/generator.hpp"
#include "rifle/oracle.hpp"
#include "rifle/solver.hpp"
#include "rifle/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int run(bool quick) {
  std::printf("threads: %d\n", omp_get_max_threads());

  // Oracle enumeration: the matching loop is the parallel axis.
  {
    const int reps = quick ? 2 : 12;
    const rifle::GenParams params{quick ? 4 : 5, quick ? 4 : 8, 0.3, 20240501};
    double serial_ms = 0, parallel_ms = 0;
    std::size_t checksum = 0;
    for (int r = 0; r < reps; ++r) {
      rifle::GenParams p = params;
      p.seed += static_cast<std::uint64_t>(r);
      const rifle::Instance inst = rifle::generate_instance(p);
      rifle::StableSet ser, par;
      serial_ms += time_ms([&] { ser = rifle::stable_outcomes_serial(inst); });
      parallel_ms += time_ms([&] { par = rifle::stable_outcomes(inst); });
      if (ser.outcomes != par.outcomes) {
        std::fprintf(stderr, "oracle mismatch at seed %llu\n",
                     static_cast<unsigned long long>(p.seed));
        return 1;
      }
      checksum += ser.outcomes.size();
    }
    std::printf("oracle      serial %8.1f ms   openmp %8.1f ms   speedup %.2fx   (%zu outcomes)\n",
                serial_ms, parallel_ms, serial_ms / parallel_ms, checksum);
  }

  // Non-degeneracy scan: the matching-pair loop is the parallel axis.
  {
    const int reps = quick ? 2 : 4;
    const rifle::GenParams params{quick ? 4 : 5, 6, 0.4, 20240502};
    double serial_ms = 0, parallel_ms = 0;
    int degenerate = 0;
    for (int r = 0; r < reps; ++r) {
      rifle::GenParams p = params;
      p.seed += static_cast<std::uint64_t>(r);
      const rifle::Instance inst = rifle::generate_instance(p);
      rifle::NonDegeneracyResult ser, par;
      serial_ms += time_ms([&] { ser = rifle::is_non_degenerate_serial(inst); });
      parallel_ms += time_ms([&] { par = rifle::is_non_degenerate(inst); });
      const bool same = ser.non_degenerate == par.non_degenerate &&
                        ser.witness.has_value() == par.witness.has_value() &&
                        (!ser.witness ||
                         (ser.witness->mu1 == par.witness->mu1 &&
                          ser.witness->mu2 == par.witness->mu2 &&
                          ser.witness->p_mask == par.witness->p_mask &&
                          ser.witness->q_mask == par.witness->q_mask));
      if (!same) {
        std::fprintf(stderr, "nondegen mismatch at seed %llu\n",
                     static_cast<unsigned long long>(p.seed));
        return 1;
      }
      if (!ser.non_degenerate) ++degenerate;
    }
    std::printf("nondegen    serial %8.1f ms   openmp %8.1f ms   speedup %.2fx   (%d degenerate)\n",
                serial_ms, parallel_ms, serial_ms / parallel_ms, degenerate);
  }

  // Solver scaling, for reference (sequential by nature).
  {
    const int n = quick ? 20 : 60;
    const rifle::GenParams params{n, 50, 0.3, 20240503};
    const rifle::Instance inst = rifle::generate_instance(params);
    rifle::Outcome out;
    const double ms = time_ms([&] { out = rifle::solve(inst); });
    const auto verdict = rifle::classify(inst, out);
    std::printf("solve n=%-3d %8.1f ms   verdict %s\n", n, ms,
                rifle::to_string(verdict).c_str());
    if (verdict != rifle::Verdict::Stable && verdict != rifle::Verdict::StronglyStable)
      return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  return run(quick);
}

// Compares the serial and OpenMP weight-enumeration kernels on the
// GF(25)/GF(5) trace codes, where the coefficient space grows by a factor
// of 25 per k.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "rstrace/bounds.hpp"

using namespace rstrace;

namespace {

double seconds(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
  int kmax = argc > 1 ? std::atoi(argv[1]) : 5;
  Tower tw(5, 1, 2);
  std::printf("%3s %6s %12s %10s %10s %8s\n", "k", "kappa", "words",
              "serial_s", "openmp_s", "speedup");
  for (int k = 3; k <= kmax; ++k) {
    TraceCode tc = build_trace_code(RepairScheme(tw, k));
    unsigned long long words = 1;
    for (int i = 0; i < tc.kappa; ++i) words *= tw.subfield_size();

    auto t0 = std::chrono::steady_clock::now();
    long long ds = min_weight_serial(tw, tc.gen);
    auto t1 = std::chrono::steady_clock::now();
    long long dp = min_weight_parallel(tw, tc.gen);
    auto t2 = std::chrono::steady_clock::now();

    if (ds != dp) {
      std::fprintf(stderr, "kernel mismatch at k=%d: %lld vs %lld\n", k, ds,
                   dp);
      return 1;
    }
    double ser = seconds(t0, t1), par = seconds(t1, t2);
    std::printf("%3d %6d %12llu %10.3f %10.3f %8.2f\n", k, tc.kappa,
                words - 1, ser, par, par > 0 ? ser / par : 0.0);
  }
  return 0;
}

#pragma once

#include <cstdint>
#include <optional>

#include "rstrace/trace_repair.hpp"

namespace rstrace {

// Lower bounds on the minimum distance of the trace code of the
// full-length RS code with parameters (p, m, t, k), plus the exact
// distance when enumeration is affordable.  All arithmetic is exact
// integer arithmetic; a bound is absent when its applicability condition
// fails.
struct BoundsReport {
  unsigned p = 0, m = 0, t = 0;
  long long k = 0;
  long long n = 0;      // |A| = p^(mt) - 1
  long long delta = 0;  // lift_degree_bound(p^(mt-m), k)
  std::optional<long long> d1, d2, d3, d_exact, d_star;
  std::optional<long long> e1, e2, e3, e_exact;
};

// d1 = p^(mt) - 1 - delta, present when k <= p^m and d1 > 0.
std::optional<long long> degree_bound(unsigned p, unsigned m, unsigned t,
                                      long long k);
// d2 = floor((p^(mt) - k) / p^(mt-m)), present when k <= p^(mt) - p^(mt-m).
std::optional<long long> lifted_bound(unsigned p, unsigned m, unsigned t,
                                      long long k);
// d3 = floor(c * (p^(mt) - 1 - (k-1) sqrt(p^(mt)))) with c = (p^m - p)/p^m
// for m >= 2 and (p-1)/p for m = 1; present when
// k < 1 + (p^(mt)-1)/sqrt(p^(mt)).  Square roots of non-square sizes are
// handled by exact integer comparison, never floating point.
std::optional<long long> char_sum_bound(unsigned p, unsigned m, unsigned t,
                                        long long k);

long long correctable(long long d);  // floor((d-1)/2), clamped at 0

struct ExactOptions {
  long long budget = 300'000'000;  // max number of codewords to enumerate
  bool parallel = true;
};

// Minimum Hamming weight over all nonzero codewords, by enumerating the
// B-coefficient space of the generator matrix.  Absent when the number of
// codewords exceeds the budget; never a wrong number.
std::optional<long long> exact_distance(const TraceCode& tc,
                                        const ExactOptions& opt = {});

BoundsReport bounds_report(unsigned p, unsigned m, unsigned t, long long k,
                           bool want_exact = false,
                           const ExactOptions& opt = {});

struct BandwidthPoint {
  long long e = 0;
  long long symbols = 0;
  long long bits = 0;
};

// Classical repair: download k + 2e full symbols.
BandwidthPoint bandwidth_classical(unsigned p, unsigned m, unsigned t,
                                   long long k, long long e);
// Trace repair: erase what the distance budget allows and download
// n - d_star + 1 + 2e traces.
BandwidthPoint bandwidth_trace(long long n, long long d_star, long long e,
                               unsigned p, unsigned m);

// Weight-enumeration kernels behind exact_distance.  The serial version is
// the reference; the OpenMP version partitions the coefficient space and
// must return the same minimum for any partitioning.
long long min_weight_serial(const Tower& tw, const Mat<BElem>& gen);
long long min_weight_parallel(const Tower& tw, const Mat<BElem>& gen);

}  // namespace rstrace

#include "rstrace/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace rstrace {
namespace {

long long ipow_ll(long long b, unsigned e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

void validate_params(unsigned p, unsigned m, unsigned t) {
  bool prime = p >= 2;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (m < 1 || t < 1) throw std::invalid_argument("m and t must be positive");
  double bits = (double)m * t * std::log2((double)p);
  if (bits > 40) throw std::invalid_argument("field size too large for bounds");
}

long long ceil_log2(long long v) {
  long long bits = 0;
  while ((1LL << bits) < v) ++bits;
  return bits;
}

}  // namespace

long long correctable(long long d) { return d >= 1 ? (d - 1) / 2 : 0; }

std::optional<long long> degree_bound(unsigned p, unsigned m, unsigned t,
                                      long long k) {
  validate_params(p, m, t);
  long long q = ipow_ll(p, m * t);
  long long pw = ipow_ll(p, m * t - m);
  if (k < 1 || k > ipow_ll(p, m)) return std::nullopt;
  long long d1 = q - 1 - lift_degree_bound(std::uint64_t(pw), k);
  if (d1 <= 0) return std::nullopt;
  return d1;
}

std::optional<long long> lifted_bound(unsigned p, unsigned m, unsigned t,
                                      long long k) {
  validate_params(p, m, t);
  long long q = ipow_ll(p, m * t);
  long long pw = ipow_ll(p, m * t - m);
  if (k < 1 || k > q - pw) return std::nullopt;
  return (q - k) / pw;
}

std::optional<long long> char_sum_bound(unsigned p, unsigned m, unsigned t,
                                        long long k) {
  validate_params(p, m, t);
  long long q = ipow_ll(p, m * t);
  if (k < 1) return std::nullopt;
  // applicability: (k-1) sqrt(q) < q - 1, compared as squares
  {
    __int128 lhs = (__int128)(k - 1) * (k - 1) * q;
    __int128 rhs = (__int128)(q - 1) * (q - 1);
    if (lhs >= rhs) return std::nullopt;
  }
  long long num = m >= 2 ? ipow_ll(p, m) - p : p - 1;  // c = num / den
  long long den = m >= 2 ? ipow_ll(p, m) : p;
  if ((m * t) % 2 == 0) {
    long long s = ipow_ll(p, m * t / 2);
    return num * (q - 1 - (k - 1) * s) / den;
  }
  // sqrt(q) irrational: d3 is the largest d with
  //   d * den <= num * (q - 1) - num * (k - 1) * sqrt(q),
  // i.e. (num (k-1))^2 q <= (num (q-1) - d den)^2 with a nonnegative
  // right-hand base.
  __int128 w2 = (__int128)num * (k - 1);
  w2 = w2 * w2 * q;
  long long lo = 0, hi = num * (q - 1) / den;
  auto ok = [&](long long d) {
    __int128 r = (__int128)num * (q - 1) - (__int128)d * den;
    if (r < 0) return false;
    return r * r >= w2;
  };
  while (lo < hi) {
    long long mid = (lo + hi + 1) / 2;
    if (ok(mid))
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::optional<long long> exact_distance(const TraceCode& tc,
                                        const ExactOptions& opt) {
  if (tc.kappa < 1) throw std::invalid_argument("zero-dimensional trace code");
  const Tower& tw = tc.scheme.tower();
  // number of nonzero codewords = |B|^kappa - 1, checked against the budget
  const long long qb = tw.subfield_size();
  long long words = 1;
  for (int i = 0; i < tc.kappa; ++i) {
    if (words > (1LL << 62) / qb || words > opt.budget / qb + 1)
      return std::nullopt;
    words *= qb;
  }
  if (words - 1 > opt.budget) return std::nullopt;
  return opt.parallel ? min_weight_parallel(tw, tc.gen)
                      : min_weight_serial(tw, tc.gen);
}

BoundsReport bounds_report(unsigned p, unsigned m, unsigned t, long long k,
                           bool want_exact, const ExactOptions& opt) {
  validate_params(p, m, t);
  BoundsReport r;
  r.p = p;
  r.m = m;
  r.t = t;
  r.k = k;
  r.n = ipow_ll(p, m * t) - 1;
  r.delta = lift_degree_bound(std::uint64_t(ipow_ll(p, m * t - m)), k);
  r.d1 = degree_bound(p, m, t, k);
  r.d2 = lifted_bound(p, m, t, k);
  r.d3 = char_sum_bound(p, m, t, k);
  for (auto d : {r.d1, r.d2, r.d3})
    if (d && (!r.d_star || *d > *r.d_star)) r.d_star = d;
  if (want_exact) {
    Tower tw(p, m, t);
    RepairScheme sc(tw, int(k));
    r.d_exact = exact_distance(build_trace_code(sc), opt);
  }
  if (r.d1) r.e1 = correctable(*r.d1);
  if (r.d2) r.e2 = correctable(*r.d2);
  if (r.d3) r.e3 = correctable(*r.d3);
  if (r.d_exact) r.e_exact = correctable(*r.d_exact);
  return r;
}

BandwidthPoint bandwidth_classical(unsigned p, unsigned m, unsigned t,
                                   long long k, long long e) {
  validate_params(p, m, t);
  long long q = ipow_ll(p, m * t);
  if (e < 0 || 2 * e > q - k)
    throw std::invalid_argument("error count beyond classical radius");
  BandwidthPoint bp;
  bp.e = e;
  bp.symbols = k + 2 * e;
  bp.bits = bp.symbols * ceil_log2(q);
  return bp;
}

BandwidthPoint bandwidth_trace(long long n, long long d_star, long long e,
                               unsigned p, unsigned m) {
  if (e < 0 || 2 * e > d_star - 1)
    throw std::invalid_argument("error count beyond trace radius");
  BandwidthPoint bp;
  bp.e = e;
  // 2e + s <= d_star - 1 lets s = d_star - 1 - 2e positions go undownloaded.
  bp.symbols = n - d_star + 1 + 2 * e;
  bp.bits = bp.symbols * ceil_log2(ipow_ll(p, m));
  return bp;
}

}  // namespace rstrace

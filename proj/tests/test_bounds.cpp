#include "rstrace/bounds.hpp"

#include <algorithm>

#include <stdexcept>

#include "doctest.h"
#include "rstrace/rng.hpp"

using namespace rstrace;

TEST_CASE("degree bound") {
  CHECK(degree_bound(5, 1, 2, 3) == 14);
  CHECK(degree_bound(2, 2, 2, 2) == 11);
  CHECK(degree_bound(2, 4, 3, 2) == 3839);
  CHECK(degree_bound(5, 1, 2, 1) == 20);
  CHECK_FALSE(degree_bound(5, 1, 2, 6).has_value());  // k > p^m
  CHECK_FALSE(degree_bound(2, 4, 3, 17).has_value());
}

TEST_CASE("lifted bound") {
  CHECK(lifted_bound(5, 1, 2, 1) == 4);
  CHECK(lifted_bound(2, 4, 3, 7) == 15);
  CHECK_FALSE(lifted_bound(5, 1, 2, 21).has_value());
  CHECK(lifted_bound(5, 1, 2, 20) == 1);
}

TEST_CASE("character sum bound") {
  CHECK(char_sum_bound(5, 1, 2, 2) == 15);
  CHECK(char_sum_bound(5, 1, 2, 1) == 19);   // m = 1 branch
  CHECK(char_sum_bound(2, 4, 3, 4) == 3415);  // m >= 2 branch
  CHECK_FALSE(char_sum_bound(5, 1, 2, 6).has_value());
  CHECK(char_sum_bound(5, 1, 2, 5) == 3);
  // odd m*t: sqrt(8) handled exactly; floor((7 - sqrt(8))/2) = 2
  CHECK(char_sum_bound(2, 1, 3, 2) == 2);
  CHECK(char_sum_bound(2, 1, 3, 1) == 3);  // floor(7/2)
  // more irrational-sqrt cases, frozen from a high-precision oracle
  CHECK(char_sum_bound(2, 1, 5, 2) == 12);
  CHECK(char_sum_bound(2, 1, 5, 6) == 1);
  CHECK(char_sum_bound(3, 1, 3, 2) == 13);
  CHECK(char_sum_bound(5, 1, 3, 3) == 81);
  CHECK(char_sum_bound(2, 3, 3, 5) == 315);
}

TEST_CASE("bounds are non-increasing in k") {
  auto sweep = [](unsigned p, unsigned m, unsigned t, int kmax) {
    std::optional<long long> prev1, prev2, prev3;
    for (int k = 1; k <= kmax; ++k) {
      auto d1 = degree_bound(p, m, t, k);
      auto d2 = lifted_bound(p, m, t, k);
      auto d3 = char_sum_bound(p, m, t, k);
      if (prev1 && d1) CHECK(*d1 <= *prev1);
      if (prev2 && d2) CHECK(*d2 <= *prev2);
      if (prev3 && d3) CHECK(*d3 <= *prev3);
      if (d1) prev1 = d1;
      if (d2) prev2 = d2;
      if (d3) prev3 = d3;
    }
  };
  sweep(5, 1, 2, 20);
  sweep(2, 4, 3, 100);
  sweep(3, 1, 2, 6);
}

TEST_CASE("bounds_report aggregates with dashes") {
  auto r = bounds_report(5, 1, 2, 4);
  CHECK(r.e1 == 4);
  CHECK(r.e2 == 1);
  CHECK(r.e3 == 3);
  CHECK(r.d_star == 9);
  CHECK(r.n == 24);
  CHECK(r.delta == 15);

  auto r3 = bounds_report(2, 4, 3, 10);
  CHECK(r3.e1 == 895);
  CHECK(r3.e2 == 7);
  CHECK(r3.e3 == 1539);

  auto r9 = bounds_report(5, 1, 2, 9);
  CHECK_FALSE(r9.e1.has_value());
  CHECK(r9.e2 == 1);
  CHECK_FALSE(r9.e3.has_value());
  CHECK(r9.d_star == 3);  // only the lifted bound survives
}

namespace {

// independent route: minimum weight over all message polynomials
long long min_weight_by_messages(const TraceCode& tc) {
  const Tower& tw = tc.scheme.tower();
  std::vector<FElem> msg(tc.scheme.k(), 0);
  long long best = tc.scheme.n() + 1;
  for (;;) {
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == tw.field_size()) msg[i++] = 0;
    if (i == msg.size()) break;
    TraceWord w = traces_of(tc.scheme, Poly{std::vector<FElem>(msg)});
    long long wt = 0;
    for (BElem s : w.sym) wt += (s != 0);
    if (wt > 0 && wt < best) best = wt;
  }
  return best;
}

}  // namespace

TEST_CASE("exact distance matches the message-enumeration oracle") {
  for (auto tw : {Tower(3, 1, 2), Tower(2, 2, 2), Tower(5, 1, 2)}) {
    for (int k = 1; k <= 3; ++k) {
      TraceCode tc = build_trace_code(RepairScheme(tw, k));
      auto d = exact_distance(tc);
      REQUIRE(d.has_value());
      CHECK(*d == min_weight_by_messages(tc));
    }
  }
}

TEST_CASE("exact distance frozen values for GF(25)") {
  Tower tw(5, 1, 2);
  TraceCode tc1 = build_trace_code(RepairScheme(tw, 1));
  CHECK(exact_distance(tc1) == 20);
  TraceCode tc5 = build_trace_code(RepairScheme(tw, 5));
  auto d5 = exact_distance(tc5);
  REQUIRE(d5.has_value());
  CHECK(correctable(*d5) == 4);
}

TEST_CASE("serial and parallel kernels agree") {
  for (auto tw : {Tower(3, 1, 2), Tower(5, 1, 2), Tower(2, 2, 2)}) {
    for (int k = 1; k <= 4; ++k) {
      TraceCode tc = build_trace_code(RepairScheme(tw, k));
      CHECK(min_weight_serial(tw, tc.gen) == min_weight_parallel(tw, tc.gen));
    }
  }
}

TEST_CASE("budget is respected") {
  Tower tw(5, 1, 2);
  TraceCode tc = build_trace_code(RepairScheme(tw, 4));  // kappa = 7
  CHECK_FALSE(exact_distance(tc, {1000, true}).has_value());
  CHECK(exact_distance(tc, {80'000, true}).has_value());  // 5^7 - 1 = 78124
}

TEST_CASE("exact distance dominates the lower bounds") {
  for (auto tw : {Tower(3, 1, 2), Tower(5, 1, 2), Tower(2, 2, 2)}) {
    for (int k = 1; k <= 4; ++k) {
      auto r = bounds_report(tw.p(), tw.m(), tw.t(), k, true);
      REQUIRE(r.d_exact.has_value());
      for (auto d : {r.d1, r.d2, r.d3})
        if (d) CHECK(*r.d_exact >= *d);
    }
  }
}

TEST_CASE("bandwidth accounting") {
  // the GF(16) story: 12 symbols * 4 bits vs 15 traces * 2 bits
  auto cl = bandwidth_classical(2, 2, 2, 2, 5);
  CHECK(cl.symbols == 12);
  CHECK(cl.bits == 48);
  auto tr = bandwidth_trace(15, 11, 5, 2, 2);
  CHECK(tr.symbols == 15);
  CHECK(tr.bits == 30);
  CHECK(tr.bits < cl.bits);

  CHECK(bandwidth_classical(5, 1, 2, 2, 0).symbols == 2);
  CHECK(bandwidth_classical(5, 1, 2, 2, 0).bits == 10);
  CHECK(bandwidth_classical(5, 1, 2, 2, 5).bits == 60);
  // full-radius point for GF(25), k=1
  CHECK(bandwidth_trace(24, 19, 9, 5, 1).symbols == 24);
  CHECK(bandwidth_trace(24, 19, 9, 5, 1).bits == 72);
  // e = 0 with d_star = n needs a single trace
  CHECK(bandwidth_trace(24, 24, 0, 5, 1).symbols == 1);
  CHECK(bandwidth_trace(24, 19, 0, 5, 1).bits == 18);

  CHECK_THROWS_AS(bandwidth_classical(2, 2, 2, 2, 8), std::invalid_argument);
  CHECK_THROWS_AS(bandwidth_trace(15, 11, 6, 2, 2), std::invalid_argument);
}

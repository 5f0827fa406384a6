#include "rstrace/rs.hpp"

#include <algorithm>

#include <stdexcept>

#include "doctest.h"
#include "rstrace/rng.hpp"

using namespace rstrace;

namespace {

std::vector<FElem> nonzero_points(const Tower& tw) {
  std::vector<FElem> pts(tw.field_size() - 1);
  for (FElem a = 1; a < tw.field_size(); ++a) pts[a - 1] = a;
  return pts;
}

std::vector<FElem> all_points(const Tower& tw) {
  std::vector<FElem> pts(tw.field_size());
  for (FElem a = 0; a < tw.field_size(); ++a) pts[a] = a;
  return pts;
}

Poly random_poly(const Tower& tw, int k, SplitMix64& rng) {
  Poly f;
  f.c.resize(k);
  for (auto& c : f.c) c = FElem(rng.below(tw.field_size()));
  f.trim();
  return f;
}

int weight(const Codeword& w) {
  int wt = 0;
  for (FElem v : w) wt += (v != 0);
  return wt;
}

int distance(const Codeword& a, const Codeword& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

// next message polynomial in mixed-radix order; returns false on wrap
bool next_message(const Tower& tw, std::vector<FElem>& msg) {
  for (auto& c : msg) {
    if (++c < tw.field_size()) return true;
    c = 0;
  }
  return false;
}

}  // namespace

TEST_CASE("encode basics") {
  Tower tw(2, 2, 1);  // GF(4)
  GrsCode rs = make_rs(nonzero_points(tw), 1);
  CHECK(encode(tw, rs, Poly{}) == Codeword{0, 0, 0});
  CHECK(encode(tw, rs, Poly{{3}}) == Codeword{3, 3, 3});
  CHECK_THROWS_AS(encode(tw, rs, Poly{{1, 1}}), std::invalid_argument);
}

TEST_CASE("RS codes over GF(9) are MDS") {
  Tower tw(3, 1, 2);
  for (auto pts : {nonzero_points(tw), all_points(tw)}) {
    int n = int(pts.size());
    for (int k = 1; k <= 3; ++k) {
      GrsCode rs = make_rs(pts, k);
      std::vector<FElem> msg(k, 0);
      int dmin = n + 1;
      while (next_message(tw, msg)) {
        Poly f{std::vector<FElem>(msg)};
        if (f.is_zero()) continue;
        dmin = std::min(dmin, weight(encode(tw, rs, f)));
      }
      CHECK(dmin == n - k + 1);
    }
  }
}

TEST_CASE("dual multipliers") {
  SUBCASE("full field in characteristic 2 gives all ones") {
    for (auto tw : {Tower(2, 2, 1), Tower(2, 2, 2)}) {
      auto lam = dual_multipliers(tw, all_points(tw));
      for (FElem v : lam) CHECK(v == 1);
    }
  }
  SUBCASE("punctured field matches the derivative of x^(q-1) - 1") {
    for (auto tw : {Tower(3, 1, 2), Tower(2, 2, 2)}) {
      auto pts = nonzero_points(tw);
      auto lam = dual_multipliers(tw, pts);
      std::uint64_t q = tw.field_size();
      for (std::size_t j = 0; j < pts.size(); ++j)
        CHECK(lam[j] == tw.neg(tw.inv(tw.pow(pts[j], q - 2))));
    }
  }
  SUBCASE("single point gives the empty product") {
    Tower tw(3, 1, 2);
    CHECK(dual_multipliers(tw, {FElem(4)}) == std::vector<FElem>{1});
  }
  SUBCASE("duplicate points are rejected") {
    Tower tw(3, 1, 2);
    CHECK_THROWS_AS(dual_multipliers(tw, {1, 2, 1}), std::invalid_argument);
  }
}

TEST_CASE("dual multipliers satisfy the orthogonality contract") {
  // exhaustive on a small point set, every f and g within degree budgets
  Tower tw(2, 2, 1);
  std::vector<FElem> pts{0, 1, 2, 3};
  auto lam = dual_multipliers(tw, pts);
  int k = 2;
  std::vector<FElem> fm(k, 0), gm(pts.size() - k, 0);
  while (next_message(tw, fm)) {
    Poly f{std::vector<FElem>(fm)};
    std::fill(gm.begin(), gm.end(), 0);
    while (next_message(tw, gm)) {
      Poly g{std::vector<FElem>(gm)};
      FElem acc = 0;
      for (std::size_t j = 0; j < pts.size(); ++j)
        acc = tw.add(acc, tw.mul(poly_eval(tw, f, pts[j]),
                                 tw.mul(lam[j], poly_eval(tw, g, pts[j]))));
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("grs_dual") {
  Tower tw(3, 1, 2);
  SUBCASE("dimensions and randomized orthogonality both ways") {
    SplitMix64 rng(5);
    GrsCode code = make_grs(nonzero_points(tw), 3, [&] {
      std::vector<FElem> m(8);
      for (auto& v : m) v = FElem(1 + rng.below(8));
      return m;
    }());
    GrsCode dual = grs_dual(tw, code);
    CHECK(dual.dim == 5);
    GrsCode ddual = grs_dual(tw, dual);
    CHECK(ddual.dim == code.dim);
    for (int round = 0; round < 50; ++round) {
      Codeword a = encode(tw, code, random_poly(tw, code.dim, rng));
      Codeword b = encode(tw, dual, random_poly(tw, dual.dim, rng));
      Codeword c = encode(tw, ddual, random_poly(tw, ddual.dim, rng));
      FElem ab = 0, bc = 0;
      for (std::size_t j = 0; j < a.size(); ++j) {
        ab = tw.add(ab, tw.mul(a[j], b[j]));
        bc = tw.add(bc, tw.mul(b[j], c[j]));
      }
      CHECK(ab == 0);
      CHECK(bc == 0);
    }
  }
  SUBCASE("dual of the full-length RS(9,2)") {
    GrsCode rs = make_rs(all_points(tw), 2);
    GrsCode dual = grs_dual(tw, rs);
    CHECK(dual.dim == 7);
  }
  SUBCASE("randomized orthogonality above 16 elements") {
    Tower t25(5, 1, 2);
    SplitMix64 rng(7);
    GrsCode code = make_rs(nonzero_points(t25), 9);
    GrsCode dual = grs_dual(t25, code);
    for (int round = 0; round < 100; ++round) {
      Codeword a = encode(t25, code, random_poly(t25, code.dim, rng));
      Codeword b = encode(t25, dual, random_poly(t25, dual.dim, rng));
      FElem acc = 0;
      for (std::size_t j = 0; j < a.size(); ++j)
        acc = t25.add(acc, t25.mul(a[j], b[j]));
      CHECK(acc == 0);
    }
  }
  SUBCASE("dual dimension of RS(GF(4)*, 1)") {
    Tower t4(2, 2, 1);
    CHECK(grs_dual(t4, make_rs(nonzero_points(t4), 1)).dim == 2);
  }
}

TEST_CASE("bw_decode round trips and radius") {
  Tower tw(5, 1, 2);
  auto pts = nonzero_points(tw);
  SplitMix64 rng(17);

  SUBCASE("no errors") {
    GrsCode rs = make_rs(pts, 7);
    for (int round = 0; round < 20; ++round) {
      Poly f = random_poly(tw, 7, rng);
      auto got = bw_decode(tw, rs, encode(tw, rs, f), 8);
      REQUIRE(got.has_value());
      CHECK(*got == f);
      CHECK(bw_decode(tw, rs, encode(tw, rs, f), 8) == got);  // deterministic
    }
  }

  SUBCASE("six errors at k = 11") {
    GrsCode rs = make_rs(pts, 11);
    for (int round = 0; round < 100; ++round) {
      Poly f = random_poly(tw, 11, rng);
      Codeword w = encode(tw, rs, f);
      std::vector<int> pos(w.size());
      for (std::size_t j = 0; j < w.size(); ++j) pos[j] = int(j);
      for (int j = 0; j < 6; ++j)
        std::swap(pos[j], pos[j + rng.below(w.size() - j)]);
      for (int j = 0; j < 6; ++j) {
        FElem wrong = FElem(rng.below(24));
        if (wrong >= w[pos[j]]) wrong++;
        w[pos[j]] = wrong;
      }
      auto got = bw_decode(tw, rs, w, 6);
      REQUIRE(got.has_value());
      CHECK(*got == f);
    }
  }

  SUBCASE("preconditions") {
    GrsCode rs = make_rs(pts, 11);
    Codeword w(pts.size(), 0);
    CHECK_THROWS_AS(bw_decode(tw, rs, w, 7), std::invalid_argument);
    CHECK_THROWS_AS(bw_decode(tw, rs, w, -1), std::invalid_argument);
  }
}

TEST_CASE("bw_decode never answers outside the radius") {
  // push a word into another codeword's ball: the decoder must return that
  // codeword, not the transmitted one
  Tower tw(3, 1, 2);
  GrsCode rs = make_rs(nonzero_points(tw), 2);
  const int e_max = 3;
  SplitMix64 rng(23);
  for (int round = 0; round < 200; ++round) {
    Poly f1 = random_poly(tw, 2, rng), f2 = random_poly(tw, 2, rng);
    if (f1 == f2) continue;
    Codeword c1 = encode(tw, rs, f1), c2 = encode(tw, rs, f2);
    // received = c2 with e_max positions reverted to c1
    Codeword w = c2;
    int moved = 0;
    for (std::size_t j = 0; j < w.size() && moved < e_max; ++j)
      if (c1[j] != c2[j]) {
        w[j] = c1[j];
        ++moved;
      }
    auto got = bw_decode(tw, rs, w, e_max);
    REQUIRE(got.has_value());
    CHECK(distance(encode(tw, rs, *got), w) <= e_max);
    CHECK(*got == f2);
  }
}

TEST_CASE("bw_decode with erasures") {
  Tower tw(5, 1, 2);
  GrsCode rs = make_rs(nonzero_points(tw), 10);
  SplitMix64 rng(29);
  for (int round = 0; round < 100; ++round) {
    Poly f = random_poly(tw, 10, rng);
    Codeword w = encode(tw, rs, f);
    // 4 erasures + 5 errors: 2e + s = 14 = n - k
    std::vector<int> pos(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) pos[j] = int(j);
    for (int j = 0; j < 9; ++j)
      std::swap(pos[j], pos[j + rng.below(w.size() - j)]);
    for (int j = 0; j < 4; ++j) w[pos[j]] = kNoSym;
    for (int j = 4; j < 9; ++j) {
      FElem wrong = FElem(rng.below(24));
      if (wrong >= w[pos[j]]) wrong++;
      w[pos[j]] = wrong;
    }
    auto got = bw_decode(tw, rs, w, 5);
    REQUIRE(got.has_value());
    CHECK(*got == f);
  }
}

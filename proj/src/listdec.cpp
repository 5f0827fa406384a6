#include "rstrace/listdec.hpp"

#include <algorithm>
#include <stdexcept>

#include "rstrace/bounds.hpp"
#include "rstrace/linalg.hpp"

namespace rstrace {
namespace {

// 2 * monomial_count, always an exact integer product.
__int128 monomial_count2(long long wdeg, long long deg_bound) {
  long long q = wdeg / deg_bound;
  return (__int128)(q + 1) * (2 * wdeg - deg_bound * q + 2);
}

// C(a, b) mod p by Lucas.
unsigned binom_mod_p(long long a, long long b, unsigned p) {
  if (b < 0 || b > a) return 0;
  unsigned long long r = 1;
  while (a > 0 || b > 0) {
    long long ad = a % p, bd = b % p;
    if (bd > ad) return 0;
    // C(ad, bd) mod p with ad, bd < p
    unsigned long long num = 1, den = 1;
    for (long long i = 0; i < bd; ++i) {
      num = num * ((ad - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den is invertible mod p
    unsigned long long dinv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) dinv = dinv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    r = r * (num * dinv % p) % p;
    a /= p;
    b /= p;
  }
  return unsigned(r);
}

}  // namespace

long long monomial_count(long long wdeg, long long deg_bound) {
  if (wdeg < 0 || deg_bound < 1)
    throw std::invalid_argument("bad monomial count arguments");
  return (long long)(monomial_count2(wdeg, deg_bound) / 2);
}

GsParams gs_params(long long n, long long deg_bound, long long mu,
                   long long d_star) {
  if (n < 1 || deg_bound < 1 || mu < 1 || d_star < 1)
    throw std::invalid_argument("bad list-decoder parameters");
  __int128 threshold = (__int128)n * mu * (mu + 1);  // doubled
  long long hi = deg_bound;
  while (monomial_count2(hi, deg_bound) <= threshold) hi *= 2;
  long long lo = 0;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (monomial_count2(mid, deg_bound) > threshold)
      hi = mid;
    else
      lo = mid + 1;
  }
  GsParams g;
  g.n = n;
  g.deg_bound = deg_bound;
  g.mu = mu;
  g.wdeg = lo;
  g.e_raw = n - lo / mu;
  g.e_capped = std::min(g.e_raw, correctable(d_star));
  return g;
}

GsParams best_gs_params(long long n, long long deg_bound, long long d_star,
                        long long mu_max) {
  if (mu_max < 1) throw std::invalid_argument("mu_max must be positive");
  GsParams best = gs_params(n, deg_bound, 1, d_star);
  for (long long mu = 2; mu <= mu_max; ++mu) {
    GsParams g = gs_params(n, deg_bound, mu, d_star);
    if (g.e_capped > best.e_capped) best = g;
  }
  return best;
}

Bivariate interpolate(const Tower& tw,
                      std::span<const std::pair<FElem, FElem>> points,
                      long long mu, long long wdeg, long long deg_bound) {
  const long long n = (long long)points.size();
  if (mu < 1) throw std::invalid_argument("multiplicity must be positive");
  if (monomial_count2(wdeg, deg_bound) <= (__int128)n * mu * (mu + 1))
    throw std::invalid_argument("monomial count does not clear constraints");

  // monomial list (b-major, a ascending)
  std::vector<std::pair<long long, long long>> mon;  // (a, b)
  for (long long b = 0; b * deg_bound <= wdeg; ++b)
    for (long long a = 0; a + b * deg_bound <= wdeg; ++a) mon.push_back({a, b});

  const std::size_t rows = std::size_t(n) * std::size_t(mu * (mu + 1) / 2);
  Mat<FElem> sys(rows, mon.size());
  std::size_t row = 0;
  for (long long i = 0; i < n; ++i) {
    FElem x = points[i].first, y = points[i].second;
    // powers of the point coordinates
    std::vector<FElem> xp(std::size_t(wdeg) + 1), yp(mon.back().second + 1);
    xp[0] = 1;
    for (std::size_t j = 1; j < xp.size(); ++j) xp[j] = tw.mul(xp[j - 1], x);
    yp[0] = 1;
    for (std::size_t j = 1; j < yp.size(); ++j) yp[j] = tw.mul(yp[j - 1], y);
    for (long long r = 0; r < mu; ++r)
      for (long long s = 0; r + s < mu; ++s) {
        for (std::size_t c = 0; c < mon.size(); ++c) {
          auto [a, b] = mon[c];
          if (a < r || b < s) continue;
          unsigned coef = binom_mod_p(a, r, tw.p()) *
                          binom_mod_p(b, s, tw.p()) % tw.p();
          if (coef == 0) continue;
          FElem v = tw.mul(FElem(coef), tw.mul(xp[a - r], yp[b - s]));
          sys.at(row, c) = tw.add(sys.at(row, c), v);
        }
        ++row;
      }
  }
  FOps fd{&tw};
  auto kv = kernel_vector(fd, std::move(sys));
  if (!kv) throw std::logic_error("interpolation system has trivial kernel");

  Bivariate q;
  q.yc.resize(std::size_t(wdeg / deg_bound) + 1);
  for (std::size_t c = 0; c < mon.size(); ++c) {
    auto [a, b] = mon[c];
    if ((*kv)[c] == 0) continue;
    Poly& pb = q.yc[b];
    if (pb.c.size() <= std::size_t(a)) pb.c.resize(a + 1, 0);
    pb.c[a] = (*kv)[c];
  }
  for (auto& pb : q.yc) pb.trim();
  return q;
}

FElem bivariate_eval(const Tower& tw, const Bivariate& q, FElem x, FElem y) {
  FElem acc = 0, yp = 1;
  for (const Poly& pb : q.yc) {
    acc = tw.add(acc, tw.mul(yp, poly_eval(tw, pb, x)));
    yp = tw.mul(yp, y);
  }
  return acc;
}

namespace {

// Q(x, g(x)) as a polynomial.
Poly compose_poly(const Tower& tw, const Bivariate& q, const Poly& g) {
  Poly acc, gp{{1}};
  for (const Poly& pb : q.yc) {
    acc = poly_add(tw, acc, poly_mul(tw, pb, gp));
    gp = poly_mul(tw, gp, g);
  }
  return acc;
}

// Largest power of x dividing every coefficient polynomial.
void strip_x(Bivariate& q) {
  std::size_t s = SIZE_MAX;
  for (const Poly& pb : q.yc) {
    if (pb.is_zero()) continue;
    std::size_t low = 0;
    while (pb.c[low] == 0) ++low;
    s = std::min(s, low);
  }
  if (s == SIZE_MAX || s == 0) return;
  for (Poly& pb : q.yc)
    if (!pb.is_zero()) pb.c.erase(pb.c.begin(), pb.c.begin() + s);
}

// Q(x, x*y + gamma).
Bivariate shift_compose(const Tower& tw, const Bivariate& q, FElem gamma) {
  Bivariate out;
  out.yc.resize(q.yc.size());
  for (std::size_t b = 0; b < q.yc.size(); ++b) {
    if (q.yc[b].is_zero()) continue;
    // (x y + gamma)^b = sum_j C(b,j) gamma^(b-j) x^j y^j
    std::vector<FElem> gp(b + 1);  // gp[j] = gamma^(b-j)
    gp[b] = 1;
    for (std::size_t j = b; j-- > 0;) gp[j] = tw.mul(gp[j + 1], gamma);
    for (std::size_t j = 0; j <= b; ++j) {
      unsigned coef = binom_mod_p((long long)b, (long long)j, tw.p());
      if (coef == 0) continue;
      FElem scale = tw.mul(FElem(coef), gp[j]);
      if (scale == 0) continue;
      // add yc[b] * scale * x^j into out.yc[j]
      Poly term = poly_scale(tw, q.yc[b], scale);
      term.c.insert(term.c.begin(), j, 0);
      out.yc[j] = poly_add(tw, out.yc[j], term);
    }
  }
  return out;
}

struct RootSearch {
  const Tower* tw;
  long long deg_bound;
  std::vector<FElem> prefix;
  std::vector<Poly> found;
  long long nodes = 0;

  void run(const Bivariate& q, long long depth) {
    if (++nodes > 2'000'000)
      throw std::logic_error("root search exceeded node budget");
    Bivariate cur = q;
    strip_x(cur);
    // roots of Q(0, y)
    Poly ry;
    ry.c.resize(cur.yc.size());
    for (std::size_t b = 0; b < cur.yc.size(); ++b)
      ry.c[b] = cur.yc[b].coeff(0);
    ry.trim();
    if (ry.is_zero()) return;  // cannot happen after stripping a nonzero Q
    for (FElem gamma = 0; gamma < tw->field_size(); ++gamma) {
      if (poly_eval(*tw, ry, gamma) != 0) continue;
      prefix[std::size_t(depth)] = gamma;
      if (depth == deg_bound) {
        found.push_back(Poly{std::vector<FElem>(prefix)});
      } else {
        run(shift_compose(*tw, cur, gamma), depth + 1);
      }
    }
    prefix[std::size_t(depth)] = 0;
  }
};

}  // namespace

std::vector<Poly> y_roots(const Tower& tw, const Bivariate& q,
                          long long deg_bound) {
  if (q.is_zero()) throw std::invalid_argument("zero interpolation polynomial");
  RootSearch rs{&tw, deg_bound, std::vector<FElem>(deg_bound + 1, 0), {}, 0};
  rs.run(q, 0);
  // verify by substitution and drop duplicates
  std::vector<Poly> out;
  for (Poly& g : rs.found) {
    g.trim();
    if (!compose_poly(tw, q, g).is_zero()) continue;
    if (std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const Poly& a, const Poly& b) { return a.c < b.c; });
  return out;
}

std::vector<TraceWord> modified_gs_decode(const TraceCode& tc,
                                          const TraceWord& received,
                                          long long mu) {
  const RepairScheme& sc = tc.scheme;
  const Tower& tw = sc.tower();
  if (received.size() != std::size_t(sc.n()))
    throw std::invalid_argument("trace word length mismatch");
  if (received.has_erasures())
    throw std::invalid_argument("erasures not supported by list decoding");
  const long long n = sc.n();
  const long long delta = lift_degree_bound(tw.trace_degree(), sc.k());
  if (delta < 1 || delta > n)
    throw std::invalid_argument("lift degree out of range for list decoding");
  BoundsReport br = bounds_report(tw.p(), tw.m(), tw.t(), sc.k());
  if (!br.d_star)
    throw std::invalid_argument("no distance bound available for this k");
  GsParams g = gs_params(n, delta, mu, *br.d_star);
  if (g.e_capped < 0) return {};

  std::vector<std::pair<FElem, FElem>> pts(received.size());
  Codeword lifted = lift_to_grs(sc, received);
  for (std::size_t j = 0; j < pts.size(); ++j)
    pts[j] = {sc.points()[j], lifted[j]};

  Bivariate q = interpolate(tw, pts, g.mu, g.wdeg, g.deg_bound);
  std::vector<Poly> cands = y_roots(tw, q, g.deg_bound);

  std::vector<std::pair<long long, TraceWord>> kept;
  for (const Poly& f : cands) {
    TraceWord w;
    w.sym.resize(pts.size());
    bool in_b = true;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      FElem v = tw.mul(poly_eval(tw, f, sc.points()[j]),
                       tw.inv(tw.pow(sc.points()[j], tw.trace_degree())));
      if (!tw.in_subfield(v)) {
        in_b = false;
        break;
      }
      w.sym[j] = tw.project(v);
    }
    if (!in_b || !membership(tc, w)) continue;
    long long dist = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      dist += (w.sym[j] != received.sym[j]);
    if (dist > g.e_capped) continue;
    kept.push_back({dist, std::move(w)});
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) {
              return a.first != b.first ? a.first < b.first
                                        : a.second.sym < b.second.sym;
            });
  std::vector<TraceWord> out;
  out.reserve(kept.size());
  for (auto& [d, w] : kept) out.push_back(std::move(w));
  return out;
}

}  // namespace rstrace

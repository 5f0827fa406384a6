#include "rstrace/poly.hpp"

#include <stdexcept>

namespace rstrace {

FElem poly_eval(const Tower& tw, const Poly& f, FElem x) {
  FElem acc = 0;
  for (std::size_t i = f.c.size(); i-- > 0;)
    acc = tw.add(tw.mul(acc, x), f.c[i]);
  return acc;
}

Poly poly_add(const Tower& tw, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = tw.add(a.coeff(i), b.coeff(i));
  r.trim();
  return r;
}

Poly poly_sub(const Tower& tw, const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i)
    r.c[i] = tw.sub(a.coeff(i), b.coeff(i));
  r.trim();
  return r;
}

Poly poly_mul(const Tower& tw, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = tw.add(r.c[i + j], tw.mul(a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

Poly poly_scale(const Tower& tw, const Poly& a, FElem s) {
  if (s == 0) return {};
  Poly r = a;
  for (auto& x : r.c) x = tw.mul(x, s);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Tower& tw, const Poly& a,
                                  const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a, quot;
  if (a.deg() >= b.deg()) quot.c.assign(a.deg() - b.deg() + 1, 0);
  FElem lead_inv = tw.inv(b.c.back());
  while (rem.deg() >= b.deg()) {
    std::size_t shift = rem.c.size() - b.c.size();
    FElem q = tw.mul(rem.c.back(), lead_inv);
    quot.c[shift] = q;
    for (std::size_t i = 0; i < b.c.size(); ++i)
      rem.c[shift + i] = tw.sub(rem.c[shift + i], tw.mul(q, b.c[i]));
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Poly lagrange_interpolate(const Tower& tw,
                          std::span<const std::pair<FElem, FElem>> points) {
  Poly acc;
  for (std::size_t i = 0; i < points.size(); ++i) {
    // basis polynomial through point i
    Poly num{{1}};
    FElem den = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      num = poly_mul(tw, num,
                     Poly{{tw.neg(points[j].first), 1}});
      den = tw.mul(den, tw.sub(points[i].first, points[j].first));
    }
    acc = poly_add(tw, acc,
                   poly_scale(tw, num, tw.mul(points[i].second, tw.inv(den))));
  }
  return acc;
}

}  // namespace rstrace

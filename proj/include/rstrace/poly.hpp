#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rstrace/field.hpp"

namespace rstrace {

// Polynomial over F, low coefficient first.  Canonical form carries no
// trailing zeros; the zero polynomial is the empty vector (degree -1).
struct Poly {
  std::vector<FElem> c;

  Poly() = default;
  explicit Poly(std::vector<FElem> coeffs) : c(std::move(coeffs)) { trim(); }

  int deg() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  FElem coeff(std::size_t i) const { return i < c.size() ? c[i] : 0; }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const Poly&) const = default;
};

FElem poly_eval(const Tower& tw, const Poly& f, FElem x);
Poly poly_add(const Tower& tw, const Poly& a, const Poly& b);
Poly poly_sub(const Tower& tw, const Poly& a, const Poly& b);
Poly poly_mul(const Tower& tw, const Poly& a, const Poly& b);
Poly poly_scale(const Tower& tw, const Poly& a, FElem s);
// Quotient and remainder by a nonzero divisor.
std::pair<Poly, Poly> poly_divmod(const Tower& tw, const Poly& a,
                                  const Poly& b);
// Unique polynomial of degree < |points| through the given (x, y) pairs;
// the x values must be distinct.
Poly lagrange_interpolate(const Tower& tw,
                          std::span<const std::pair<FElem, FElem>> points);

}  // namespace rstrace

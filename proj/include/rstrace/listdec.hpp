#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rstrace/trace_repair.hpp"

namespace rstrace {

// Number of monomials x^a y^b with a + deg_bound*b <= wdeg, evaluated
// exactly from the closed form (always an integer).
long long monomial_count(long long wdeg, long long deg_bound);

// Koetter-Vardy parameterization of Guruswami-Sudan list decoding:
// wdeg is the smallest weighted degree whose monomial count exceeds
// n*mu*(mu+1)/2, the raw radius is n - floor(wdeg/mu), and the effective
// radius is capped at the unique-decoding radius of the trace code.
struct GsParams {
  long long n = 0;
  long long deg_bound = 0;  // max degree of candidate polynomials
  long long mu = 0;         // interpolation multiplicity
  long long wdeg = 0;
  long long e_raw = 0;
  long long e_capped = 0;
};

GsParams gs_params(long long n, long long deg_bound, long long mu,
                   long long d_star);
// Maximizes e_capped over mu in [1, mu_max]; ties go to the smallest mu.
GsParams best_gs_params(long long n, long long deg_bound, long long d_star,
                        long long mu_max);

// Bivariate polynomial over F; yc[b] is the coefficient of y^b.
struct Bivariate {
  std::vector<Poly> yc;

  bool is_zero() const {
    for (const auto& p : yc)
      if (!p.is_zero()) return false;
    return true;
  }
};

// Nonzero polynomial of (1, deg_bound)-weighted degree at most wdeg that
// vanishes to order mu at every point (all Hasse derivatives of order
// below mu).  Requires monomial_count(wdeg, deg_bound) > n*mu*(mu+1)/2.
Bivariate interpolate(const Tower& tw,
                      std::span<const std::pair<FElem, FElem>> points,
                      long long mu, long long wdeg, long long deg_bound);

// All polynomials g of degree at most deg_bound with Q(x, g(x)) = 0,
// by recursive shift-and-divide root extraction; every returned candidate
// is verified by direct substitution.
std::vector<Poly> y_roots(const Tower& tw, const Bivariate& q,
                          long long deg_bound);

FElem bivariate_eval(const Tower& tw, const Bivariate& q, FElem x, FElem y);

// List decoder for the trace code: lift the received word, run
// Guruswami-Sudan at the lift degree, then keep the candidates that land
// back inside the trace code within the capped radius.  Output is sorted
// by distance to the received word, then lexicographically.
std::vector<TraceWord> modified_gs_decode(const TraceCode& tc,
                                          const TraceWord& received,
                                          long long mu);

}  // namespace rstrace

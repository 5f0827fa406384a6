#pragma once

#include <optional>
#include <vector>

#include "rstrace/poly.hpp"

namespace rstrace {

// Generalized Reed-Solomon code: evaluations of polynomials of degree
// < dim at the (distinct) points, scaled per position by a nonzero
// multiplier.  Plain RS is the all-ones multiplier vector.
struct GrsCode {
  std::vector<FElem> points;
  int dim = 0;
  std::vector<FElem> mult;
};

using Codeword = std::vector<FElem>;

GrsCode make_rs(std::vector<FElem> points, int dim);
GrsCode make_grs(std::vector<FElem> points, int dim, std::vector<FElem> mult);

Codeword encode(const Tower& tw, const GrsCode& code, const Poly& f);

// Multipliers of the dual of a plain RS code on the given points:
// 1 / prod_{i != j} (a_j - a_i).
std::vector<FElem> dual_multipliers(const Tower& tw,
                                    const std::vector<FElem>& points);

GrsCode grs_dual(const Tower& tw, const GrsCode& code);

// Bounded-distance decoding via the Berlekamp-Welch linear system.
// Positions holding kNoSym are treated as erasures and dropped before
// decoding.  Returns the unique message polynomial whose encoding differs
// from the received word in at most e_max unerased positions, or nullopt
// when no such polynomial exists.  Requires 2*e_max <= n' - dim where n'
// counts unerased positions.
std::optional<Poly> bw_decode(const Tower& tw, const GrsCode& code,
                              const Codeword& received, int e_max);

}  // namespace rstrace

#pragma once

#include <optional>
#include <vector>

#include "rstrace/linalg.hpp"
#include "rstrace/rs.hpp"

namespace rstrace {

// A word of downloaded traces, aligned with the evaluation points.
// kNoSub marks an erased position.
struct TraceWord {
  std::vector<BElem> sym;

  bool operator==(const TraceWord&) const = default;
  std::size_t size() const { return sym.size(); }
  bool has_erasures() const {
    for (BElem s : sym)
      if (s == kNoSub) return true;
    return false;
  }
};

// Single-erasure repair of the full-length RS code over F: node 0 holds
// f(0), every other node alpha holds f(alpha) and serves the sub-symbol
// Tr(f(alpha)/alpha).  The evaluation set A is all of F* in canonical
// index order, and the fixed basis is the power basis of the F modulus
// root together with its trace-dual.  Keeps a pointer to the tower, which
// must outlive the scheme.
class RepairScheme {
public:
  RepairScheme(const Tower& tw, int k);

  const Tower& tower() const { return *tw_; }
  int k() const { return k_; }
  int n() const { return int(points_.size()); }  // |A| = |F| - 1
  const std::vector<FElem>& points() const { return points_; }
  const BasisPair& basis_pair() const { return bp_; }
  // Repair needs |A| >= p^(mt-m) - 1 + k so that the check polynomials
  // fit inside the dual code.
  bool feasible() const { return feasible_; }

  FElem inv_point(std::size_t j) const { return inv_points_[j]; }
  // Tr(u_i * alpha_j) with 0-based basis index i.
  BElem trace_u_alpha(std::size_t i, std::size_t j) const {
    return trace_u_[i][j];
  }

private:
  const Tower* tw_;
  int k_;
  std::vector<FElem> points_, inv_points_;
  BasisPair bp_;
  std::vector<std::vector<BElem>> trace_u_;
  bool feasible_;
};

// Degree of the polynomial interpolating a scaled trace word:
// (k-1)*trace_deg when k >= 2, trace_deg - 1 when k = 1.
long long lift_degree_bound(std::uint64_t trace_deg, long long k);

// The check polynomial Tr(u_i x)/x (1-based basis index); a polynomial of
// degree p^(mt-m) - 1 whose constant term is u_i.
Poly check_poly(const RepairScheme& sc, int i);

// The trace word of a message polynomial (degree < k).
TraceWord traces_of(const RepairScheme& sc, const Poly& f);

// Reconstructs f(0) from an error-free trace word.
FElem repair_f0(const RepairScheme& sc, const TraceWord& word);

// The B-linear code of all trace words, with row-reduced generator and
// parity-check matrices over B.
struct TraceCode {
  RepairScheme scheme;
  Mat<BElem> gen;   // kappa x n, reduced row echelon form
  Mat<BElem> pc;    // (n - kappa) x n
  int kappa = 0;    // dimension over B
};

TraceCode build_trace_code(const RepairScheme& sc);

// sum_alpha alpha^ell * word_alpha in F; zero on every codeword for
// 2 <= ell <= floor((|F| - k) / p^(mt-m)).
FElem lifted_parity_residual(const RepairScheme& sc, const TraceWord& word,
                             long long ell);

// Position alpha carries alpha^(p^(mt-m)) * word_alpha; codewords lift to
// evaluation words of polynomials of degree at most lift_degree_bound.
Codeword lift_to_grs(const RepairScheme& sc, const TraceWord& word);

bool membership(const TraceCode& tc, const TraceWord& word);

enum class DecoderKind {
  BwDegree,    // bounded-distance decoding of the scaled word at dim Delta+1
  BwLifted,    // bounded-distance decoding at dim |F| - floor((|F|-k)/p^(mt-m))
  ModifiedGs,  // list decoding of the scaled word plus membership filtering
};

// Decodes a corrupted trace word (erasures allowed for the BW strategies)
// and reconstructs f(0).  Returns nullopt when decoding fails or the
// decoded word is not a member of the trace code.
std::optional<FElem> repair_with_errors(const TraceCode& tc,
                                        const TraceWord& received,
                                        DecoderKind kind, int gs_mu = 1);

}  // namespace rstrace

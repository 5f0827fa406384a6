#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rstrace {

// Canonical integer indices of field elements.  An element is identified with
// the mixed-radix value of its coefficient vector, low coefficient first:
// base p for elements of B (sub-symbols), base |B| for elements of F
// (symbols).  Index 0 is zero, index 1 is one, and for t > 1 the index |B|
// is the residue class of x, the root of the F modulus.
using BElem = std::uint16_t;
using FElem = std::uint32_t;

// Erasure marks used in received words.
inline constexpr BElem kNoSub = 0xFFFF;
inline constexpr FElem kNoSym = 0xFFFFFFFFu;

// The tower GF(p) < B = GF(p^m) < F = GF(p^(m*t)).
//
// The moduli are chosen deterministically: among the monic irreducible
// polynomials of the right degree, the one whose coefficient vector, read
// low-to-high as a base-p (resp. base-|B|) integer, is smallest.  Two towers
// built from the same (p, m, t) are therefore identical, and element indices
// are portable across runs and machines.
//
// Multiplication uses log/antilog tables for fields of at most 2^16
// elements and schoolbook polynomial reduction above; B always fits the
// table path under the size cap.  All state is immutable after
// construction, so a Tower can be shared freely across threads.
class Tower {
public:
  static constexpr std::uint64_t kDefaultSizeCap = std::uint64_t(1) << 24;

  Tower(unsigned p, unsigned m, unsigned t,
        std::uint64_t size_cap = kDefaultSizeCap);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  unsigned t() const { return t_; }
  std::uint32_t subfield_size() const { return qb_; }  // |B| = p^m
  std::uint32_t field_size() const { return qf_; }     // |F| = p^(m*t)
  // p^(m*t - m) = |F|/|B|: degree of the trace as a polynomial, and the
  // exponent used when scaling trace words into evaluation words.
  std::uint32_t trace_degree() const { return pw_; }
  std::string name() const;  // "p,m,t"

  const std::vector<unsigned>& mod_b() const { return mod_b_; }
  const std::vector<BElem>& mod_f() const { return mod_f_; }

  // --- arithmetic in B ---
  BElem b_add(BElem a, BElem b) const;
  BElem b_sub(BElem a, BElem b) const;
  BElem b_neg(BElem a) const;
  BElem b_mul(BElem a, BElem b) const;
  BElem b_inv(BElem a) const;  // throws std::domain_error on zero
  BElem b_pow(BElem a, std::uint64_t e) const;
  // Flat |B|x|B| addition table (row-major), for hot loops; null when |B|
  // is too large to tabulate.
  const BElem* b_add_table() const {
    return b_add_.empty() ? nullptr : b_add_.data();
  }

  // --- arithmetic in F ---
  FElem add(FElem a, FElem b) const;
  FElem sub(FElem a, FElem b) const;
  FElem neg(FElem a) const;
  FElem mul(FElem a, FElem b) const;
  FElem inv(FElem a) const;  // throws std::domain_error on zero
  FElem pow(FElem a, std::uint64_t e) const;

  // --- the subfield inside F ---
  // B embeds as the constants of F, so the embedded copy of B is exactly
  // the index range [0, |B|).
  FElem embed(BElem a) const;
  bool in_subfield(FElem a) const { return a < qb_; }
  BElem project(FElem a) const;  // throws std::domain_error outside B
  FElem frobenius(FElem a) const { return pow(a, qb_); }

  BElem trace(FElem a) const;        // Tr: F -> B, sum of x^(|B|^i)
  unsigned abs_trace(FElem a) const; // F -> GF(p)
  BElem b_abs_trace(BElem a) const;  // B -> GF(p)

  // A fixed primitive element of F (generator of F*).
  FElem generator() const;
  // The residue class of x, the root of mod_f (basis element for t > 1).
  FElem modulus_root() const { return t_ > 1 ? FElem(qb_) : FElem(0); }

  // --- coefficient access ---
  std::vector<BElem> f_coeffs(FElem a) const;           // length t
  FElem f_from_coeffs(const std::vector<BElem>& c) const;
  std::vector<unsigned> b_coeffs(BElem a) const;        // length m
  BElem b_from_coeffs(const std::vector<unsigned>& c) const;

private:
  unsigned p_ = 0, m_ = 0, t_ = 0;
  std::uint32_t qb_ = 0, qf_ = 0, pw_ = 0;
  std::vector<unsigned> mod_b_;
  std::vector<BElem> mod_f_;

  // B tables (always built).
  std::vector<BElem> b_add_;            // qb*qb
  std::vector<BElem> b_neg_tab_;        // qb
  std::vector<std::uint32_t> b_log_;    // qb (b_log_[0] unused)
  std::vector<BElem> b_exp_;            // 2*(qb-1)
  std::vector<BElem> b_abs_trace_tab_;  // qb

  // F tables (built when qf <= 2^16).
  bool f_tables_ = false;
  std::vector<std::uint32_t> f_log_;
  std::vector<FElem> f_exp_;
  std::vector<BElem> trace_tab_;
  FElem gen_ = 0;

  std::vector<FElem> qb_pow_;  // qb^0 .. qb^t

  FElem mul_schoolbook(FElem a, FElem b) const;
  BElem trace_direct(FElem a) const;
};

// A B-basis of F together with its trace-dual: Tr(basis[i] * dual[j]) is
// one exactly when i == j and zero otherwise.
struct BasisPair {
  std::vector<FElem> basis;
  std::vector<FElem> dual;
};

// {1, x, ..., x^(t-1)} for the root x of mod_f.
std::vector<FElem> power_basis(const Tower& tw);

// Computes the trace-dual of a B-linearly independent basis (throws
// std::invalid_argument on dependent input).  Reconstruction then holds for
// every y in F: y = sum_i Tr(basis[i] * y) * dual[i].
BasisPair dual_basis(const Tower& tw, const std::vector<FElem>& basis);

}  // namespace rstrace

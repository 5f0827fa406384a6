#include "rstrace/trace_repair.hpp"

#include <stdexcept>

#include "rstrace/listdec.hpp"

namespace rstrace {

RepairScheme::RepairScheme(const Tower& tw, int k) : tw_(&tw), k_(k) {
  if (k < 1 || std::uint64_t(k) >= tw.field_size())
    throw std::invalid_argument("k out of range");
  const std::uint32_t q = tw.field_size();
  points_.resize(q - 1);
  inv_points_.resize(q - 1);
  for (std::uint32_t a = 1; a < q; ++a) {
    points_[a - 1] = a;
    inv_points_[a - 1] = tw.inv(a);
  }
  bp_ = dual_basis(tw, power_basis(tw));
  feasible_ = std::uint64_t(q) - 1 >=
              std::uint64_t(tw.trace_degree()) - 1 + std::uint64_t(k);
  trace_u_.assign(tw.t(), std::vector<BElem>(points_.size()));
  for (unsigned i = 0; i < tw.t(); ++i)
    for (std::size_t j = 0; j < points_.size(); ++j)
      trace_u_[i][j] = tw.trace(tw.mul(bp_.basis[i], points_[j]));
}

long long lift_degree_bound(std::uint64_t trace_deg, long long k) {
  return k >= 2 ? (k - 1) * (long long)trace_deg : (long long)trace_deg - 1;
}

Poly check_poly(const RepairScheme& sc, int i) {
  const Tower& tw = sc.tower();
  if (i < 1 || unsigned(i) > tw.t())
    throw std::invalid_argument("basis index out of range");
  // Tr(u_i x)/x = sum_j u_i^(|B|^j) x^(|B|^j - 1), exact because Tr(u_i x)
  // has no constant term.
  Poly p;
  p.c.assign(tw.trace_degree(), 0);
  FElem u = sc.basis_pair().basis[i - 1];
  std::uint64_t e = 1;
  for (unsigned j = 0; j < tw.t(); ++j) {
    p.c[e - 1] = tw.add(p.c[e - 1], tw.pow(u, e));
    e *= tw.subfield_size();
  }
  p.trim();
  return p;
}

TraceWord traces_of(const RepairScheme& sc, const Poly& f) {
  const Tower& tw = sc.tower();
  if (f.deg() >= sc.k()) throw std::invalid_argument("message degree too high");
  TraceWord w;
  w.sym.resize(sc.points().size());
  for (std::size_t j = 0; j < sc.points().size(); ++j)
    w.sym[j] = tw.trace(tw.mul(poly_eval(tw, f, sc.points()[j]),
                               sc.inv_point(j)));
  return w;
}

FElem repair_f0(const RepairScheme& sc, const TraceWord& word) {
  const Tower& tw = sc.tower();
  if (!sc.feasible())
    throw std::invalid_argument("scheme infeasible: k too large for repair");
  if (word.size() != std::size_t(sc.n()))
    throw std::invalid_argument("trace word length mismatch");
  if (word.has_erasures())
    throw std::invalid_argument("trace word has erasures");
  // From the parity checks of the full-length code,
  //   Tr(u_i f(0)) = -sum_alpha Tr(u_i alpha) Tr(f(alpha)/alpha),
  // and f(0) is reassembled on the trace-dual basis.
  FElem f0 = 0;
  for (unsigned i = 0; i < tw.t(); ++i) {
    BElem s = 0;
    for (std::size_t j = 0; j < word.size(); ++j)
      s = tw.b_add(s, tw.b_mul(sc.trace_u_alpha(i, j), word.sym[j]));
    f0 = tw.add(f0, tw.mul(tw.embed(tw.b_neg(s)), sc.basis_pair().dual[i]));
  }
  return f0;
}

TraceCode build_trace_code(const RepairScheme& sc) {
  const Tower& tw = sc.tower();
  const std::size_t n = sc.points().size();
  const unsigned t = tw.t();
  // Spanning words Tr(u_j alpha^(i-1)) for message monomials u_j x^i; the
  // row space over B is the whole trace code.
  Mat<BElem> span(std::size_t(t) * sc.k(), n);
  for (int i = 0; i < sc.k(); ++i) {
    for (unsigned j = 0; j < t; ++j) {
      BElem* row = span.row(std::size_t(i) * t + j);
      FElem u = sc.basis_pair().basis[j];
      for (std::size_t c = 0; c < n; ++c) {
        FElem a = sc.points()[c];
        FElem val = tw.mul(u, i == 0 ? sc.inv_point(c)
                                     : tw.pow(a, std::uint64_t(i) - 1));
        row[c] = tw.trace(val);
      }
    }
  }
  BOps fd{&tw};
  auto pivots = rref_in_place(fd, span);
  TraceCode tc{sc, Mat<BElem>(pivots.size(), n), Mat<BElem>(), 0};
  tc.kappa = int(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) tc.gen.at(r, c) = span.at(r, c);
  tc.pc = nullspace(fd, tc.gen);
  return tc;
}

FElem lifted_parity_residual(const RepairScheme& sc, const TraceWord& word,
                             long long ell) {
  const Tower& tw = sc.tower();
  long long lmax =
      (long long)((tw.field_size() - std::uint64_t(sc.k())) / tw.trace_degree());
  if (ell < 2 || ell > lmax)
    throw std::invalid_argument("parity exponent out of range");
  if (word.has_erasures())
    throw std::invalid_argument("trace word has erasures");
  FElem acc = 0;
  for (std::size_t j = 0; j < word.size(); ++j)
    acc = tw.add(acc, tw.mul(tw.pow(sc.points()[j], std::uint64_t(ell)),
                             tw.embed(word.sym[j])));
  return acc;
}

Codeword lift_to_grs(const RepairScheme& sc, const TraceWord& word) {
  const Tower& tw = sc.tower();
  Codeword out(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (word.sym[j] == kNoSub) {
      out[j] = kNoSym;
      continue;
    }
    out[j] = tw.mul(tw.pow(sc.points()[j], tw.trace_degree()),
                    tw.embed(word.sym[j]));
  }
  return out;
}

bool membership(const TraceCode& tc, const TraceWord& word) {
  const Tower& tw = tc.scheme.tower();
  if (word.size() != tc.gen.cols)
    throw std::invalid_argument("trace word length mismatch");
  if (word.has_erasures())
    throw std::invalid_argument("trace word has erasures");
  for (std::size_t r = 0; r < tc.pc.rows; ++r) {
    BElem acc = 0;
    const BElem* row = tc.pc.row(r);
    for (std::size_t c = 0; c < tc.pc.cols; ++c)
      acc = tw.b_add(acc, tw.b_mul(row[c], word.sym[c]));
    if (acc != 0) return false;
  }
  return true;
}

namespace {

// Scales a decoded GRS codeword back into a trace word; fails when a
// symbol falls outside the subfield.
std::optional<TraceWord> word_from_codeword(const RepairScheme& sc,
                                            const Codeword& cw,
                                            bool unscale_lift) {
  const Tower& tw = sc.tower();
  TraceWord w;
  w.sym.resize(cw.size());
  for (std::size_t j = 0; j < cw.size(); ++j) {
    FElem v = cw[j];
    if (unscale_lift)
      v = tw.mul(v, tw.inv(tw.pow(sc.points()[j], tw.trace_degree())));
    if (!tw.in_subfield(v)) return std::nullopt;
    w.sym[j] = tw.project(v);
  }
  return w;
}

std::optional<FElem> finish(const TraceCode& tc,
                            const std::optional<TraceWord>& w) {
  if (!w || !membership(tc, *w)) return std::nullopt;
  return repair_f0(tc.scheme, *w);
}

std::optional<FElem> repair_bw_degree(const TraceCode& tc,
                                      const TraceWord& received) {
  const RepairScheme& sc = tc.scheme;
  const Tower& tw = sc.tower();
  long long delta = lift_degree_bound(tw.trace_degree(), sc.k());
  int erased = 0;
  for (BElem s : received.sym) erased += (s == kNoSub);
  int n_avail = sc.n() - erased;
  if (delta + 1 > n_avail) return std::nullopt;
  int e_max = (n_avail - int(delta) - 1) / 2;
  GrsCode code = make_rs(sc.points(), int(delta) + 1);
  auto f = bw_decode(tw, code, lift_to_grs(sc, received), e_max);
  if (!f) return std::nullopt;
  return finish(tc, word_from_codeword(sc, encode(tw, code, *f), true));
}

std::optional<FElem> repair_bw_lifted(const TraceCode& tc,
                                      const TraceWord& received) {
  const RepairScheme& sc = tc.scheme;
  const Tower& tw = sc.tower();
  const std::uint32_t q = tw.field_size();
  long long span = (long long)((q - std::uint64_t(sc.k())) / tw.trace_degree());
  if (span < 1) throw std::invalid_argument("k too large for lifted decoding");
  int dim = int(q - span);
  // The embedded trace words sit in a GRS code with multipliers -1/alpha,
  // dual to the power parity checks at exponents 2..span.
  std::vector<FElem> mult(sc.points().size());
  for (std::size_t j = 0; j < mult.size(); ++j)
    mult[j] = tw.neg(sc.inv_point(j));
  int erased = 0;
  Codeword y(received.size());
  for (std::size_t j = 0; j < received.size(); ++j) {
    if (received.sym[j] == kNoSub) {
      y[j] = kNoSym;
      ++erased;
    } else {
      y[j] = tw.embed(received.sym[j]);
    }
  }
  int n_avail = sc.n() - erased;
  if (dim > n_avail) return std::nullopt;
  int e_max = (n_avail - dim) / 2;
  GrsCode code = make_grs(sc.points(), dim, std::move(mult));
  auto f = bw_decode(tw, code, y, e_max);
  if (!f) return std::nullopt;
  return finish(tc, word_from_codeword(sc, encode(tw, code, *f), false));
}

}  // namespace

std::optional<FElem> repair_with_errors(const TraceCode& tc,
                                        const TraceWord& received,
                                        DecoderKind kind, int gs_mu) {
  if (received.size() != std::size_t(tc.scheme.n()))
    throw std::invalid_argument("trace word length mismatch");
  switch (kind) {
    case DecoderKind::BwDegree:
      return repair_bw_degree(tc, received);
    case DecoderKind::BwLifted:
      return repair_bw_lifted(tc, received);
    case DecoderKind::ModifiedGs: {
      auto list = modified_gs_decode(tc, received, gs_mu);
      if (list.empty()) return std::nullopt;
      return repair_f0(tc.scheme, list.front());
    }
  }
  throw std::logic_error("unknown decoder kind");
}

}  // namespace rstrace

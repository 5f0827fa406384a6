#include <climits>
#include <stdexcept>
#include <vector>

#include "rstrace/bounds.hpp"

#ifdef RSTRACE_HAVE_OPENMP
#include <omp.h>
#endif

namespace rstrace {
namespace {

// Enumeration state shared by the serial and parallel kernels.  Codewords
// are visited in mixed-radix counting order of their B-coefficient
// vectors; each step changes an amortized-constant number of digits, and
// every digit change adds one prescaled generator row to the running
// word.
struct WeightKernel {
  const Tower* tw;
  unsigned qb;
  std::size_t n;
  int kappa;
  const BElem* addtab;                // qb x qb, may be null
  std::vector<BElem> scaled;          // [row][scalar][col]
  std::vector<BElem> step_scalar;     // digit v -> elt(v+1) - elt(v)
  BElem wrap_scalar;                  // elt(0) - elt(qb-1)

  WeightKernel(const Tower& t, const Mat<BElem>& gen)
      : tw(&t),
        qb(t.subfield_size()),
        n(gen.cols),
        kappa(int(gen.rows)),
        addtab(t.b_add_table()) {
    scaled.assign(std::size_t(kappa) * qb * n, 0);
    for (int r = 0; r < kappa; ++r)
      for (unsigned s = 0; s < qb; ++s) {
        BElem* dst = row(r, BElem(s));
        for (std::size_t j = 0; j < n; ++j)
          dst[j] = t.b_mul(BElem(s), gen.at(std::size_t(r), j));
      }
    step_scalar.resize(qb);
    for (unsigned v = 0; v + 1 < qb; ++v)
      step_scalar[v] = t.b_sub(BElem(v + 1), BElem(v));
    wrap_scalar = t.b_neg(BElem(qb - 1));
  }

  BElem* row(int r, BElem s) {
    return scaled.data() + (std::size_t(r) * qb + s) * n;
  }
  const BElem* row(int r, BElem s) const {
    return scaled.data() + (std::size_t(r) * qb + s) * n;
  }

  void add_row(BElem* w, const BElem* src) const {
    if (addtab) {
      for (std::size_t j = 0; j < n; ++j)
        w[j] = addtab[std::size_t(w[j]) * qb + src[j]];
    } else {
      for (std::size_t j = 0; j < n; ++j) w[j] = tw->b_add(w[j], src[j]);
    }
  }

  long long add_row_count(BElem* w, const BElem* src) const {
    long long wt = 0;
    if (addtab) {
      for (std::size_t j = 0; j < n; ++j) {
        w[j] = addtab[std::size_t(w[j]) * qb + src[j]];
        wt += (w[j] != 0);
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        w[j] = tw->b_add(w[j], src[j]);
        wt += (w[j] != 0);
      }
    }
    return wt;
  }

  // Minimum weight over coefficient indices [start, end), start >= 1.
  long long run(unsigned long long start, unsigned long long end) const {
    std::vector<unsigned> d(kappa, 0);
    unsigned long long v = start;
    for (int i = 0; i < kappa; ++i) {
      d[i] = unsigned(v % qb);
      v /= qb;
    }
    std::vector<BElem> w(n, 0);
    for (int r = 0; r < kappa; ++r)
      if (d[r]) add_row(w.data(), row(r, BElem(d[r])));
    long long best = 0;
    for (std::size_t j = 0; j < n; ++j) best += (w[j] != 0);
    for (unsigned long long idx = start + 1; idx < end; ++idx) {
      int pos = 0;
      while (d[pos] == qb - 1) {
        add_row(w.data(), row(pos, wrap_scalar));
        d[pos] = 0;
        ++pos;
      }
      const BElem* delta = row(pos, step_scalar[d[pos]]);
      ++d[pos];
      long long wt = add_row_count(w.data(), delta);
      if (wt < best) best = wt;
    }
    return best;
  }
};

unsigned long long word_count(const Tower& tw, const Mat<BElem>& gen) {
  if (gen.rows < 1) throw std::invalid_argument("empty generator matrix");
  unsigned long long total = 1;
  for (std::size_t i = 0; i < gen.rows; ++i) {
    if (total > (1ULL << 62) / tw.subfield_size())
      throw std::invalid_argument("coefficient space too large to enumerate");
    total *= tw.subfield_size();
  }
  return total;
}

}  // namespace

long long min_weight_serial(const Tower& tw, const Mat<BElem>& gen) {
  unsigned long long total = word_count(tw, gen);
  WeightKernel k(tw, gen);
  return k.run(1, total);
}

long long min_weight_parallel(const Tower& tw, const Mat<BElem>& gen) {
#ifdef RSTRACE_HAVE_OPENMP
  unsigned long long total = word_count(tw, gen);
  WeightKernel k(tw, gen);
  const unsigned long long words = total - 1;
  int nchunks = omp_get_max_threads() * 8;
  if (nchunks < 1) nchunks = 1;
  if ((unsigned long long)nchunks > words) nchunks = int(words);
  long long best = LLONG_MAX;
#pragma omp parallel for reduction(min : best) schedule(dynamic)
  for (int c = 0; c < nchunks; ++c) {
    unsigned long long lo =
        1 + (unsigned long long)((__int128)words * c / nchunks);
    unsigned long long hi =
        1 + (unsigned long long)((__int128)words * (c + 1) / nchunks);
    if (lo < hi) {
      long long w = k.run(lo, hi);
      if (w < best) best = w;
    }
  }
  return best;
#else
  return min_weight_serial(tw, gen);
#endif
}

}  // namespace rstrace

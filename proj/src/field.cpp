#include "rstrace/field.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rstrace {
namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t ipow64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// --- polynomials over GF(p), coefficients 0..p-1, low first ---

using PPoly = std::vector<unsigned>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  ptrim(c);
  return c;
}

// Remainder of a by monic d.
PPoly pmod(PPoly a, const PPoly& d, unsigned p) {
  ptrim(a);
  assert(!d.empty() && d.back() == 1);
  while (a.size() >= d.size()) {
    unsigned lead = a.back();
    std::size_t shift = a.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) {
      unsigned sub = (lead * d[i]) % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    ptrim(a);
  }
  return a;
}

bool divides_gfp(const PPoly& d, const PPoly& a, unsigned p) {
  return pmod(a, d, p).empty();
}

// Monic polynomial of degree deg whose low coefficients are the base-p
// digits of idx.
PPoly monic_from_index(std::uint64_t idx, unsigned deg, unsigned p) {
  PPoly c(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    c[i] = unsigned(idx % p);
    idx /= p;
  }
  c[deg] = 1;
  return c;
}

bool irreducible_gfp(const PPoly& f, unsigned p) {
  unsigned deg = unsigned(f.size()) - 1;
  for (unsigned d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = ipow64(p, d);
    for (std::uint64_t i = 0; i < count; ++i)
      if (divides_gfp(monic_from_index(i, d, p), f, p)) return false;
  }
  return true;
}

PPoly minimal_irreducible_gfp(unsigned p, unsigned deg) {
  std::uint64_t count = ipow64(p, deg);
  for (std::uint64_t i = 0; i < count; ++i) {
    PPoly f = monic_from_index(i, deg, p);
    if (irreducible_gfp(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

std::vector<unsigned> prime_factors(std::uint64_t n) {
  std::vector<unsigned> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(unsigned(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(unsigned(n));
  return fs;
}

}  // namespace

// --- bootstrap arithmetic in B (index based, polynomial reduction) ---

namespace {

struct BBoot {
  unsigned p;
  unsigned m;
  std::uint32_t qb;
  const PPoly* mod;

  std::vector<unsigned> digits(BElem a) const {
    std::vector<unsigned> d(m);
    for (unsigned i = 0; i < m; ++i) {
      d[i] = a % p;
      a = BElem(a / p);
    }
    return d;
  }
  BElem index(const std::vector<unsigned>& d) const {
    std::uint32_t v = 0;
    for (unsigned i = m; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
    return BElem(v);
  }
  BElem mul(BElem a, BElem b) const {
    PPoly prod = pmul(digits(a), digits(b), p);
    return index(pmod(prod, *mod, p));
  }
  BElem pow(BElem a, std::uint64_t e) const {
    BElem r = 1, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace

Tower::Tower(unsigned p, unsigned m, unsigned t, std::uint64_t size_cap) {
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (m < 1 || t < 1) throw std::invalid_argument("m and t must be positive");
  std::uint64_t qb64 = ipow64(p, m);
  std::uint64_t qf64 = ipow64(qb64, t);
  if (m * t > 40 || qf64 > size_cap)
    throw std::invalid_argument("field size exceeds cap");
  p_ = p;
  m_ = m;
  t_ = t;
  qb_ = std::uint32_t(qb64);
  qf_ = std::uint32_t(qf64);
  pw_ = std::uint32_t(qf64 / qb64);

  mod_b_ = minimal_irreducible_gfp(p, m);

  // B tables.  A primitive element is found by order testing with the
  // bootstrap (polynomial) multiplication, then log/antilog tables are
  // filled by repeated multiplication.
  BBoot boot{p_, m_, qb_, &mod_b_};
  BElem bgen = 1;
  if (qb_ > 2) {
    auto fs = prime_factors(qb_ - 1);
    for (BElem cand = 2; cand < qb_; ++cand) {
      bool primitive = true;
      for (unsigned f : fs)
        if (boot.pow(cand, (qb_ - 1) / f) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        bgen = cand;
        break;
      }
    }
  }
  b_exp_.assign(2 * (qb_ - 1), 0);
  b_log_.assign(qb_, 0);
  {
    BElem cur = 1;
    for (std::uint32_t i = 0; i < qb_ - 1; ++i) {
      b_exp_[i] = cur;
      b_exp_[i + (qb_ - 1)] = cur;
      b_log_[cur] = i;
      cur = boot.mul(cur, bgen);
    }
  }
  if (std::uint64_t(qb_) * qb_ <= (std::uint64_t(1) << 24)) {
    b_add_.assign(std::size_t(qb_) * qb_, 0);
    for (std::uint32_t a = 0; a < qb_; ++a)
      for (std::uint32_t b = 0; b < qb_; ++b) {
        std::uint32_t v = 0;
        std::uint32_t aa = a, bb = b;
        std::uint32_t mult = 1;
        for (unsigned i = 0; i < m_; ++i) {
          v += ((aa + bb) % p_) * mult;
          aa /= p_;
          bb /= p_;
          mult *= p_;
        }
        b_add_[std::size_t(a) * qb_ + b] = BElem(v);
      }
  }
  b_neg_tab_.assign(qb_, 0);
  for (std::uint32_t a = 0; a < qb_; ++a) {
    std::uint32_t v = 0, aa = a, mult = 1;
    for (unsigned i = 0; i < m_; ++i) {
      v += ((p_ - aa % p_) % p_) * mult;
      aa /= p_;
      mult *= p_;
    }
    b_neg_tab_[a] = BElem(v);
  }
  b_abs_trace_tab_.assign(qb_, 0);
  for (std::uint32_t a = 0; a < qb_; ++a) {
    BElem acc = BElem(a), cur = BElem(a);
    for (unsigned i = 1; i < m_; ++i) {
      cur = b_pow(cur, p_);
      acc = b_add(acc, cur);
    }
    assert(acc < p_);
    b_abs_trace_tab_[a] = acc;
  }

  // F modulus: minimal monic irreducible of degree t over B, coefficient
  // vector read low-to-high as a base-|B| integer.
  {
    auto bpoly_from_index = [&](std::uint64_t idx, unsigned deg) {
      std::vector<BElem> c(deg + 1, 0);
      for (unsigned i = 0; i < deg; ++i) {
        c[i] = BElem(idx % qb_);
        idx /= qb_;
      }
      c[deg] = 1;
      return c;
    };
    auto btrim = [](std::vector<BElem>& a) {
      while (!a.empty() && a.back() == 0) a.pop_back();
    };
    auto bmod = [&](std::vector<BElem> a, const std::vector<BElem>& d) {
      btrim(a);
      while (a.size() >= d.size()) {
        BElem lead = a.back();
        std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i)
          a[shift + i] = b_sub(a[shift + i], b_mul(lead, d[i]));
        btrim(a);
      }
      return a;
    };
    auto irreducible = [&](const std::vector<BElem>& f) {
      for (unsigned d = 1; 2 * d <= t_; ++d) {
        std::uint64_t count = ipow64(qb_, d);
        for (std::uint64_t i = 0; i < count; ++i)
          if (bmod(f, bpoly_from_index(i, d)).empty()) return false;
      }
      return true;
    };
    std::uint64_t count = ipow64(qb_, t_);
    for (std::uint64_t i = 0; i < count; ++i) {
      auto f = bpoly_from_index(i, t_);
      if (irreducible(f)) {
        mod_f_ = f;
        break;
      }
    }
    if (mod_f_.empty()) throw std::logic_error("no F modulus found");
  }

  qb_pow_.assign(t_ + 1, 1);
  for (unsigned i = 1; i <= t_; ++i) qb_pow_[i] = qb_pow_[i - 1] * qb_;

  // F tables and a fixed primitive element.
  f_tables_ = qf_ <= (std::uint32_t(1) << 16);
  {
    auto fs = prime_factors(qf_ - 1);
    gen_ = 1;
    if (qf_ > 2) {
      auto pow_sb = [&](FElem a, std::uint64_t e) {
        FElem r = 1, base = a;
        while (e) {
          if (e & 1) r = mul_schoolbook(r, base);
          base = mul_schoolbook(base, base);
          e >>= 1;
        }
        return r;
      };
      for (FElem cand = 2; cand < qf_; ++cand) {
        bool primitive = true;
        for (unsigned f : fs)
          if (pow_sb(cand, (qf_ - 1) / f) == 1) {
            primitive = false;
            break;
          }
        if (primitive) {
          gen_ = cand;
          break;
        }
      }
    }
  }
  if (f_tables_) {
    f_exp_.assign(2 * (qf_ - 1), 0);
    f_log_.assign(qf_, 0);
    FElem cur = 1;
    for (std::uint32_t i = 0; i < qf_ - 1; ++i) {
      f_exp_[i] = cur;
      f_exp_[i + (qf_ - 1)] = cur;
      f_log_[cur] = i;
      cur = mul_schoolbook(cur, gen_);
    }
    trace_tab_.assign(qf_, 0);
    for (FElem x = 0; x < qf_; ++x) trace_tab_[x] = trace_direct(x);
  }
}

std::string Tower::name() const {
  return std::to_string(p_) + "," + std::to_string(m_) + "," +
         std::to_string(t_);
}

// --- B arithmetic ---

BElem Tower::b_add(BElem a, BElem b) const {
  if (p_ == 2) return BElem(a ^ b);
  if (!b_add_.empty()) return b_add_[std::size_t(a) * qb_ + b];
  std::uint32_t v = 0, aa = a, bb = b, mult = 1;
  for (unsigned i = 0; i < m_; ++i) {
    v += ((aa + bb) % p_) * mult;
    aa /= p_;
    bb /= p_;
    mult *= p_;
  }
  return BElem(v);
}

BElem Tower::b_neg(BElem a) const { return b_neg_tab_[a]; }

BElem Tower::b_sub(BElem a, BElem b) const { return b_add(a, b_neg(b)); }

BElem Tower::b_mul(BElem a, BElem b) const {
  if (a == 0 || b == 0) return 0;
  return b_exp_[b_log_[a] + b_log_[b]];
}

BElem Tower::b_inv(BElem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return b_exp_[(qb_ - 1) - b_log_[a]];
}

BElem Tower::b_pow(BElem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? BElem(1) : BElem(0);
  std::uint64_t le = (std::uint64_t(b_log_[a]) * (e % (qb_ - 1))) % (qb_ - 1);
  return b_exp_[le];
}

BElem Tower::b_abs_trace(BElem a) const { return b_abs_trace_tab_[a]; }

// --- F arithmetic ---

FElem Tower::add(FElem a, FElem b) const {
  if (p_ == 2) return a ^ b;
  if (t_ == 1) return embed(b_add(BElem(a), BElem(b)));
  FElem v = 0;
  for (unsigned i = 0; i < t_; ++i) {
    BElem da = BElem(a % qb_), db = BElem(b % qb_);
    a /= qb_;
    b /= qb_;
    v += FElem(b_add(da, db)) * qb_pow_[i];
  }
  return v;
}

FElem Tower::neg(FElem a) const {
  if (p_ == 2) return a;
  FElem v = 0;
  for (unsigned i = 0; i < t_; ++i) {
    v += FElem(b_neg(BElem(a % qb_))) * qb_pow_[i];
    a /= qb_;
  }
  return v;
}

FElem Tower::sub(FElem a, FElem b) const { return add(a, neg(b)); }

FElem Tower::mul_schoolbook(FElem a, FElem b) const {
  if (t_ == 1) return b_mul(BElem(a), BElem(b));
  // digit vectors over B
  BElem da[64], db[64], prod[128];
  for (unsigned i = 0; i < t_; ++i) {
    da[i] = BElem(a % qb_);
    a /= qb_;
    db[i] = BElem(b % qb_);
    b /= qb_;
  }
  unsigned plen = 2 * t_ - 1;
  for (unsigned i = 0; i < plen; ++i) prod[i] = 0;
  for (unsigned i = 0; i < t_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < t_; ++j)
      prod[i + j] = b_add(prod[i + j], b_mul(da[i], db[j]));
  }
  // reduce by the monic modulus
  for (unsigned d = plen; d-- > t_;) {
    BElem lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < t_; ++i)
      prod[d - t_ + i] = b_sub(prod[d - t_ + i], b_mul(lead, mod_f_[i]));
  }
  FElem v = 0;
  for (unsigned i = t_; i-- > 0;) v = v * qb_ + prod[i];
  return v;
}

FElem Tower::mul(FElem a, FElem b) const {
  if (a == 0 || b == 0) return 0;
  if (f_tables_) return f_exp_[f_log_[a] + f_log_[b]];
  return mul_schoolbook(a, b);
}

FElem Tower::inv(FElem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (f_tables_) return f_exp_[(qf_ - 1) - f_log_[a]];
  return pow(a, qf_ - 2);
}

FElem Tower::pow(FElem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? FElem(1) : FElem(0);
  if (f_tables_) {
    std::uint64_t le =
        (std::uint64_t(f_log_[a]) * (e % (qf_ - 1))) % (qf_ - 1);
    return f_exp_[le];
  }
  FElem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul_schoolbook(r, base);
    base = mul_schoolbook(base, base);
    e >>= 1;
  }
  return r;
}

FElem Tower::embed(BElem a) const {
  assert(a < qb_);
  return FElem(a);
}

BElem Tower::project(FElem a) const {
  if (!in_subfield(a))
    throw std::domain_error("element does not lie in the subfield");
  return BElem(a);
}

BElem Tower::trace_direct(FElem a) const {
  FElem acc = a, cur = a;
  for (unsigned i = 1; i < t_; ++i) {
    cur = pow(cur, qb_);
    acc = add(acc, cur);
  }
  assert(acc < qb_);
  return BElem(acc);
}

BElem Tower::trace(FElem a) const {
  if (f_tables_) return trace_tab_[a];
  return trace_direct(a);
}

unsigned Tower::abs_trace(FElem a) const {
  FElem acc = a, cur = a;
  for (unsigned i = 1; i < m_ * t_; ++i) {
    cur = pow(cur, p_);
    acc = add(acc, cur);
  }
  assert(acc < p_);
  return unsigned(acc);
}

FElem Tower::generator() const { return gen_; }

std::vector<BElem> Tower::f_coeffs(FElem a) const {
  std::vector<BElem> c(t_);
  for (unsigned i = 0; i < t_; ++i) {
    c[i] = BElem(a % qb_);
    a /= qb_;
  }
  return c;
}

FElem Tower::f_from_coeffs(const std::vector<BElem>& c) const {
  FElem v = 0;
  for (unsigned i = t_; i-- > 0;) v = v * qb_ + (i < c.size() ? c[i] : 0);
  return v;
}

std::vector<unsigned> Tower::b_coeffs(BElem a) const {
  std::vector<unsigned> c(m_);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = a % p_;
    a = BElem(a / p_);
  }
  return c;
}

BElem Tower::b_from_coeffs(const std::vector<unsigned>& c) const {
  std::uint32_t v = 0;
  for (unsigned i = m_; i-- > 0;) v = v * p_ + (i < c.size() ? c[i] : 0);
  return BElem(v);
}

// --- bases ---

std::vector<FElem> power_basis(const Tower& tw) {
  std::vector<FElem> basis(tw.t());
  FElem x = tw.modulus_root();
  for (unsigned i = 0; i < tw.t(); ++i) basis[i] = tw.pow(x, i);
  return basis;
}

BasisPair dual_basis(const Tower& tw, const std::vector<FElem>& basis) {
  const unsigned t = tw.t();
  if (basis.size() != t)
    throw std::invalid_argument("basis has wrong length");

  // Independence over B: the coordinate matrix (columns of index digits)
  // must have rank t.
  {
    std::vector<std::vector<BElem>> m(t);
    for (unsigned i = 0; i < t; ++i) m[i] = tw.f_coeffs(basis[i]);
    unsigned rank = 0;
    for (unsigned col = 0; col < t && rank < t; ++col) {
      unsigned piv = rank;
      while (piv < t && m[piv][col] == 0) ++piv;
      if (piv == t) continue;
      std::swap(m[piv], m[rank]);
      BElem inv = tw.b_inv(m[rank][col]);
      for (unsigned j = 0; j < t; ++j) m[rank][j] = tw.b_mul(m[rank][j], inv);
      for (unsigned r = 0; r < t; ++r) {
        if (r == rank || m[r][col] == 0) continue;
        BElem f = m[r][col];
        for (unsigned j = 0; j < t; ++j)
          m[r][j] = tw.b_sub(m[r][j], tw.b_mul(f, m[rank][j]));
      }
      ++rank;
    }
    if (rank < t) throw std::invalid_argument("basis is not independent");
  }

  // Invert the Gram matrix G[i][j] = Tr(u_i u_j) over B; the dual basis is
  // dual[j] = sum_i Ginv[i][j] u_i.
  std::vector<std::vector<BElem>> g(t, std::vector<BElem>(2 * t, 0));
  for (unsigned i = 0; i < t; ++i) {
    for (unsigned j = 0; j < t; ++j)
      g[i][j] = tw.trace(tw.mul(basis[i], basis[j]));
    g[i][t + i] = 1;
  }
  for (unsigned col = 0; col < t; ++col) {
    unsigned piv = col;
    while (piv < t && g[piv][col] == 0) ++piv;
    if (piv == t) throw std::logic_error("gram matrix singular");
    std::swap(g[piv], g[col]);
    BElem inv = tw.b_inv(g[col][col]);
    for (unsigned j = 0; j < 2 * t; ++j) g[col][j] = tw.b_mul(g[col][j], inv);
    for (unsigned r = 0; r < t; ++r) {
      if (r == col || g[r][col] == 0) continue;
      BElem f = g[r][col];
      for (unsigned j = 0; j < 2 * t; ++j)
        g[r][j] = tw.b_sub(g[r][j], tw.b_mul(f, g[col][j]));
    }
  }

  BasisPair bp;
  bp.basis = basis;
  bp.dual.assign(t, 0);
  for (unsigned j = 0; j < t; ++j) {
    FElem acc = 0;
    for (unsigned i = 0; i < t; ++i)
      acc = tw.add(acc, tw.mul(tw.embed(g[i][t + j]), basis[i]));
    bp.dual[j] = acc;
  }
  return bp;
}

}  // namespace rstrace

#include "rstrace/rs.hpp"

#include <stdexcept>

#include "rstrace/linalg.hpp"

namespace rstrace {
namespace {

void check_points(const std::vector<FElem>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw std::invalid_argument("evaluation points are not distinct");
}

}  // namespace

GrsCode make_rs(std::vector<FElem> points, int dim) {
  return make_grs(std::move(points), dim,
                  std::vector<FElem>(0));
}

GrsCode make_grs(std::vector<FElem> points, int dim, std::vector<FElem> mult) {
  check_points(points);
  if (dim < 1 || std::size_t(dim) > points.size())
    throw std::invalid_argument("bad code dimension");
  if (mult.empty()) mult.assign(points.size(), 1);
  if (mult.size() != points.size())
    throw std::invalid_argument("multiplier vector length mismatch");
  for (FElem v : mult)
    if (v == 0) throw std::invalid_argument("zero multiplier");
  return GrsCode{std::move(points), dim, std::move(mult)};
}

Codeword encode(const Tower& tw, const GrsCode& code, const Poly& f) {
  if (f.deg() >= code.dim)
    throw std::invalid_argument("message degree too high");
  Codeword w(code.points.size());
  for (std::size_t j = 0; j < code.points.size(); ++j)
    w[j] = tw.mul(code.mult[j], poly_eval(tw, f, code.points[j]));
  return w;
}

std::vector<FElem> dual_multipliers(const Tower& tw,
                                    const std::vector<FElem>& points) {
  check_points(points);
  std::vector<FElem> lam(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    FElem prod = 1;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i == j) continue;
      prod = tw.mul(prod, tw.sub(points[j], points[i]));
    }
    lam[j] = tw.inv(prod);
  }
  return lam;
}

GrsCode grs_dual(const Tower& tw, const GrsCode& code) {
  std::vector<FElem> lam = dual_multipliers(tw, code.points);
  std::vector<FElem> w(code.points.size());
  for (std::size_t j = 0; j < w.size(); ++j)
    w[j] = tw.mul(lam[j], tw.inv(code.mult[j]));
  return make_grs(code.points, int(code.points.size()) - code.dim,
                  std::move(w));
}

std::optional<Poly> bw_decode(const Tower& tw, const GrsCode& code,
                              const Codeword& received, int e_max) {
  if (received.size() != code.points.size())
    throw std::invalid_argument("received word length mismatch");
  if (e_max < 0) throw std::invalid_argument("negative error budget");

  std::vector<FElem> xs, zs;  // unerased points and unscaled values
  for (std::size_t j = 0; j < received.size(); ++j) {
    if (received[j] == kNoSym) continue;
    xs.push_back(code.points[j]);
    zs.push_back(tw.mul(received[j], tw.inv(code.mult[j])));
  }
  const int n = int(xs.size());
  const int k = code.dim;
  if (2 * e_max > n - k)
    throw std::invalid_argument("error budget exceeds decoding radius");

  // Key equation: find E (deg <= e_max) and N (deg <= e_max + k - 1), not
  // both zero, with E(x_j) z_j = N(x_j) for all j.  Any nonzero solution
  // has N = f E when some f matches the received word in all but at most
  // e_max places.
  const int ecols = e_max + 1;
  const int ncols = e_max + k;
  FOps fd{&tw};
  Mat<FElem> sys(n, std::size_t(ecols + ncols));
  for (int j = 0; j < n; ++j) {
    FElem xp = 1;
    for (int c = 0; c < ecols; ++c) {
      sys.at(j, c) = tw.mul(zs[j], xp);
      xp = tw.mul(xp, xs[j]);
    }
    xp = 1;
    for (int c = 0; c < ncols; ++c) {
      sys.at(j, ecols + c) = tw.neg(xp);
      xp = tw.mul(xp, xs[j]);
    }
  }
  auto kv = kernel_vector(fd, std::move(sys));
  if (!kv) return std::nullopt;

  Poly locator{{kv->begin(), kv->begin() + ecols}};
  Poly numer{{kv->begin() + ecols, kv->end()}};
  if (locator.is_zero()) return std::nullopt;
  auto [f, rem] = poly_divmod(tw, numer, locator);
  if (!rem.is_zero() || f.deg() >= k) return std::nullopt;

  int mismatches = 0;
  for (int j = 0; j < n; ++j)
    if (poly_eval(tw, f, xs[j]) != zs[j]) ++mismatches;
  if (mismatches > e_max) return std::nullopt;
  return f;
}

}  // namespace rstrace

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rstrace/field.hpp"

namespace rstrace {

// Dense row-major matrix over an index-represented field element type.
template <class T>
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}

  T& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const T& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  T* row(std::size_t r) { return a.data() + r * cols; }
  const T* row(std::size_t r) const { return a.data() + r * cols; }
};

// Field adaptors so the elimination routines work over both B and F.
struct BOps {
  const Tower* tw;
  using Elem = BElem;
  Elem add(Elem x, Elem y) const { return tw->b_add(x, y); }
  Elem sub(Elem x, Elem y) const { return tw->b_sub(x, y); }
  Elem mul(Elem x, Elem y) const { return tw->b_mul(x, y); }
  Elem inv(Elem x) const { return tw->b_inv(x); }
  Elem neg(Elem x) const { return tw->b_neg(x); }
};

struct FOps {
  const Tower* tw;
  using Elem = FElem;
  Elem add(Elem x, Elem y) const { return tw->add(x, y); }
  Elem sub(Elem x, Elem y) const { return tw->sub(x, y); }
  Elem mul(Elem x, Elem y) const { return tw->mul(x, y); }
  Elem inv(Elem x) const { return tw->inv(x); }
  Elem neg(Elem x) const { return tw->neg(x); }
};

// Reduced row echelon form in place; returns the pivot column of each of
// the first rank rows.  Deterministic (first nonzero pivot).
template <class Ops>
std::vector<std::size_t> rref_in_place(const Ops& fd,
                                       Mat<typename Ops::Elem>& m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(piv, j), m.at(rank, j));
    auto s = fd.inv(m.at(rank, col));
    for (std::size_t j = col; j < m.cols; ++j)
      m.at(rank, j) = fd.mul(m.at(rank, j), s);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      auto f = m.at(r, col);
      if (f == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(r, j) = fd.sub(m.at(r, j), fd.mul(f, m.at(rank, j)));
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

template <class Ops>
std::size_t rank(const Ops& fd, Mat<typename Ops::Elem> m) {
  return rref_in_place(fd, m).size();
}

// Basis (as rows) of {x : m x^T = 0}.
template <class Ops>
Mat<typename Ops::Elem> nullspace(const Ops& fd, Mat<typename Ops::Elem> m) {
  auto pivots = rref_in_place(fd, m);
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Mat<typename Ops::Elem> ns(m.cols - pivots.size(), m.cols);
  std::size_t out = 0;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    ns.at(out, free_col) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      ns.at(out, pivots[r]) = fd.neg(m.at(r, free_col));
    ++out;
  }
  return ns;
}

// First vector (deterministically) of the kernel of m, or nullopt if the
// kernel is trivial.
template <class Ops>
std::optional<std::vector<typename Ops::Elem>> kernel_vector(
    const Ops& fd, Mat<typename Ops::Elem> m) {
  auto pivots = rref_in_place(fd, m);
  if (pivots.size() == m.cols) return std::nullopt;
  std::vector<char> is_pivot(m.cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<typename Ops::Elem> v(m.cols, 0);
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    v[pivots[r]] = fd.neg(m.at(r, free_col));
  return v;
}

}  // namespace rstrace

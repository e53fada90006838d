#pragma once

#include <cstddef>
#include <vector>

#include "conesep/scalar.hpp"
#include "conesep/vector.hpp"

namespace conesep {

namespace detail {

/// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Tag>
std::vector<std::vector<Scalar>> to_rows(const std::vector<BasicVector<Tag>>& vs) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) rows.push_back(v.coords());
  return rows;
}

}  // namespace detail

/// Basis of {x : r(x) = 0 for all rows r}. Each basis vector is primitive with a
/// positive leading entry.
template <class Tag>
std::vector<Vector> nullspace_basis(const std::vector<BasicVector<Tag>>& rows, std::size_t dim) {
  require_dim(rows, dim, "row");
  auto a = detail::to_rows(rows);
  auto pivots = detail::rref(a, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vector v(dim);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][free];
    v = v.primitive();
    for (std::size_t i = 0; i < dim; ++i) {
      if (v[i].is_zero()) continue;
      if (v[i].sign() < 0) v = -v;
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Tag>
std::size_t rank(const std::vector<BasicVector<Tag>>& vs, std::size_t dim) {
  auto a = detail::to_rows(vs);
  return detail::rref(a, dim).size();
}

/// Dimension of the affine hull of a nonempty point set.
inline std::size_t affine_dimension(const std::vector<Vector>& pts) {
  if (pts.empty()) return 0;
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  return rank(diffs, pts[0].dim());
}

}  // namespace conesep

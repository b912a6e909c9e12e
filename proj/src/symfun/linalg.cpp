#include "wmk/linalg.hpp"

namespace wmk {

namespace {

size_t weight(const RatFunc& f) { return f.num().size() + f.den().size(); }

}  // namespace

std::vector<size_t> row_reduce(RatMatrix& a, size_t ncols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t c = 0; c < ncols && row < a.size(); ++c) {
    size_t best = a.size();
    for (size_t r = row; r < a.size(); ++r)
      if (!a[r][c].is_zero() && (best == a.size() || weight(a[r][c]) < weight(a[best][c]))) best = r;
    if (best == a.size()) continue;
    std::swap(a[row], a[best]);
    RatFunc inv = a[row][c].inverse();
    for (size_t k = c; k < a[row].size(); ++k)
      if (!a[row][k].is_zero()) a[row][k] *= inv;
    for (size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      RatFunc f = a[r][c];
      for (size_t k = c; k < a[r].size(); ++k)
        if (!a[row][k].is_zero()) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<RatVector> nullspace(RatMatrix a, size_t ncols) {
  auto pivots = row_reduce(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(ncols);
    v[free] = RatFunc(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(v);
  }
  return basis;
}

RatFunc determinant(RatMatrix a) {
  size_t n = a.size();
  RatFunc det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t best = n;
    for (size_t r = c; r < n; ++r)
      if (!a[r][c].is_zero() && (best == n || weight(a[r][c]) < weight(a[best][c]))) best = r;
    if (best == n) return RatFunc();
    if (best != c) {
      std::swap(a[best], a[c]);
      det = -det;
    }
    det *= a[c][c];
    RatFunc inv = a[c][c].inverse();
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      RatFunc f = a[r][c] * inv;
      for (size_t k = c; k < n; ++k)
        if (!a[c][k].is_zero()) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::optional<RatVector> solve(RatMatrix a, const RatVector& b) {
  size_t n = a.empty() ? 0 : a[0].size();
  for (size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto pivots = row_reduce(a, n);
  if (pivots.size() != n) return std::nullopt;
  for (size_t r = n; r < a.size(); ++r)
    if (!a[r][n].is_zero()) return std::nullopt;
  RatVector x(n);
  for (size_t r = 0; r < n; ++r) x[pivots[r]] = a[r][n];
  return x;
}

}  // namespace wmk

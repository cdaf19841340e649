// Exact dense linear algebra over a field: rank and right kernel via
// fraction-free-ish Gaussian elimination (plain division; entries are
// already reduced fractions).  K needs +, -, *, /, isZero, and K(long).
#pragma once

#include <map>
#include <utility>
#include <vector>

namespace colink {

template <class K>
using Mat = std::vector<std::vector<K>>;

namespace detail {

// returns pivot column per pivot row; m becomes row echelon
template <class K>
std::vector<size_t> echelonize(Mat<K>& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c].isZero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    K inv = K(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].isZero()) continue;
      K f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class K>
size_t rankOf(Mat<K> m) {
  return detail::echelonize(m).size();
}

// kernel of a column family given as sparse vectors keyed by Key; returns
// coefficient vectors c with sum_j c[j]*cols[j] = 0, one per dependent column.
// Cost scales with the nonzero count, not with the ambient key space.
template <class Key, class K>
Mat<K> sparseKernel(const std::vector<std::map<Key, K>>& cols) {
  struct EchRow {
    std::map<Key, K> vec;  // leading key = vec.begin()
    std::vector<K> expr;   // expansion over the original columns
  };
  std::map<Key, EchRow> rows;
  Mat<K> kernel;
  size_t n = cols.size();
  for (size_t j = 0; j < n; ++j) {
    std::map<Key, K> v = cols[j];
    std::vector<K> expr(n, K(0));
    expr[j] = K(1);
    for (;;) {
      if (v.empty()) {
        kernel.push_back(std::move(expr));
        break;
      }
      auto lead = v.begin();
      auto hit = rows.find(lead->first);
      if (hit == rows.end()) {
        K inv = K(1) / lead->second;
        for (auto& [k, c] : v) c = c * inv;
        for (auto& c : expr) c = c * inv;
        Key key = lead->first;
        rows.emplace(std::move(key), EchRow{std::move(v), std::move(expr)});
        break;
      }
      K f = lead->second;
      for (const auto& [k, c] : hit->second.vec) {
        auto it = v.find(k);
        K d = (it == v.end() ? K(0) : it->second) - f * c;
        if (d.isZero()) {
          if (it != v.end()) v.erase(it);
        } else if (it == v.end()) {
          v.emplace(k, std::move(d));
        } else {
          it->second = std::move(d);
        }
      }
      for (size_t i = 0; i < n; ++i)
        expr[i] = expr[i] - f * hit->second.expr[i];
    }
  }
  return kernel;
}

// basis of {v : m v = 0}, one vector per free column
template <class K>
Mat<K> kernelBasis(Mat<K> m) {
  if (m.empty()) return {};
  size_t cols = m[0].size();
  std::vector<size_t> pivots = detail::echelonize(m);
  std::vector<bool> isPivot(cols, false);
  for (size_t c : pivots) isPivot[c] = true;
  Mat<K> basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (isPivot[fc]) continue;
    std::vector<K> v(cols, K(0));
    v[fc] = K(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] < fc) v[pivots[r]] = K(0) - m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace colink

// Independent textbook routines used as test oracles. They deliberately share
// no code with the library's elimination kernels.
#pragma once

#include <random>
#include <vector>

#include "hh/matrix.hpp"

namespace oracle {

template <class K>
std::vector<std::vector<K>> to_rows(const hh::SparseMatrix<K>& m) {
  std::vector<std::vector<K>> a(m.rows(), std::vector<K>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto r = m.col_rows(j);
    auto v = m.col_values(j);
    for (std::size_t k = 0; k < r.size(); ++k) a[r[k]][j] = v[k];
  }
  return a;
}

// Plain Gaussian elimination on a row list.
template <class K>
std::size_t dense_rank(std::vector<std::vector<K>> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      K f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

template <class K>
std::size_t dense_rank(const hh::SparseMatrix<K>& m) {
  return dense_rank(to_rows(m));
}

inline hh::SparseMatrix<hh::Fp> random_fp(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                          std::uint32_t p, double density) {
  std::vector<hh::Triplet<hh::Fp>> t;
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (u(rng) < density)
        t.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                     hh::Fp(static_cast<std::uint32_t>(rng() % p), p)});
  return hh::SparseMatrix<hh::Fp>::from_triplets(rows, cols, std::move(t));
}

}  // namespace oracle

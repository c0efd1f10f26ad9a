// Markowitz sparse elimination and dense elimination kernels.
#include <algorithm>
#include <cstdint>

#include "hh/linalg.hpp"

namespace hh {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) { return Fp(a, p).inverse().value(); }

// Row-major dense rank modulo p; destroys `a`.
std::size_t dense_rank_mod(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
    std::uint32_t* prow = &a[r * cols];
    const std::uint64_t inv = inv_mod(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint32_t* row = &a[i * cols];
      const std::uint64_t f = row[c];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t j = c; j < cols; ++j)
        if (prow[j]) row[j] = static_cast<std::uint32_t>((row[j] + nf * prow[j]) % p);
    }
    ++r;
  }
  return r;
}

template <class K>
std::size_t dense_rank_generic(DenseMatrix<K>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const K inv = m.at(r, c).inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const K f = m.at(i, c) * inv;
      for (std::size_t j = c; j < cols; ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

template <class K>
std::size_t dense_rank_of_rows(const std::vector<SparseVector<K>>& rows, const std::vector<std::uint32_t>& live_rows,
                               const std::vector<std::int64_t>& col_map, std::size_t ncols) {
  if constexpr (std::is_same_v<K, Fp>) {
    std::uint32_t p = 0;
    for (auto r : live_rows)
      if (!rows[r].empty()) { p = rows[r].front().value.modulus(); break; }
    if (p == 0) return 0;
    std::vector<std::uint32_t> a(live_rows.size() * ncols, 0);
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (auto& e : rows[live_rows[i]]) a[i * ncols + static_cast<std::size_t>(col_map[e.index])] = e.value.value();
    return dense_rank_mod(a, live_rows.size(), ncols, p);
  } else {
    DenseMatrix<K> d(live_rows.size(), ncols);
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (auto& e : rows[live_rows[i]]) d.at(i, static_cast<std::size_t>(col_map[e.index])) = e.value;
    return dense_rank_generic(d);
  }
}

}  // namespace

template <class K>
std::size_t dense_rank(DenseMatrix<K> m) {
  if constexpr (std::is_same_v<K, Fp>) {
    std::uint32_t p = 0;
    for (std::size_t i = 0; i < m.rows() && !p; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) { p = m.at(i, j).modulus(); break; }
    if (p == 0) return 0;
    std::vector<std::uint32_t> a(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Fp& x = m.at(i, j);
        if (!x.is_zero() && x.modulus() != p) throw FieldError("mixed-field entries in matrix");
        a[i * m.cols() + j] = x.value();
      }
    return dense_rank_mod(a, m.rows(), m.cols(), p);
  } else {
    return dense_rank_generic(m);
  }
}

template <class K>
std::size_t sparse_rank(std::vector<SparseVector<K>> rows, std::size_t ncols, const RankOptions& opt) {
  const std::size_t nrows = rows.size();
  std::vector<std::uint32_t> col_count(ncols, 0);
  std::vector<std::vector<std::uint32_t>> col_rows(ncols);
  std::vector<std::uint8_t> row_alive(nrows, 0), col_alive(ncols, 0);
  std::size_t active_rows = 0, active_cols = 0, active_nnz = 0;
  for (std::size_t i = 0; i < nrows; ++i) {
    if (rows[i].empty()) continue;
    row_alive[i] = 1;
    ++active_rows;
    active_nnz += rows[i].size();
    for (auto& e : rows[i]) {
      ++col_count[e.index];
      col_rows[e.index].push_back(static_cast<std::uint32_t>(i));
    }
  }
  for (std::size_t j = 0; j < ncols; ++j)
    if (col_count[j]) col_alive[j] = 1, ++active_cols;

  std::vector<std::uint32_t> row_q, col_q;
  for (std::size_t i = 0; i < nrows; ++i)
    if (row_alive[i] && rows[i].size() == 1) row_q.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t j = 0; j < ncols; ++j)
    if (col_count[j] == 1) col_q.push_back(static_cast<std::uint32_t>(j));

  auto find = [&](std::uint32_t r, std::uint32_t c) -> std::ptrdiff_t {
    auto& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry<K>& e, std::uint32_t x) { return e.index < x; });
    return (it != row.end() && it->index == c) ? it - row.begin() : -1;
  };
  auto drop_col_entry = [&](std::uint32_t k) {
    if (--col_count[k] == 1) col_q.push_back(k);
    else if (col_count[k] == 0 && col_alive[k]) col_alive[k] = 0, --active_cols;
  };
  auto kill_col = [&](std::uint32_t j) {
    col_alive[j] = 0;
    --active_cols;
  };
  // Removes row r; column j (the pivot column) must already be dead.
  auto kill_row = [&](std::uint32_t r) {
    for (auto& e : rows[r])
      if (col_alive[e.index]) drop_col_entry(e.index);
    active_nnz -= rows[r].size();
    row_alive[r] = 0;
    --active_rows;
    SparseVector<K>().swap(rows[r]);
  };
  auto after_update = [&](std::uint32_t s) {
    if (rows[s].empty()) row_alive[s] = 0, --active_rows;
    else if (rows[s].size() == 1) row_q.push_back(s);
  };

  std::size_t rank = 0;
  std::vector<std::uint8_t> mark(nrows, 0);
  std::vector<std::uint32_t> targets;
  SparseVector<K> merged;

  while (active_rows > 0 && active_cols > 0) {
    if (!row_q.empty()) {
      std::uint32_t r = row_q.back();
      row_q.pop_back();
      if (!row_alive[r] || rows[r].size() != 1) continue;
      const std::uint32_t j = rows[r].front().index;
      ++rank;
      kill_col(j);
      for (auto s : col_rows[j]) {
        if (s == r || !row_alive[s]) continue;
        auto pos = find(s, j);
        if (pos < 0) continue;
        rows[s].erase(rows[s].begin() + pos);
        --active_nnz;
        after_update(s);
      }
      kill_row(r);
      continue;
    }
    if (!col_q.empty()) {
      std::uint32_t j = col_q.back();
      col_q.pop_back();
      if (!col_alive[j] || col_count[j] != 1) continue;
      std::uint32_t r = 0;
      bool found = false;
      for (auto s : col_rows[j])
        if (row_alive[s] && find(s, j) >= 0) { r = s; found = true; break; }
      if (!found) continue;
      ++rank;
      kill_col(j);
      // The pivot column held one entry; remove it from the count bookkeeping.
      auto pos = find(r, j);
      rows[r].erase(rows[r].begin() + pos);
      --active_nnz;
      kill_row(r);
      continue;
    }

    const double cells = double(active_rows) * double(active_cols);
    if (cells <= double(opt.dense_cell_limit) &&
        (cells <= 4096.0 || double(active_nnz) >= opt.dense_threshold * cells)) {
      std::vector<std::uint32_t> live_rows;
      for (std::size_t i = 0; i < nrows; ++i)
        if (row_alive[i]) live_rows.push_back(static_cast<std::uint32_t>(i));
      std::vector<std::int64_t> col_map(ncols, -1);
      std::size_t nc = 0;
      for (std::size_t j = 0; j < ncols; ++j)
        if (col_alive[j]) col_map[j] = static_cast<std::int64_t>(nc++);
      return rank + dense_rank_of_rows(rows, live_rows, col_map, nc);
    }

    // Markowitz pivot among the few sparsest columns.
    std::uint32_t best_cols[3];
    std::uint32_t nbest = 0;
    for (std::uint32_t j = 0; j < ncols; ++j) {
      if (!col_alive[j]) continue;
      if (nbest < 3) {
        best_cols[nbest++] = j;
      } else {
        std::uint32_t worst = 0;
        for (std::uint32_t t = 1; t < 3; ++t)
          if (col_count[best_cols[t]] > col_count[best_cols[worst]]) worst = t;
        if (col_count[j] < col_count[best_cols[worst]]) best_cols[worst] = j;
      }
    }
    std::uint64_t best_cost = UINT64_MAX;
    std::uint32_t prow = 0, pcol = 0;
    for (std::uint32_t t = 0; t < nbest; ++t) {
      const std::uint32_t j = best_cols[t];
      for (auto s : col_rows[j]) {
        if (!row_alive[s] || find(s, j) < 0) continue;
        std::uint64_t cost = std::uint64_t(rows[s].size() - 1) * (col_count[j] - 1);
        if (cost < best_cost) best_cost = cost, prow = s, pcol = j;
      }
    }
    if (best_cost == UINT64_MAX) break;  // unreachable with consistent bookkeeping

    ++rank;
    kill_col(pcol);
    const SparseVector<K> pivot = rows[prow];
    const K inv = pivot[static_cast<std::size_t>(find(prow, pcol))].value.inverse();
    targets.clear();
    for (auto s : col_rows[pcol])
      if (s != prow && row_alive[s] && !mark[s] && find(s, pcol) >= 0) mark[s] = 1, targets.push_back(s);
    for (auto s : targets) {
      mark[s] = 0;
      auto& row = rows[s];
      const K f = row[static_cast<std::size_t>(find(s, pcol))].value * inv;
      merged.clear();
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].index < pivot[b].index)) {
          merged.push_back(std::move(row[a++]));
        } else if (a == row.size() || pivot[b].index < row[a].index) {
          const std::uint32_t k = pivot[b].index;
          if (k != pcol) {
            merged.push_back({k, -(f * pivot[b].value)});
            ++col_count[k];
            col_rows[k].push_back(s);
            ++active_nnz;
          }
          ++b;
        } else {
          const std::uint32_t k = row[a].index;
          if (k == pcol) {
            --active_nnz;
          } else {
            K v = row[a].value - f * pivot[b].value;
            if (v.is_zero()) --active_nnz, drop_col_entry(k);
            else merged.push_back({k, std::move(v)});
          }
          ++a, ++b;
        }
      }
      row.swap(merged);
      after_update(s);
    }
    kill_row(prow);
  }
  return rank;
}

#define HH_INSTANTIATE(K)                                                                                      \
  template std::size_t dense_rank<K>(DenseMatrix<K>);                                                         \
  template std::size_t sparse_rank<K>(std::vector<SparseVector<K>>, std::size_t, const RankOptions&);
HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh

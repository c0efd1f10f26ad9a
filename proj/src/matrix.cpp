#include "hh/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace hh {

template <class K>
void normalize(SparseVector<K>& v) {
  std::sort(v.begin(), v.end(), [](const Entry<K>& a, const Entry<K>& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    K sum = v[i].value;
    while (j < v.size() && v[j].index == v[i].index) sum += v[j++].value;
    if (!sum.is_zero()) v[out++] = {v[i].index, std::move(sum)};
    i = j;
  }
  v.resize(out);
}

// ---- dense ----

template <class K>
DenseMatrix<K> DenseMatrix<K>::identity(std::size_t n, const FieldSpec& f) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K::from_int(f, 1);
  return m;
}

template <class K>
std::vector<K> DenseMatrix<K>::column(std::size_t j) const {
  std::vector<K> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

template <class K>
std::vector<K> DenseMatrix<K>::apply(std::span<const K> x) const {
  if (x.size() != cols_) throw ShapeError("dense apply: shape mismatch");
  std::vector<K> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

template <class K>
DenseMatrix<K> DenseMatrix<K>::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

template <class K>
DenseMatrix<K> DenseMatrix<K>::operator*(const DenseMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("dense product: shape mismatch");
  DenseMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const K& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

template <class K>
DenseMatrix<K> DenseMatrix<K>::operator+(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("dense sum: shape mismatch");
  DenseMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

template <class K>
DenseMatrix<K> DenseMatrix<K>::operator-(const DenseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("dense difference: shape mismatch");
  DenseMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

template <class K>
bool DenseMatrix<K>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const K& x) { return x.is_zero(); });
}

// ---- sparse ----

template <class K>
SparseMatrix<K> SparseMatrix<K>::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet<K>> t) {
  std::vector<SparseVector<K>> c(cols);
  for (auto& e : t) {
    if (e.row >= rows || e.col >= cols) throw ShapeError("triplet out of range");
    c[e.col].push_back({e.row, std::move(e.value)});
  }
  return from_columns(rows, std::move(c));
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::from_columns(std::size_t rows, std::vector<SparseVector<K>> cols) {
  SparseMatrix m(rows, cols.size());
  std::size_t total = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    normalize(cols[j]);
    if (!cols[j].empty() && cols[j].back().index >= rows) throw ShapeError("column entry out of range");
    total += cols[j].size();
    m.col_ptr_[j + 1] = total;
  }
  m.row_idx_.reserve(total);
  m.values_.reserve(total);
  for (auto& c : cols) {
    for (auto& e : c) {
      m.row_idx_.push_back(e.index);
      m.values_.push_back(std::move(e.value));
    }
    SparseVector<K>().swap(c);
  }
  return m;
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::identity(std::size_t n, const FieldSpec& f) {
  SparseMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    m.col_ptr_[j + 1] = j + 1;
    m.row_idx_.push_back(static_cast<std::uint32_t>(j));
    m.values_.push_back(K::from_int(f, 1));
  }
  return m;
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::from_dense(const DenseMatrix<K>& d) {
  std::vector<SparseVector<K>> c(d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d.at(i, j).is_zero()) c[j].push_back({static_cast<std::uint32_t>(i), d.at(i, j)});
  return from_columns(d.rows(), std::move(c));
}

template <class K>
SparseVector<K> SparseMatrix<K>::column(std::size_t j) const {
  SparseVector<K> v;
  v.reserve(col_ptr_[j + 1] - col_ptr_[j]);
  for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) v.push_back({row_idx_[k], values_[k]});
  return v;
}

template <class K>
K SparseMatrix<K>::at(std::size_t i, std::size_t j) const {
  auto r = col_rows(j);
  auto it = std::lower_bound(r.begin(), r.end(), static_cast<std::uint32_t>(i));
  if (it == r.end() || *it != i) return K{};
  return values_[col_ptr_[j] + static_cast<std::size_t>(it - r.begin())];
}

template <class K>
std::vector<Triplet<K>> SparseMatrix<K>::triplets() const {
  std::vector<Triplet<K>> t;
  t.reserve(nnz());
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k)
      t.push_back({row_idx_[k], static_cast<std::uint32_t>(j), values_[k]});
  return t;
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::transpose() const {
  SparseMatrix t(cols_, rows_);
  std::vector<std::size_t> count(rows_ + 1, 0);
  for (auto r : row_idx_) ++count[r + 1];
  std::partial_sum(count.begin(), count.end(), count.begin());
  t.col_ptr_ = count;
  t.row_idx_.resize(nnz());
  t.values_.resize(nnz());
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) {
      std::size_t pos = count[row_idx_[k]]++;
      t.row_idx_[pos] = static_cast<std::uint32_t>(j);
      t.values_[pos] = values_[k];
    }
  return t;
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("sparse product: shape mismatch");
  std::vector<SparseVector<K>> out(o.cols_);
  const long long n = static_cast<long long>(o.cols_);
#pragma omp parallel
  {
    std::vector<K> acc(rows_);
    std::vector<std::uint8_t> mark(rows_, 0);
    std::vector<std::uint32_t> touched;
#pragma omp for schedule(dynamic, 64)
    for (long long jj = 0; jj < n; ++jj) {
      std::size_t j = static_cast<std::size_t>(jj);
      touched.clear();
      for (std::size_t k = o.col_ptr_[j]; k < o.col_ptr_[j + 1]; ++k) {
        const std::size_t c = o.row_idx_[k];
        const K& b = o.values_[k];
        for (std::size_t q = col_ptr_[c]; q < col_ptr_[c + 1]; ++q) {
          std::uint32_t r = row_idx_[q];
          if (!mark[r]) {
            mark[r] = 1;
            acc[r] = values_[q] * b;
            touched.push_back(r);
          } else {
            acc[r] += values_[q] * b;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      SparseVector<K>& col = out[j];
      for (auto r : touched) {
        if (!acc[r].is_zero()) col.push_back({r, acc[r]});
        mark[r] = 0;
      }
    }
  }
  return from_columns(rows_, std::move(out));
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("sparse sum: shape mismatch");
  std::vector<SparseVector<K>> c(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    c[j] = column(j);
    auto oc = o.column(j);
    c[j].insert(c[j].end(), oc.begin(), oc.end());
  }
  return from_columns(rows_, std::move(c));
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::scaled(const K& s) const {
  std::vector<SparseVector<K>> c(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    c[j] = column(j);
    for (auto& e : c[j]) e.value = e.value * s;
  }
  return from_columns(rows_, std::move(c));
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("sparse difference: shape mismatch");
  std::vector<SparseVector<K>> c(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    c[j] = column(j);
    for (std::size_t k = o.col_ptr_[j]; k < o.col_ptr_[j + 1]; ++k) c[j].push_back({o.row_idx_[k], -o.values_[k]});
  }
  return from_columns(rows_, std::move(c));
}

template <class K>
std::vector<K> SparseMatrix<K>::apply(std::span<const K> x) const {
  if (x.size() != cols_) throw ShapeError("sparse apply: shape mismatch");
  std::vector<K> y(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) y[row_idx_[k]] += values_[k] * x[j];
  }
  return y;
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::select_columns(std::span<const std::uint32_t> cols) const {
  std::vector<SparseVector<K>> c(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) c[j] = column(cols[j]);
  return from_columns(rows_, std::move(c));
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::select_rows(std::span<const std::uint32_t> rows) const {
  std::vector<std::int64_t> map(rows_, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) map[rows[i]] = static_cast<std::int64_t>(i);
  std::vector<SparseVector<K>> c(cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k)
      if (map[row_idx_[k]] >= 0) c[j].push_back({static_cast<std::uint32_t>(map[row_idx_[k]]), values_[k]});
  return from_columns(rows.size(), std::move(c));
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::hconcat(const SparseMatrix& o) const {
  if (rows_ != o.rows_) throw ShapeError("hconcat: row mismatch");
  std::vector<SparseVector<K>> c(cols_ + o.cols_);
  for (std::size_t j = 0; j < cols_; ++j) c[j] = column(j);
  for (std::size_t j = 0; j < o.cols_; ++j) c[cols_ + j] = o.column(j);
  return from_columns(rows_, std::move(c));
}

template <class K>
SparseMatrix<K> SparseMatrix<K>::vconcat(const SparseMatrix& o) const {
  if (cols_ != o.cols_) throw ShapeError("vconcat: column mismatch");
  std::vector<SparseVector<K>> c(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    c[j] = column(j);
    for (std::size_t k = o.col_ptr_[j]; k < o.col_ptr_[j + 1]; ++k)
      c[j].push_back({static_cast<std::uint32_t>(rows_ + o.row_idx_[k]), o.values_[k]});
  }
  return from_columns(rows_ + o.rows_, std::move(c));
}

template <class K>
DenseMatrix<K> SparseMatrix<K>::to_dense() const {
  DenseMatrix<K> d(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t k = col_ptr_[j]; k < col_ptr_[j + 1]; ++k) d.at(row_idx_[k], j) = values_[k];
  return d;
}

template <class K>
SparseMatrix<K> block_matrix(std::size_t top_rows, std::size_t bottom_rows, std::size_t left_cols,
                             std::size_t right_cols, const SparseMatrix<K>* a, const SparseMatrix<K>* b,
                             const SparseMatrix<K>* c, const SparseMatrix<K>* d) {
  auto check = [](const SparseMatrix<K>* m, std::size_t r, std::size_t cc) {
    if (m && (m->rows() != r || m->cols() != cc)) throw ShapeError("block_matrix: block shape mismatch");
  };
  check(a, top_rows, left_cols);
  check(b, top_rows, right_cols);
  check(c, bottom_rows, left_cols);
  check(d, bottom_rows, right_cols);
  std::vector<SparseVector<K>> cols(left_cols + right_cols);
  auto put = [&](const SparseMatrix<K>* m, std::size_t row_off, std::size_t col_off) {
    if (!m) return;
    for (std::size_t j = 0; j < m->cols(); ++j) {
      auto r = m->col_rows(j);
      auto v = m->col_values(j);
      for (std::size_t k = 0; k < r.size(); ++k)
        cols[col_off + j].push_back({static_cast<std::uint32_t>(row_off + r[k]), v[k]});
    }
  };
  put(a, 0, 0);
  put(b, 0, left_cols);
  put(c, top_rows, 0);
  put(d, top_rows, left_cols);
  return SparseMatrix<K>::from_columns(top_rows + bottom_rows, std::move(cols));
}

template <class K>
SparseMatrix<K> kronecker(const SparseMatrix<K>& a, const SparseMatrix<K>& b) {
  std::vector<SparseVector<K>> cols(a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    auto ar = a.col_rows(ja);
    auto av = a.col_values(ja);
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      auto br = b.col_rows(jb);
      auto bv = b.col_values(jb);
      auto& col = cols[ja * b.cols() + jb];
      for (std::size_t p = 0; p < ar.size(); ++p)
        for (std::size_t q = 0; q < br.size(); ++q)
          col.push_back({static_cast<std::uint32_t>(ar[p] * b.rows() + br[q]), av[p] * bv[q]});
    }
  }
  return SparseMatrix<K>::from_columns(a.rows() * b.rows(), std::move(cols));
}

#define HH_INSTANTIATE(K)                                                                                   \
  template void normalize<K>(SparseVector<K>&);                                                            \
  template class DenseMatrix<K>;                                                                           \
  template class SparseMatrix<K>;                                                                          \
  template SparseMatrix<K> block_matrix<K>(std::size_t, std::size_t, std::size_t, std::size_t,             \
                                           const SparseMatrix<K>*, const SparseMatrix<K>*,                 \
                                           const SparseMatrix<K>*, const SparseMatrix<K>*);                \
  template SparseMatrix<K> kronecker<K>(const SparseMatrix<K>&, const SparseMatrix<K>&);
HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh

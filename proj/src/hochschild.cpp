#include "hh/hochschild.hpp"

#include <algorithm>
#include <atomic>
#include <map>

namespace hh {

SizeLimitExceeded::SizeLimitExceeded(const std::string& what, std::size_t requested_, std::size_t limit_)
    : std::runtime_error(what + ": dimension " + std::to_string(requested_) + " exceeds limit " +
                         std::to_string(limit_)),
      requested(requested_), limit(limit_) {}

void check_size(std::size_t dim, const Limits& limits, const std::string& what) {
  if (dim > limits.max_space_dim) throw SizeLimitExceeded(what, dim, limits.max_space_dim);
}

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

void IndexSet::add_run(std::vector<std::uint64_t> sorted) {
  offsets_.push_back(size_);
  size_ += sorted.size();
  runs_.push_back(std::move(sorted));
}

std::uint64_t IndexSet::operator[](std::size_t i) const {
  const auto r = static_cast<std::size_t>(std::upper_bound(offsets_.begin(), offsets_.end(), i) - offsets_.begin()) - 1;
  return runs_[r][i - offsets_[r]];
}

std::int64_t IndexSet::find(std::uint64_t x) const {
  for (std::size_t r = 0; r < runs_.size(); ++r) {
    auto it = std::lower_bound(runs_[r].begin(), runs_[r].end(), x);
    if (it != runs_[r].end() && *it == x) return static_cast<std::int64_t>(offsets_[r] + (it - runs_[r].begin()));
  }
  return -1;
}

template <class K>
CochainComplex<K>::CochainComplex(std::vector<std::size_t> dims, std::vector<SparseMatrix<K>> diffs)
    : dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (!dims_.empty() && diffs_.size() + 1 != dims_.size()) throw ShapeError("complex needs one map per gap");
  for (std::size_t n = 0; n < diffs_.size(); ++n)
    if (diffs_[n].cols() != dims_[n] || diffs_[n].rows() != dims_[n + 1])
      throw ShapeError("differential " + std::to_string(n) + " has the wrong shape");
}

template <class K>
bool CochainComplex<K>::composes_to_zero() const {
  for (std::size_t n = 0; n + 1 < diffs_.size(); ++n)
    if (!(diffs_[n + 1] * diffs_[n]).is_zero()) return false;
  return true;
}

template <class K>
std::vector<std::size_t> CochainComplex<K>::cohomology_dims(std::size_t n_max, const RankOptions& opt) const {
  if (n_max >= top()) throw std::out_of_range("cohomology degree beyond the stored complex");
  std::vector<std::size_t> r(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) r[n] = rank(diffs_[n], opt);
  std::vector<std::size_t> h(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) h[n] = dims_[n] - r[n] - (n > 0 ? r[n - 1] : 0);
  return h;
}

template <class K>
BarDifferential<K>::BarDifferential(Algebra<K> a, Bimodule<K> m)
    : a_(std::move(a)), mod_(std::move(m)), d_(a_.dim()), m_(mod_.dim()), minus_one_(-a_.one()) {
  if (!mod_.algebra().same_as(a_)) throw AlgebraError("bimodule over a different algebra");
  left_cols_.resize(d_ * m_);
  right_cols_.resize(d_ * m_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t o = 0; o < m_; ++o) {
      left_cols_[i * m_ + o] = mod_.left(i).column(o);
      right_cols_[i * m_ + o] = mod_.right(i).column(o);
    }
  for (std::size_t k = 0; k < 64; ++k) {
    pow_.push_back(ipow(d_, k));
    if (pow_.back() == UINT64_MAX) break;
  }
}

// b f(a_0..a_n) = a_0 f(a_1..a_n) + sum_i (-1)^i f(.., a_{i-1} a_i, ..) + (-1)^{n+1} f(a_0..a_{n-1}) a_n,
// written with the input slots a_0..a_n of the degree n+1 tensor.
template <class K>
void BarDifferential<K>::column(std::size_t n, std::uint64_t t, std::uint32_t o,
                                std::vector<std::pair<std::uint64_t, K>>& out) const {
  const std::uint64_t dn = pow_.at(n);
  for (std::size_t a = 0; a < d_; ++a)
    for (auto& e : left_cols_[a * m_ + o]) out.emplace_back((a * dn + t) * m_ + e.index, e.value);
  for (std::size_t i = 1; i <= n; ++i) {
    const std::uint64_t low = pow_[n - i];
    const std::uint64_t digit = (t / low) % d_;
    const std::uint64_t hi = t / (low * d_);
    const std::uint64_t lo = t % low;
    const bool neg = i % 2 == 1;
    for (auto& pre : a_.preimages(digit)) {
      const std::uint64_t x = ((hi * d_ + pre.a) * d_ + pre.b) * low + lo;
      out.emplace_back(x * m_ + o, neg ? minus_one_ * pre.c : pre.c);
    }
  }
  const bool neg = (n + 1) % 2 == 1;
  for (std::size_t b = 0; b < d_; ++b)
    for (auto& e : right_cols_[b * m_ + o])
      out.emplace_back((t * d_ + b) * m_ + e.index, neg ? minus_one_ * e.value : e.value);
}

namespace {

// Builds columns in parallel; `col_index(j)` gives the full index of column j,
// `row_of(x)` maps a full row index to a local one (or -1).
template <class K, class ColIndex, class RowOf>
SparseMatrix<K> assemble(const BarDifferential<K>& b, std::size_t n, std::size_t ncols, std::size_t nrows,
                         ColIndex col_index, RowOf row_of, bool allow_leak) {
  const std::uint64_t m = b.module_dim();
  std::vector<SparseVector<K>> cols(ncols);
  std::atomic<bool> leak{false};
#pragma omp parallel
  {
    std::vector<std::pair<std::uint64_t, K>> buf;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(ncols); ++j) {
      const std::uint64_t full = col_index(static_cast<std::size_t>(j));
      buf.clear();
      b.column(n, full / m, static_cast<std::uint32_t>(full % m), buf);
      auto& col = cols[static_cast<std::size_t>(j)];
      col.reserve(buf.size());
      for (auto& [x, v] : buf) {
        const std::int64_t r = row_of(x);
        if (r < 0) {
          if (!v.is_zero()) leak = true;
          continue;
        }
        col.push_back({static_cast<std::uint32_t>(r), v});
      }
    }
  }
  auto out = SparseMatrix<K>::from_columns(nrows, std::move(cols));
  if (leak && !allow_leak) {
    // Repeated rows may cancel; only a surviving leaked entry is an error.
    std::vector<std::pair<std::uint64_t, K>> buf;
    for (std::size_t j = 0; j < ncols; ++j) {
      const std::uint64_t full = col_index(j);
      buf.clear();
      b.column(n, full / m, static_cast<std::uint32_t>(full % m), buf);
      std::map<std::uint64_t, K> outside;
      for (auto& [x, v] : buf) {
        if (row_of(x) >= 0) continue;
        auto [it, fresh] = outside.try_emplace(x, v);
        if (!fresh) it->second += v;
      }
      for (auto& [x, v] : outside)
        if (!v.is_zero())
          throw RestrictionLeak("differential leaves the chosen subspace at column " + std::to_string(full) +
                                ", row " + std::to_string(x));
    }
  }
  return out;
}

}  // namespace

template <class K>
SparseMatrix<K> restricted_bar_differential(const BarDifferential<K>& b, std::size_t n, const IndexSet& cols,
                                            const IndexSet& rows, bool allow_leak) {
  return assemble<K>(
      b, n, cols.size(), rows.size(), [&](std::size_t j) { return cols[j]; },
      [&](std::uint64_t x) { return rows.find(x); }, allow_leak);
}

template <class K>
SparseMatrix<K> bar_differential_matrix(const BarDifferential<K>& b, std::size_t n, const Limits& limits) {
  const std::uint64_t ncols = ipow(b.algebra_dim(), n) * b.module_dim();
  const std::uint64_t nrows = ipow(b.algebra_dim(), n + 1) * b.module_dim();
  check_size(nrows, limits, "Hochschild cochains of degree " + std::to_string(n + 1));
  return assemble<K>(
      b, n, ncols, nrows, [](std::size_t j) { return std::uint64_t(j); },
      [](std::uint64_t x) { return static_cast<std::int64_t>(x); }, false);
}

template <class K>
CochainComplex<K> hochschild_cochain(const Algebra<K>& a, const Bimodule<K>& m, std::size_t n_max,
                                     const Limits& limits) {
  BarDifferential<K> b(a, m);
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= n_max + 1; ++n) {
    const std::uint64_t dim = ipow(a.dim(), n) * m.dim();
    check_size(dim, limits, "Hochschild cochains of degree " + std::to_string(n));
    dims.push_back(dim);
  }
  std::vector<SparseMatrix<K>> diffs;
  for (std::size_t n = 0; n <= n_max; ++n) diffs.push_back(bar_differential_matrix(b, n, limits));
  return {std::move(dims), std::move(diffs)};
}

template <class K>
DimTable hh_dims(const Algebra<K>& a, const Bimodule<K>& m, std::size_t n_max, const Limits& limits) {
  auto c = hochschild_cochain(a, m, n_max, limits);
  return {"HH^*(" + a.name() + ")", c.cohomology_dims(n_max)};
}

template <class K>
SparseMatrix<K> hochschild_boundary(const Algebra<K>& a, std::size_t n) {
  const std::size_t d = a.dim();
  const std::uint64_t ncols = ipow(d, n + 1), nrows = ipow(d, n);
  if (n == 0) return SparseMatrix<K>(0, ncols);
  const K minus_one = -a.one();
  std::vector<SparseVector<K>> cols(ncols);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t jj = 0; jj < static_cast<std::int64_t>(ncols); ++jj) {
    const auto j = static_cast<std::uint64_t>(jj);
    std::vector<std::uint32_t> x(n + 1);
    for (std::size_t i = 0, rest = j; i <= n; ++i) x[n - i] = static_cast<std::uint32_t>(rest % d), rest /= d;
    auto& col = cols[j];
    auto index = [&](const std::vector<std::uint32_t>& y) {
      std::uint64_t r = 0;
      for (auto v : y) r = r * d + v;
      return r;
    };
    std::vector<std::uint32_t> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& e : a.product(x[i], x[i + 1])) {
        for (std::size_t s = 0, w = 0; s <= n; ++s) {
          if (s == i + 1) continue;
          y[w++] = s == i ? e.index : x[s];
        }
        col.push_back({static_cast<std::uint32_t>(index(y)), i % 2 ? minus_one * e.value : e.value});
      }
    }
    for (auto& e : a.product(x[n], x[0])) {
      y[0] = e.index;
      for (std::size_t s = 1; s < n; ++s) y[s] = x[s];
      col.push_back({static_cast<std::uint32_t>(index(y)), n % 2 ? minus_one * e.value : e.value});
    }
  }
  return SparseMatrix<K>::from_columns(nrows, std::move(cols));
}

template <class K>
DimTable hochschild_homology_dims(const Algebra<K>& a, std::size_t n_max, const Limits& limits) {
  check_size(ipow(a.dim(), n_max + 2), limits, "Hochschild chains of degree " + std::to_string(n_max + 1));
  std::vector<std::size_t> r(n_max + 2);
  for (std::size_t n = 1; n <= n_max + 1; ++n) r[n] = rank(hochschild_boundary(a, n));
  std::vector<std::size_t> h(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) h[n] = ipow(a.dim(), n + 1) - r[n] - r[n + 1];
  return {"HH_*(" + a.name() + ")", h};
}

template <class K>
DimTable twisted_hh_dims(const Algebra<K>& a, const AlgebraMorphism<K>& rho, std::size_t p, std::size_t n_max,
                         const Limits& limits) {
  if (p == 0) throw std::invalid_argument("twist exponent index starts at 1");
  auto tw = rho.power(static_cast<long long>(p) - 1);
  auto m = twisted_bimodule(a, AlgebraMorphism<K>::identity(a), tw);
  auto t = hh_dims(a, m, n_max, limits);
  t.label = "HH^*(" + a.name() + ", " + a.name() + "^{rho^" + std::to_string(p - 1) + "})";
  return t;
}

template <class K>
SparseMatrix<K> conjugation_action(const DenseMatrix<K>& outer, const DenseMatrix<K>& inner, std::size_t k,
                                   const FieldSpec& f) {
  const auto in_t = SparseMatrix<K>::from_dense(inner.transpose());
  auto acc = SparseMatrix<K>::identity(1, f);
  for (std::size_t i = 0; i < k; ++i) acc = kronecker(acc, in_t);
  return kronecker(acc, SparseMatrix<K>::from_dense(outer));
}

#define HH_INSTANTIATE(K)                                                                                        \
  template class CochainComplex<K>;                                                                              \
  template class BarDifferential<K>;                                                                             \
  template SparseMatrix<K> restricted_bar_differential(const BarDifferential<K>&, std::size_t,                   \
                                                       const IndexSet&, const IndexSet&, bool);            \
  template SparseMatrix<K> bar_differential_matrix(const BarDifferential<K>&, std::size_t, const Limits&);       \
  template CochainComplex<K> hochschild_cochain(const Algebra<K>&, const Bimodule<K>&, std::size_t,              \
                                                const Limits&);                                                  \
  template DimTable hh_dims(const Algebra<K>&, const Bimodule<K>&, std::size_t, const Limits&);                  \
  template SparseMatrix<K> hochschild_boundary(const Algebra<K>&, std::size_t);                                  \
  template DimTable hochschild_homology_dims(const Algebra<K>&, std::size_t, const Limits&);                     \
  template DimTable twisted_hh_dims(const Algebra<K>&, const AlgebraMorphism<K>&, std::size_t, std::size_t,      \
                                    const Limits&);                                                              \
  template SparseMatrix<K> conjugation_action(const DenseMatrix<K>&, const DenseMatrix<K>&, std::size_t,         \
                                              const FieldSpec&);

HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh

#include "hh/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hh {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

template <class K>
void check_single_field(const SparseMatrix<K>& m) {
  if constexpr (std::is_same_v<K, Fp>) {
    std::uint32_t p = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (const Fp& v : m.col_values(j)) {
        if (p == 0) p = v.modulus();
        else if (v.modulus() != p) throw FieldError("mixed-field entries in matrix");
      }
  }
}

// Rows of the block in the orientation with more vectors than coordinates.
template <class K>
struct BlockSystem {
  std::vector<SparseVector<K>> vectors;
  std::size_t width = 0;
};

template <class K>
std::vector<BlockSystem<K>> split_blocks(const SparseMatrix<K>& m, const std::vector<Block>& blocks) {
  std::vector<std::int32_t> col_block(m.cols(), -1), row_block(m.rows(), -1);
  std::vector<std::uint32_t> col_local(m.cols()), row_local(m.rows());
  std::vector<BlockSystem<K>> sys(blocks.size());
  std::vector<std::uint8_t> by_rows(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < blocks[b].cols.size(); ++i)
      col_block[blocks[b].cols[i]] = static_cast<std::int32_t>(b), col_local[blocks[b].cols[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < blocks[b].rows.size(); ++i)
      row_block[blocks[b].rows[i]] = static_cast<std::int32_t>(b), row_local[blocks[b].rows[i]] = static_cast<std::uint32_t>(i);
    by_rows[b] = blocks[b].rows.size() >= blocks[b].cols.size();
    if (by_rows[b]) sys[b].vectors.resize(blocks[b].rows.size()), sys[b].width = blocks[b].cols.size();
    else sys[b].vectors.resize(blocks[b].cols.size()), sys[b].width = blocks[b].rows.size();
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (col_block[j] < 0) continue;
    const auto b = static_cast<std::size_t>(col_block[j]);
    auto r = m.col_rows(j);
    auto v = m.col_values(j);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (by_rows[b]) sys[b].vectors[row_local[r[k]]].push_back({col_local[j], v[k]});
      else sys[b].vectors[col_local[j]].push_back({row_local[r[k]], v[k]});
    }
  }
  // Column-major traversal leaves row vectors sorted; column vectors are sorted by construction.
  return sys;
}

std::vector<std::uint32_t> random_primes(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> out;
  while (out.size() < count) {
    auto c = static_cast<std::uint32_t>((rng() % (1u << 29)) + (1u << 29));
    if (is_prime(c)) out.push_back(c);
  }
  return out;
}

std::optional<SparseMatrix<Fp>> reduce_mod(const SparseMatrix<Rational>& m, std::uint32_t p) {
  std::vector<SparseVector<Fp>> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto r = m.col_rows(j);
    auto v = m.col_values(j);
    for (std::size_t k = 0; k < r.size(); ++k) {
      mpz_class num = v[k].value().get_num() % p, den = v[k].value().get_den() % p;
      if (den == 0) return std::nullopt;
      if (num < 0) num += p;
      cols[j].push_back({r[k], Fp(static_cast<std::uint32_t>(num.get_ui()), p) /
                                   Fp(static_cast<std::uint32_t>(den.get_ui()), p)});
    }
  }
  return SparseMatrix<Fp>::from_columns(m.rows(), std::move(cols));
}

template <class K>
void certify_rank(const SparseMatrix<K>& m, std::size_t r, const RankOptions& opt) {
  if constexpr (std::is_same_v<K, Rational>) {
    RankOptions inner = opt;
    inner.certify = false;
    std::size_t agreed = 0;
    for (std::uint32_t p : random_primes(opt.seed, 8)) {
      auto mp = reduce_mod(m, p);
      if (!mp) continue;
      if (rank(*mp, inner) != r) throw std::logic_error("rank certification failed modulo " + std::to_string(p));
      if (++agreed == 2) return;
    }
  }
}

}  // namespace

template <class K>
std::vector<Block> components(const SparseMatrix<K>& m) {
  const std::size_t R = m.rows(), C = m.cols();
  UnionFind uf(R + C);
  for (std::size_t j = 0; j < C; ++j)
    for (auto r : m.col_rows(j)) uf.unite(static_cast<std::uint32_t>(R + j), r);
  std::vector<std::int64_t> id(R + C, -1);
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < C; ++j) {
    if (m.col_rows(j).empty()) continue;
    auto root = uf.find(static_cast<std::uint32_t>(R + j));
    if (id[root] < 0) id[root] = static_cast<std::int64_t>(blocks.size()), blocks.emplace_back();
    blocks[static_cast<std::size_t>(id[root])].cols.push_back(static_cast<std::uint32_t>(j));
  }
  for (std::size_t i = 0; i < R; ++i) {
    auto root = uf.find(static_cast<std::uint32_t>(i));
    if (id[root] >= 0) blocks[static_cast<std::size_t>(id[root])].rows.push_back(static_cast<std::uint32_t>(i));
  }
  return blocks;
}

template <class K>
std::size_t rank(const SparseMatrix<K>& m, const RankOptions& opt) {
  if (m.nnz() == 0) return 0;
  check_single_field(m);
  const auto blocks = components(m);
  auto sys = split_blocks(m, blocks);
  std::vector<std::size_t> order(sys.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sys[a].vectors.size() * sys[a].width > sys[b].vectors.size() * sys[b].width;
  });
  std::size_t total = 0;
  const long long nb = static_cast<long long>(order.size());
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (long long t = 0; t < nb; ++t) {
    auto& s = sys[order[static_cast<std::size_t>(t)]];
    total += sparse_rank(std::move(s.vectors), s.width, opt);
  }
  if (opt.certify) certify_rank(m, total, opt);
  return total;
}

template <class K>
std::size_t rank_reference(const SparseMatrix<K>& m, const RankOptions& opt) {
  if (m.nnz() == 0) return 0;
  check_single_field(m);
  std::vector<SparseVector<K>> vectors;
  std::size_t width;
  if (m.rows() >= m.cols()) {
    auto t = m.transpose();
    vectors.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) vectors[i] = t.column(i);
    width = m.cols();
  } else {
    vectors.resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) vectors[j] = m.column(j);
    width = m.rows();
  }
  return sparse_rank(std::move(vectors), width, opt);
}

template <class K>
Rref<K> rref(DenseMatrix<K> m) {
  Rref<K> out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const K inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) = m.at(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const K f = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m.at(r, j).is_zero()) m.at(i, j) -= f * m.at(r, j);
    }
    out.pivots.push_back(static_cast<std::uint32_t>(c));
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class K>
Subspace<K> kernel(const SparseMatrix<K>& m, const FieldSpec& field) {
  check_single_field(m);
  std::vector<std::pair<std::uint32_t, SparseVector<K>>> vecs;
  const K one = K::from_int(field, 1);
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m.col_rows(j).empty()) vecs.push_back({static_cast<std::uint32_t>(j), {}});
  const auto blocks = components(m);
  std::vector<std::vector<std::pair<std::uint32_t, SparseVector<K>>>> per_block(blocks.size());
  const long long nb = static_cast<long long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long bb = 0; bb < nb; ++bb) {
    const Block& b = blocks[static_cast<std::size_t>(bb)];
    std::vector<std::int64_t> local(m.rows(), -1);
    for (std::size_t i = 0; i < b.rows.size(); ++i) local[b.rows[i]] = static_cast<std::int64_t>(i);
    DenseMatrix<K> d(b.rows.size(), b.cols.size());
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
      auto r = m.col_rows(b.cols[c]);
      auto v = m.col_values(b.cols[c]);
      for (std::size_t k = 0; k < r.size(); ++k) d.at(static_cast<std::size_t>(local[r[k]]), c) = v[k];
    }
    auto rr = rref(std::move(d));
    std::vector<std::uint8_t> is_pivot(b.cols.size(), 0);
    for (auto p : rr.pivots) is_pivot[p] = 1;
    for (std::size_t f = 0; f < b.cols.size(); ++f) {
      if (is_pivot[f]) continue;
      SparseVector<K> v;
      for (std::size_t i = 0; i < rr.pivots.size(); ++i)
        if (!rr.reduced.at(i, f).is_zero()) v.push_back({b.cols[rr.pivots[i]], -rr.reduced.at(i, f)});
      per_block[static_cast<std::size_t>(bb)].push_back({b.cols[f], std::move(v)});
    }
  }
  for (auto& pb : per_block)
    for (auto& e : pb) vecs.push_back(std::move(e));
  std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Subspace<K> out;
  std::vector<SparseVector<K>> cols;
  for (auto& [f, v] : vecs) {
    v.push_back({f, one});
    out.coordinates.push_back(f);
    cols.push_back(std::move(v));
  }
  out.basis = SparseMatrix<K>::from_columns(m.cols(), std::move(cols));
  return out;
}

template <class K>
std::vector<std::vector<K>> kernel_basis(const SparseMatrix<K>& m, const FieldSpec& field) {
  auto k = kernel(m, field);
  std::vector<std::vector<K>> out;
  auto dense = k.basis.to_dense();
  for (std::size_t j = 0; j < k.dim(); ++j) out.push_back(dense.column(j));
  return out;
}

template <class K>
std::optional<std::vector<K>> solve(const SparseMatrix<K>& m, const std::vector<K>& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: shape mismatch");
  DenseMatrix<K> aug(m.rows(), m.cols() + 1);
  auto d = m.to_dense();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = d.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto rr = rref(std::move(aug));
  std::vector<K> x(m.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == m.cols()) return std::nullopt;
    x[rr.pivots[i]] = rr.reduced.at(i, m.cols());
  }
  return x;
}

template <class K>
DenseMatrix<K> inverse(const DenseMatrix<K>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse: not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  // Field of the matrix: take it from any nonzero entry.
  K one{};
  for (std::size_t i = 0; i < n && one.is_zero(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m.at(i, j).is_zero()) { one = m.at(i, j) * m.at(i, j).inverse(); break; }
  if (one.is_zero()) throw std::domain_error("inverse: singular matrix");
  DenseMatrix<K> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = one;
  }
  auto rr = rref(std::move(aug));
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  DenseMatrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

template <class K>
std::size_t cohomology_dim(const SparseMatrix<K>& d_in, const SparseMatrix<K>& d_out, const RankOptions& opt) {
  if (d_out.cols() != d_in.rows()) throw ShapeError("cohomology_dim: shapes do not compose");
  if (!(d_out * d_in).is_zero()) throw ComplexNotExactlyComposable("d_out * d_in is nonzero");
  return d_out.cols() - rank(d_out, opt) - rank(d_in, opt);
}

#define HH_INSTANTIATE(K)                                                                                    \
  template std::vector<Block> components<K>(const SparseMatrix<K>&);                                        \
  template std::size_t rank<K>(const SparseMatrix<K>&, const RankOptions&);                                  \
  template std::size_t rank_reference<K>(const SparseMatrix<K>&, const RankOptions&);                        \
  template Rref<K> rref<K>(DenseMatrix<K>);                                                                  \
  template Subspace<K> kernel<K>(const SparseMatrix<K>&, const FieldSpec&);                                                    \
  template std::vector<std::vector<K>> kernel_basis<K>(const SparseMatrix<K>&, const FieldSpec&);                              \
  template std::optional<std::vector<K>> solve<K>(const SparseMatrix<K>&, const std::vector<K>&);            \
  template DenseMatrix<K> inverse<K>(const DenseMatrix<K>&);                                                 \
  template std::size_t cohomology_dim<K>(const SparseMatrix<K>&, const SparseMatrix<K>&, const RankOptions&);
HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh

// Ext over A^e from a resolution by free modules (A (x) A)^r. Each step picks
// generators of the current syzygy, maps the free module onto it and passes
// to the kernel. Generators are unit vectors of the syzygy's own coordinates,
// so the images of the next generators are kernel basis columns.
#include <algorithm>

#include "hh/hochschild.hpp"

namespace hh {

namespace {

template <class K>
SparseVector<K> apply_sparse(const SparseMatrix<K>& m, const SparseVector<K>& v) {
  SparseVector<K> out;
  for (auto& e : v) {
    auto rows = m.col_rows(e.index);
    auto vals = m.col_values(e.index);
    for (std::size_t i = 0; i < rows.size(); ++i) out.push_back({rows[i], e.value * vals[i]});
  }
  normalize(out);
  return out;
}

template <class K>
SparseVector<K> unit(std::uint32_t i, const FieldSpec& f) {
  return {{i, K::from_int(f, 1)}};
}

// Minimal generators by Nakayama: a complement of rad(A) M + M rad(A).
template <class K>
std::vector<std::uint32_t> top_generators(const Bimodule<K>& m, const SparseMatrix<K>& rad) {
  const FieldSpec& f = m.algebra().field();
  std::vector<SparseVector<K>> span;
  for (std::size_t r = 0; r < rad.cols(); ++r) {
    auto rv = rad.column(r);
    std::vector<K> dense(m.algebra().dim(), m.algebra().zero());
    for (auto& e : rv) dense[e.index] = e.value;
    auto l = m.left_by(dense), rt = m.right_by(dense);
    for (std::size_t j = 0; j < m.dim(); ++j) {
      span.push_back(l.column(j));
      span.push_back(rt.column(j));
    }
  }
  // Non-pivot coordinates of the span's echelon form are the free coordinates
  // of the kernel of the transposed spanning matrix.
  auto jt = SparseMatrix<K>::from_columns(m.dim(), std::move(span)).transpose();
  return kernel(jt, f).coordinates;
}

// Greedy cover used when the radical is not available.
template <class K>
std::vector<std::uint32_t> greedy_generators(const Bimodule<K>& m) {
  const FieldSpec& f = m.algebra().field();
  const std::size_t d = m.algebra().dim(), n = m.dim();
  std::vector<std::vector<K>> rows;
  std::vector<std::uint32_t> pivots;
  auto insert = [&](SparseVector<K> v) {
    std::vector<K> x(n, K::from_int(f, 0));
    for (auto& e : v) x[e.index] = e.value;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (x[pivots[r]].is_zero()) continue;
      const K c = x[pivots[r]];
      for (std::size_t j = 0; j < n; ++j)
        if (!rows[r][j].is_zero()) x[j] -= c * rows[r][j];
    }
    auto it = std::find_if(x.begin(), x.end(), [](const K& v) { return !v.is_zero(); });
    if (it == x.end()) return false;
    const auto p = static_cast<std::uint32_t>(it - x.begin());
    const K inv = x[p].inverse();
    for (auto& v : x) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][p].is_zero()) continue;
      const K c = rows[r][p];
      for (std::size_t j = 0; j < n; ++j) rows[r][j] -= c * x[j];
    }
    rows.push_back(std::move(x));
    pivots.push_back(p);
    return true;
  };
  std::vector<std::uint32_t> gens;
  for (std::uint32_t c = 0; c < n && rows.size() < n; ++c) {
    if (!insert(unit<K>(c, f))) continue;
    gens.push_back(c);
    for (std::size_t b = 0; b < d; ++b) {
      auto rb = apply_sparse(m.right(b), unit<K>(c, f));
      for (std::size_t a = 0; a < d; ++a) insert(apply_sparse(m.left(a), rb));
    }
  }
  return gens;
}

template <class K>
SparseMatrix<K> free_action(std::size_t r, const SparseMatrix<K>& act, const SparseMatrix<K>& other,
                            const FieldSpec& f, bool on_left) {
  auto id = SparseMatrix<K>::identity(r, f);
  return on_left ? kronecker(id, kronecker(act, other)) : kronecker(id, kronecker(other, act));
}

}  // namespace

template <class K>
std::optional<SparseMatrix<K>> trace_form_radical(const Algebra<K>& a) {
  const std::size_t d = a.dim();
  std::vector<K> tr(d, a.zero());
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) tr[k] += a.left_mult(k).at(i, i);
  std::vector<Triplet<K>> t;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      K s = a.zero();
      for (auto& e : a.product(i, j)) s += e.value * tr[e.index];
      if (!s.is_zero()) t.push_back({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i), s});
    }
  auto gram_t = SparseMatrix<K>::from_triplets(d, d, std::move(t));
  auto rad = kernel(gram_t, a.field()).basis;
  // The trace radical always contains rad(A); it equals it when nilpotent.
  std::vector<SparseVector<K>> power;
  for (std::size_t j = 0; j < rad.cols(); ++j) power.push_back(rad.column(j));
  for (std::size_t step = 0; step <= d && !power.empty(); ++step) {
    std::vector<SparseVector<K>> next;
    for (auto& x : power)
      for (std::size_t j = 0; j < rad.cols(); ++j) {
        SparseVector<K> prod;
        for (auto& ex : x)
          for (auto& ey : rad.column(j))
            for (auto& e : a.product(ex.index, ey.index)) prod.push_back({e.index, ex.value * ey.value * e.value});
        normalize(prod);
        if (!prod.empty()) next.push_back(std::move(prod));
      }
    if (next.empty()) return rad;
    // Keep a basis of the span.
    auto m = SparseMatrix<K>::from_columns(d, std::move(next));
    auto dm = rref(m.transpose().to_dense());
    power.clear();
    for (std::size_t r = 0; r < dm.pivots.size(); ++r) {
      SparseVector<K> v;
      for (std::size_t c = 0; c < d; ++c)
        if (!dm.reduced.at(r, c).is_zero()) v.push_back({static_cast<std::uint32_t>(c), dm.reduced.at(r, c)});
      power.push_back(std::move(v));
    }
  }
  if (power.empty()) return rad;
  return std::nullopt;
}

template <class K>
DimTable ext_bimodule_dims(const Bimodule<K>& m, const Bimodule<K>& n, std::size_t n_max, const Limits& limits) {
  const Algebra<K>& a = m.algebra();
  const FieldSpec& f = a.field();
  const std::size_t d = a.dim(), d2 = d * d;
  const auto rad = trace_form_radical(a);
  auto generators = [&](const Bimodule<K>& cur) { return rad ? top_generators(cur, *rad) : greedy_generators(cur); };

  // images[i][j]: image in P_{i-1} of generator j of P_i (i >= 1).
  std::vector<std::size_t> ranks;
  std::vector<std::vector<SparseVector<K>>> images(n_max + 2);
  Bimodule<K> cur = m;
  Subspace<K> prev_kernel;
  for (std::size_t i = 0; i <= n_max + 1; ++i) {
    auto gens = generators(cur);
    ranks.push_back(gens.size());
    if (i > 0)
      for (auto g : gens) images[i].push_back(prev_kernel.basis.column(g));
    if (i == n_max + 1) break;
    const std::size_t pdim = gens.size() * d2;
    check_size(pdim, limits, "free module in degree " + std::to_string(i));
    std::vector<SparseVector<K>> cols(pdim);
    for (std::size_t l = 0; l < gens.size(); ++l)
      for (std::size_t b = 0; b < d; ++b) {
        auto rb = apply_sparse(cur.right(b), unit<K>(gens[l], f));
        for (std::size_t aa = 0; aa < d; ++aa) cols[l * d2 + aa * d + b] = apply_sparse(cur.left(aa), rb);
      }
    auto pi = SparseMatrix<K>::from_columns(cur.dim(), std::move(cols));
    prev_kernel = kernel(pi, f);
    std::vector<SparseMatrix<K>> left, right;
    const auto id_d = SparseMatrix<K>::identity(d, f);
    for (std::size_t x = 0; x < d; ++x) {
      auto lp = free_action(gens.size(), a.left_mult(x), id_d, f, true);
      auto rp = free_action(gens.size(), a.right_mult(x), id_d, f, false);
      left.push_back((lp * prev_kernel.basis).select_rows(prev_kernel.coordinates));
      right.push_back((rp * prev_kernel.basis).select_rows(prev_kernel.coordinates));
    }
    cur = Bimodule<K>(a, prev_kernel.dim(), std::move(left), std::move(right));
  }

  // Hom_{A^e}(P_i, N) = N^{r_i}; d^i(phi)_j = sum z[l,a,b] a phi_l b.
  const std::size_t nd = n.dim();
  std::vector<SparseMatrix<K>> lr(d2);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) lr[x * d + y] = n.left(x) * n.right(y);
  std::vector<std::size_t> rk(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) {
    std::vector<Triplet<K>> t;
    for (std::size_t j = 0; j < images[i + 1].size(); ++j)
      for (auto& e : images[i + 1][j]) {
        const std::size_t l = e.index / d2, ab = e.index % d2;
        for (auto& tr : lr[ab].triplets())
          t.push_back({static_cast<std::uint32_t>(j * nd + tr.row), static_cast<std::uint32_t>(l * nd + tr.col),
                       e.value * tr.value});
      }
    auto dm = SparseMatrix<K>::from_triplets(ranks[i + 1] * nd, ranks[i] * nd, std::move(t));
    rk[i] = rank(dm);
  }
  std::vector<std::size_t> dims(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) dims[i] = ranks[i] * nd - rk[i] - (i > 0 ? rk[i - 1] : 0);
  return {"Ext_{A^e}", dims};
}

#define HH_INSTANTIATE(K)                                                                                         \
  template std::optional<SparseMatrix<K>> trace_form_radical(const Algebra<K>&);                                  \
  template DimTable ext_bimodule_dims(const Bimodule<K>&, const Bimodule<K>&, std::size_t, const Limits&);

HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh

#include "hh/split_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace hh {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class K>
SplitAlgebra<K> make_split(const Algebra<K>& a, const Bimodule<K>& m) {
  return {a, m, split_algebra(a, m)};
}

template <class K>
SplitAlgebra<K> trivial_split(const Algebra<K>& a) {
  return {a, dual_bimodule(a), trivial_extension(a)};
}

template <class K>
std::vector<std::uint64_t> split_tensors(const SplitAlgebra<K>& s, std::size_t n, long p) {
  std::vector<std::uint64_t> out;
  if (p < 0 || static_cast<std::size_t>(p) > n) return out;
  const std::uint64_t d = s.d(), de = s.de();
  out.reserve(binomial(n, p) * ipow(d, n - p) * ipow(s.md(), p));
  // Depth-first in increasing digit order yields sorted output.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left, std::uint64_t prefix) -> void {
    if (pos == n) {
      out.push_back(prefix);
      return;
    }
    const std::size_t slots_after = n - pos - 1;
    if (slots_after >= left)
      for (std::uint64_t x = 0; x < d; ++x) self(self, pos + 1, left, prefix * de + x);
    if (left > 0)
      for (std::uint64_t x = d; x < de; ++x) self(self, pos + 1, left - 1, prefix * de + x);
  };
  rec(rec, 0, static_cast<std::size_t>(p), 0);
  return out;
}

namespace {

// {t * base + o : t in tensors, lo <= o < hi}, sorted when tensors are.
std::vector<std::uint64_t> cochain_run(const std::vector<std::uint64_t>& tensors, std::uint64_t base,
                                       std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  out.reserve(tensors.size() * (hi - lo));
  for (auto t : tensors)
    for (std::uint64_t o = lo; o < hi; ++o) out.push_back(t * base + o);
  return out;
}

// An A-bimodule seen over E through the projection E -> A.
template <class K>
Bimodule<K> through_projection(const SplitAlgebra<K>& s, const Bimodule<K>& over_a) {
  std::vector<SparseMatrix<K>> left, right;
  for (std::size_t i = 0; i < s.de(); ++i) {
    left.push_back(i < s.d() ? over_a.left(i) : SparseMatrix<K>(over_a.dim(), over_a.dim()));
    right.push_back(i < s.d() ? over_a.right(i) : SparseMatrix<K>(over_a.dim(), over_a.dim()));
  }
  return Bimodule<K>(s.e, over_a.dim(), std::move(left), std::move(right));
}

template <class K>
K sign(const FieldSpec& f, std::size_t e) {
  return K::from_int(f, e % 2 == 0 ? 1 : -1);
}

std::uint32_t narrow(std::int64_t r) {
  if (r < 0) throw std::logic_error("index outside the target space");
  return static_cast<std::uint32_t>(r);
}

template <class K>
std::uint64_t count_B(const SplitAlgebra<K>& s, std::size_t n, long p) {
  if (p < 0 || static_cast<std::size_t>(p) > n) return 0;
  const auto q = static_cast<std::size_t>(p);
  return binomial(n, q) * ipow(s.d(), n - q) * ipow(s.md(), q);
}

std::size_t pos_in(const std::vector<std::uint64_t>& sorted, std::uint64_t x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) throw std::logic_error("tensor outside the expected basis");
  return static_cast<std::size_t>(it - sorted.begin());
}

template <class K>
std::size_t kernel_dim(const SparseMatrix<K>& m) {
  return m.cols() - rank(m);
}

}  // namespace

template <class K>
CochainComplex<K> build_X(const SplitAlgebra<K>& s, long p, std::size_t top, const Limits& limits) {
  const std::uint64_t d = s.d(), de = s.de();
  BarDifferential<K> b(s.e, Bimodule<K>::regular(s.e));
  std::vector<IndexSet> spaces;
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::uint64_t dim = count_B(s, n, p - 1) * d + count_B(s, n, p) * s.md();
    check_size(dim, limits, "X_(" + std::to_string(p) + ") in degree " + std::to_string(n));
    IndexSet set;
    set.add_run(cochain_run(split_tensors(s, n, p - 1), de, 0, d));
    set.add_run(cochain_run(split_tensors(s, n, p), de, d, de));
    dims.push_back(set.size());
    spaces.push_back(std::move(set));
  }
  std::vector<SparseMatrix<K>> diffs;
  for (std::size_t n = 0; n < top; ++n) diffs.push_back(restricted_bar_differential(b, n, spaces[n], spaces[n + 1]));
  return {std::move(dims), std::move(diffs)};
}

template <class K>
CochainComplex<K> DoubleComplex<K>::total() const {
  const std::size_t t = std::min(col0.top(), col1.top() + 1);
  std::vector<std::size_t> dims;
  for (std::size_t n = 0; n <= t; ++n) dims.push_back(col0.dim(n) + (n > 0 ? col1.dim(n - 1) : 0));
  std::vector<SparseMatrix<K>> diffs;
  for (std::size_t n = 0; n < t; ++n)
    diffs.push_back(block_matrix<K>(col0.dim(n + 1), col1.dim(n), col0.dim(n), n > 0 ? col1.dim(n - 1) : 0,
                                    &col0.d(n), nullptr, &delta.at(n), n > 0 ? &col1.d(n - 1) : nullptr));
  return {std::move(dims), std::move(diffs)};
}

template <class K>
std::vector<bool> DoubleComplex<K>::delta_anticommutes() const {
  std::vector<bool> out;
  for (std::size_t n = 0; n + 1 < delta.size() && n < col0.top() && n < col1.top(); ++n)
    out.push_back((delta[n + 1] * col0.d(n) + col1.d(n) * delta[n]).is_zero());
  return out;
}

template <class K>
DoubleComplex<K> build_double_X(const SplitAlgebra<K>& s, long p, std::size_t top0, std::size_t top1,
                                 const Limits& limits) {
  if (p < 1) throw std::invalid_argument("the double complex needs p >= 1");
  const std::uint64_t d = s.d(), md = s.md(), de = s.de();
  const FieldSpec& f = s.a.field();

  BarDifferential<K> b0(s.e, through_projection(s, Bimodule<K>::regular(s.a)));
  std::vector<IndexSet> c0;
  std::vector<std::size_t> dims0;
  for (std::size_t n = 0; n <= top0; ++n) {
    auto ts = split_tensors(s, n, p - 1);
    check_size(ts.size() * d, limits, "column 0 in degree " + std::to_string(n));
    c0.emplace_back(cochain_run(ts, d, 0, d));
    dims0.push_back(c0.back().size());
  }
  std::vector<SparseMatrix<K>> diffs0;
  for (std::size_t n = 0; n < top0; ++n) diffs0.push_back(restricted_bar_differential(b0, n, c0[n], c0[n + 1]));

  BarDifferential<K> b1(s.e, through_projection(s, s.m));
  std::vector<IndexSet> c1;
  std::vector<std::size_t> dims1;
  for (std::size_t r = 0; r <= top1; ++r) {
    auto ts = split_tensors(s, r + 1, p);
    check_size(ts.size() * md, limits, "column 1 in degree " + std::to_string(r));
    c1.emplace_back(cochain_run(ts, md, 0, md));
    dims1.push_back(c1.back().size());
  }
  std::vector<SparseMatrix<K>> diffs1;
  for (std::size_t r = 0; r < top1; ++r) diffs1.push_back(restricted_bar_differential(b1, r + 1, c1[r], c1[r + 1]));

  // delta(f)(x_1..x_{n+1}) = x_1 f(x_2..) + (-1)^{n+1} f(..x_n) x_{n+1} with x_1, x_{n+1} in M.
  std::vector<SparseMatrix<K>> delta;
  for (std::size_t n = 0; n <= std::min(top0, top1); ++n) {
    const std::uint64_t dn = ipow(de, n);
    const K sg = sign<K>(f, n + 1);
    std::vector<SparseVector<K>> cols(c0[n].size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const std::uint64_t t = c0[n][j] / d;
      const auto o = static_cast<std::size_t>(c0[n][j] % d);
      auto& col = cols[j];
      for (std::uint64_t m = 0; m < md; ++m) {
        const auto r = s.m.right(o).col_rows(m);
        const auto rv = s.m.right(o).col_values(m);
        for (std::size_t k = 0; k < r.size(); ++k)
          col.push_back({narrow(c1[n].find((((d + m) * dn + t) * md) + r[k])), rv[k]});
        const auto l = s.m.left(o).col_rows(m);
        const auto lv = s.m.left(o).col_values(m);
        for (std::size_t k = 0; k < l.size(); ++k)
          col.push_back({narrow(c1[n].find((t * de + d + m) * md + l[k])), sg * lv[k]});
      }
      normalize(col);
    }
    delta.push_back(SparseMatrix<K>::from_columns(c1[n].size(), std::move(cols)));
  }
  return {{std::move(dims0), std::move(diffs0)}, {std::move(dims1), std::move(diffs1)}, std::move(delta)};
}

template <class K>
TensorPower<K> tensor_power(const Bimodule<K>& m, std::size_t p) {
  const FieldSpec& f = m.algebra().field();
  if (p == 0) return {Bimodule<K>::regular(m.algebra()), SparseMatrix<K>::identity(1, f), SparseMatrix<K>::identity(1, f)};
  const auto id = SparseMatrix<K>::identity(m.dim(), f);
  TensorPower<K> cur{m, id, id};
  for (std::size_t k = 1; k < p; ++k) {
    auto tq = tensor_over_A(cur.module, m);
    cur.projection = tq.quotient.projection * kronecker(cur.projection, id);
    cur.section = kronecker(cur.section, id) * tq.quotient.section;
    cur.module = std::move(tq.module);
  }
  return cur;
}

template <class K>
bool Resolution<K>::composes_to_zero() const {
  if (b.size() > 1 && !(mu * b[1]).is_zero()) return false;
  for (std::size_t n = 1; n + 1 < b.size(); ++n)
    if (!(b[n] * b[n + 1]).is_zero()) return false;
  return true;
}

template <class K>
std::vector<std::size_t> Resolution<K>::homology_dims() const {
  const std::size_t top = dims.size() - 1;
  std::vector<std::size_t> r(top + 2, 0);
  r[0] = rank(mu);
  for (std::size_t n = 1; n <= top; ++n) r[n] = rank(b[n]);
  std::vector<std::size_t> h;
  for (std::size_t n = 0; n < top; ++n) h.push_back(dims[n] - r[n] - r[n + 1]);
  return h;
}

template <class K>
std::size_t Resolution<K>::coker_mu() const {
  return mu.rows() - rank(mu);
}

template <class K>
Resolution<K> build_resolution(const SplitAlgebra<K>& s, std::size_t p, std::size_t top, const Limits& limits) {
  if (p < 1) throw std::invalid_argument("the resolution needs p >= 1");
  const std::uint64_t d = s.d(), md = s.md(), de = s.de();
  const FieldSpec& f = s.a.field();
  std::vector<std::vector<std::uint64_t>> tensors;
  Resolution<K> res;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::uint64_t dim = count_B(s, n + p, static_cast<long>(p)) * d * d;
    check_size(dim, limits, "resolution term in degree " + std::to_string(n));
    tensors.push_back(split_tensors(s, n + p, static_cast<long>(p)));
    res.dims.push_back(tensors.back().size() * d * d);
  }

  res.b.emplace_back();
  for (std::size_t n = 1; n <= top; ++n) {
    const std::size_t big = n + p;
    const auto& src = tensors[n];
    const auto& dst = tensors[n - 1];
    const std::uint64_t nb = src.size(), nd = dst.size();
    std::vector<SparseVector<K>> cols(res.dims[n]);
    const std::uint64_t top_pow = ipow(de, big - 1);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t jj = 0; jj < static_cast<std::int64_t>(cols.size()); ++jj) {
      const auto j = static_cast<std::uint64_t>(jj);
      const std::uint64_t x0 = j / (nb * d), t = src[(j / d) % nb], xl = j % d;
      auto& col = cols[j];
      auto put = [&](std::uint64_t a, std::uint64_t tt, std::uint64_t b, const K& v) {
        col.push_back({static_cast<std::uint32_t>((a * nd + pos_in(dst, tt)) * d + b), v});
      };
      const std::uint64_t first = t / top_pow;
      if (first < d)
        for (auto& e : s.a.product(x0, first)) put(e.index, t % top_pow, xl, e.value);
      for (std::size_t i = 1; i < big; ++i) {
        const std::uint64_t low = ipow(de, big - i - 1);
        const std::uint64_t xi = (t / (low * de)) % de, xn = (t / low) % de;
        const std::uint64_t hi = t / (low * de * de), lo = t % low;
        const K sg = sign<K>(f, i);
        for (auto& e : s.e.product(xi, xn)) put(x0, (hi * de + e.index) * low + lo, xl, sg * e.value);
      }
      const std::uint64_t last = t % de;
      if (last < d) {
        const K sg = sign<K>(f, big);
        for (auto& e : s.a.product(last, xl)) put(x0, t / de, e.index, sg * e.value);
      }
      normalize(col);
    }
    res.b.push_back(SparseMatrix<K>::from_columns(res.dims[n - 1], std::move(cols)));
  }

  // mu(a (x) m_1..m_p (x) a') = a m_1 (x)_A m_2 .. (x)_A m_p a'.
  auto tp = tensor_power(s.m, p);
  const auto& src = tensors[0];
  const std::uint64_t mp1 = ipow(md, p - 1);
  std::vector<SparseVector<K>> cols(res.dims[0]);
  for (std::uint64_t j = 0; j < cols.size(); ++j) {
    const std::uint64_t x0 = j / (src.size() * d), xl = j % d;
    std::uint64_t t = src[(j / d) % src.size()];
    // Digits of t are M indices shifted by dim A.
    std::vector<std::uint64_t> ms(p);
    for (std::size_t k = p; k-- > 0; t /= de) ms[k] = t % de - d;
    SparseVector<K> flat;
    if (p == 1) {
      for (auto& e : s.m.left(x0).column(ms[0]))
        for (auto& g : s.m.right(xl).column(e.index)) flat.push_back({g.index, e.value * g.value});
    } else {
      std::uint64_t mid = 0;
      for (std::size_t k = 1; k + 1 < p; ++k) mid = mid * md + ms[k];
      for (auto& e : s.m.left(x0).column(ms[0]))
        for (auto& g : s.m.right(xl).column(ms[p - 1]))
          flat.push_back({static_cast<std::uint32_t>((e.index * (mp1 / md) + mid) * md + g.index), e.value * g.value});
    }
    normalize(flat);
    SparseVector<K> col;
    for (auto& e : flat) {
      auto r = tp.projection.col_rows(e.index);
      auto v = tp.projection.col_values(e.index);
      for (std::size_t k = 0; k < r.size(); ++k) col.push_back({r[k], e.value * v[k]});
    }
    normalize(col);
    cols[j] = std::move(col);
  }
  res.mu = SparseMatrix<K>::from_columns(tp.module.dim(), std::move(cols));
  return res;
}

namespace {

// Relations g(x) = (-1)^{p-1} g(rotate x) on (DA)^{(x)_A p}, one column per tensor.
template <class K>
SparseMatrix<K> cyclic_relations(const TensorPower<K>& tp, std::size_t d, std::size_t p, const FieldSpec& f) {
  const std::uint64_t n = ipow(d, p), lead = ipow(d, p - 1);
  std::vector<std::uint32_t> rot(n);
  for (std::uint64_t t = 0; t < n; ++t) rot[t] = static_cast<std::uint32_t>((t % lead) * d + t / lead);
  return tp.projection - tp.projection.select_columns(rot).scaled(sign<K>(f, p - 1));
}

}  // namespace

template <class K>
std::size_t cyc_dims(const Algebra<K>& a, std::size_t p) {
  if (p < 1) throw std::invalid_argument("Cyc needs p >= 1");
  auto tp = tensor_power(dual_bimodule(a), p);
  return tp.module.dim() - rank(cyclic_relations(tp, a.dim(), p, a.field()));
}

template <class K>
SparseMatrix<K> sigma_map(const SplitAlgebra<K>& s, std::size_t n) {
  const std::uint64_t d = s.d(), de = s.de();
  const FieldSpec& f = s.a.field();
  IndexSet rows(cochain_run(split_tensors(s, n, 1), d, 0, d));
  const std::uint64_t ncols = ipow(d, n) * d;
  std::vector<SparseVector<K>> cols(ncols);
  // sigma_n(E_{t,o}) is nonzero on (t_{n-j+2..n}, psi_o, t_{1..n-j}) at the dual of t_{n-j+1}.
  for (std::uint64_t c = 0; c < ncols; ++c) {
    const std::uint64_t t = c / d, o = c % d;
    std::vector<std::uint64_t> dig(n);
    std::uint64_t tt = t;
    for (std::size_t k = n; k-- > 0; tt /= d) dig[k] = tt % d;
    for (std::size_t j = 1; j <= n; ++j) {
      std::uint64_t row_t = 0;
      for (std::size_t k = n - j + 1; k < n; ++k) row_t = row_t * de + dig[k];
      row_t = row_t * de + d + o;
      for (std::size_t k = 0; k < n - j; ++k) row_t = row_t * de + dig[k];
      const std::uint64_t out = dig[n - j];
      cols[c].push_back({narrow(rows.find(row_t * d + out)), sign<K>(f, j * n + 1)});
    }
    normalize(cols[c]);
  }
  return SparseMatrix<K>::from_columns(rows.size(), std::move(cols));
}

template <class K>
CheckResult verify_theorem_1_1(const SplitAlgebra<K>& s, std::size_t n_max, const Limits& limits) {
  CheckResult r{"thm1.1"};
  auto direct = hh_dims(s.e, Bimodule<K>::regular(s.e), n_max, limits);
  DimTable sum{"sum_p H(X_(p))", std::vector<std::size_t>(n_max + 1, 0)};
  DimTable cochains{"sum_p dim X_(p)", std::vector<std::size_t>(n_max + 1, 0)};
  std::vector<bool> closed;
  for (std::size_t p = 0; p <= n_max + 1; ++p) {
    auto x = build_X(s, static_cast<long>(p), n_max + 1, limits);
    closed.push_back(x.composes_to_zero());
    auto h = x.cohomology_dims(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
      sum.dims[n] += h[n];
      cochains.dims[n] += x.dim(n);
    }
  }
  DimTable full{"dim Hom(E^n, E)", {}};
  for (std::size_t n = 0; n <= n_max; ++n) full.dims.push_back(ipow(s.de(), n) * s.de());
  r.compare("cochain spaces exhaust Hom(E^n, E)", cochains, full);
  r.identity("d d = 0 on each X_(p)", closed);
  r.compare("HH^n(E) = sum_p H^n(X_(p))", {"HH(E)", direct.dims}, sum);
  return r.finish();
}

template <class K>
CheckResult column_ext_check(const SplitAlgebra<K>& s, std::size_t p_max, std::size_t n_max, const Limits& limits) {
  CheckResult r{"thm1.3"};
  bool exact = true, skipped = false;
  for (std::size_t p = 1; p <= p_max; ++p) {
    const std::string tag = "p=" + std::to_string(p);
    try {
      auto dx = build_double_X(s, static_cast<long>(p), n_max + 1, n_max + 1, limits);
      auto x = build_X(s, static_cast<long>(p), n_max + 1, limits);
      auto tot = dx.total();
      std::vector<bool> same;
      for (std::size_t n = 0; n < std::min(tot.top(), x.top()); ++n) same.push_back(tot.d(n) == x.d(n));
      r.identity(tag + ": total complex equals restricted b", same);
      r.identity(tag + ": delta anticommutes with the column differentials", dx.delta_anticommutes());

      auto h0 = dx.col0.cohomology_dims(n_max), h1 = dx.col1.cohomology_dims(n_max);
      const std::size_t lo = p - 1;
      if (lo <= n_max) {
        auto ext0 = ext_bimodule_dims(tensor_power(s.m, p - 1).module, Bimodule<K>::regular(s.a), n_max - lo, limits);
        auto ext1 = ext_bimodule_dims(tensor_power(s.m, p).module, s.m, n_max - lo, limits);
        r.compare(tag + ": H^n(column 0) = Ext^{n-p+1}(M^p-1, A), n >= p-1",
                  {"H(column 0)", {h0.begin() + lo, h0.end()}}, ext0);
        r.compare(tag + ": H^n(column 1) = Ext^{n-p+1}(M^p, M), n >= p-1",
                  {"H(column 1)", {h1.begin() + lo, h1.end()}}, ext1);
      }
    } catch (const SizeLimitExceeded& e) {
      skipped = true;
      r.note(tag + " columns skipped: " + e.what());
    }
    try {
      auto res = build_resolution(s, p, n_max + 1, limits);
      r.identity(tag + ": resolution differential squares to zero", {res.composes_to_zero()});
      auto h = res.homology_dims();
      const std::size_t coker = res.coker_mu();
      if (coker != 0 || std::any_of(h.begin(), h.end(), [](std::size_t v) { return v != 0; })) {
        exact = false;
        r.note(tag + ": resolution is not exact in degrees <= " + std::to_string(n_max));
      }
      r.note(tag + ": resolution homology checked in degrees <= " + std::to_string(n_max));
    } catch (const SizeLimitExceeded& e) {
      skipped = true;
      r.note(tag + " resolution skipped: " + e.what());
    }
  }
  r.finish();
  if (r.status == Status::Pass && !exact) r.status = Status::HypothesisViolated;
  if (r.status == Status::Pass && skipped) r.status = Status::Skipped;
  return r;
}

template <class K>
CheckResult verify_lemma_2_3(const Algebra<K>& a, std::size_t p_max, const Limits& limits) {
  CheckResult r{"lem2.3"};
  auto s = trivial_split(a);
  DimTable lhs{"H^{p-1}(X_(p))", {}}, rhs{"Cyc^p", {}};
  std::vector<bool> contained;
  for (std::size_t p = 2; p <= p_max; ++p) {
    auto x = build_X(s, static_cast<long>(p), p, limits);
    lhs.dims.push_back(x.cohomology_dims(p - 1)[p - 1]);
    auto tp = tensor_power(s.m, p);
    auto rel = cyclic_relations(tp, a.dim(), p, a.field());
    rhs.dims.push_back(tp.module.dim() - rank(rel));
    // Cyc functionals as columns; they must vanish on a t - t a.
    auto cyc = kernel(rel.transpose(), a.field()).basis.transpose();
    bool ok = true;
    for (std::size_t i = 0; i < a.dim() && ok; ++i)
      ok = (cyc * (tp.module.left(i) - tp.module.right(i))).is_zero();
    contained.push_back(ok);
  }
  r.compare("H^{p-1}(X_(p)) = Cyc^p for p = 2..", lhs, rhs);
  r.identity("Cyc^p vanishes on [A, (DA)^p]", contained);
  return r.finish();
}

template <class K>
CheckResult verify_sigma_homotopy(const Algebra<K>& a, std::size_t n_max, const Limits& limits) {
  CheckResult r{"thm2.2"};
  auto s = trivial_split(a);
  auto dx = build_double_X(s, 1, n_max + 1, n_max, limits);
  std::vector<SparseMatrix<K>> sigma;
  for (std::size_t n = 0; n <= n_max + 1; ++n) sigma.push_back(sigma_map(s, n));
  std::vector<bool> holds;
  for (std::size_t n = 0; n <= n_max; ++n) {
    // delta_n = b^1 sigma_n + sigma_{n+1} (-b^0_n).
    SparseMatrix<K> rhs = (sigma[n + 1] * dx.col0.d(n)).scaled(-a.one());
    if (n > 0) rhs = rhs + dx.col1.d(n - 1) * sigma[n];
    holds.push_back(rhs == dx.delta[n]);
  }
  r.identity("delta = b^1 sigma - sigma b^0", holds);

  auto x = build_X(s, 1, n_max + 1, limits).cohomology_dims(n_max);
  auto hh = hh_dims(a, Bimodule<K>::regular(a), n_max, limits);
  DimTable sum{"HH^n(A) + Ext^{n-1}(DA, DA)", hh.dims};
  if (n_max >= 1) {
    auto ext = ext_bimodule_dims(s.m, s.m, n_max - 1, limits);
    for (std::size_t n = 1; n <= n_max; ++n) sum.dims[n] += ext.dims[n - 1];
  }
  r.compare("H^n(X_(1)) = HH^n(A) + Ext^{n-1}(DA, DA)", {"H(X_(1))", x}, sum);
  return r.finish();
}

template <class K>
CheckResult verify_corollary_2_x(const Algebra<K>& a, std::size_t n_max, const Limits& limits) {
  CheckResult r{"cor2.5"};
  auto s = trivial_split(a);
  auto direct = hh_dims(s.e, Bimodule<K>::regular(s.e), n_max, limits);
  auto hh = hh_dims(a, Bimodule<K>::regular(a), n_max, limits);
  auto hom = hochschild_homology_dims(a, n_max, limits);
  DimTable lhs{"HH(TA)", {}}, rhs{"decomposition", {}};
  DimTable ext{"Ext(DA, DA)", {}};
  if (n_max >= 1) ext = ext_bimodule_dims(s.m, s.m, n_max - 1, limits);
  std::vector<std::vector<std::size_t>> xh(n_max + 1);
  for (std::size_t p = 2; p <= n_max; ++p) xh[p] = build_X(s, static_cast<long>(p), n_max + 1, limits).cohomology_dims(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::size_t v = hh.dims[n] + hom.dims[n] + ext.dims[n - 1] + cyc_dims(a, n + 1);
    for (std::size_t p = 2; p <= n; ++p) v += xh[p][n];
    lhs.dims.push_back(direct.dims[n]);
    rhs.dims.push_back(v);
  }
  r.compare("HH^n(TA) = HH^n + HH_n + Ext^{n-1}(DA,DA) + Cyc^{n+1} + sum_{p=2}^n H^n(X_(p)), n >= 1", lhs, rhs);
  return r.finish();
}

template <class K>
CheckResult verify_degree_zero_one(const Algebra<K>& a, const Limits& limits) {
  CheckResult r{"thm2.7"};
  auto s = trivial_split(a);
  auto direct = hh_dims(s.e, Bimodule<K>::regular(s.e), 1, limits);
  auto hh = hh_dims(a, Bimodule<K>::regular(a), 1, limits);
  auto hom = hochschild_homology_dims(a, 1, limits);
  auto dda = dual_of(s.m);
  SparseMatrix<K> stacked(0, dda.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) stacked = stacked.vconcat(dda.left(i) - dda.right(i));
  const std::size_t invariants = kernel_dim(stacked);
  r.compare("HH^0(TA) = Z(A) + A/[A,A]", {"HH^0(TA)", {direct.dims[0]}}, {"Z(A) + HH_0(A)", {hh.dims[0] + hom.dims[0]}});
  r.compare("(DDA)^A = Z(A)", {"(DDA)^A", {invariants}}, {"Z(A)", {hh.dims[0]}});
  r.compare("HH^1(TA) = HH^1 + HH_1 + (DDA)^A + Cyc^2", {"HH^1(TA)", {direct.dims[1]}},
            {"sum", {hh.dims[1] + hom.dims[1] + invariants + cyc_dims(a, 2)}});
  return r.finish();
}

#define HH_INSTANTIATE(K)                                                                                          \
  template struct DoubleComplex<K>;                                                                                \
  template struct Resolution<K>;                                                                                   \
  template SplitAlgebra<K> make_split(const Algebra<K>&, const Bimodule<K>&);                                      \
  template SplitAlgebra<K> trivial_split(const Algebra<K>&);                                                       \
  template std::vector<std::uint64_t> split_tensors(const SplitAlgebra<K>&, std::size_t, long);                    \
  template CochainComplex<K> build_X(const SplitAlgebra<K>&, long, std::size_t, const Limits&);                    \
  template DoubleComplex<K> build_double_X(const SplitAlgebra<K>&, long, std::size_t, std::size_t, const Limits&); \
  template TensorPower<K> tensor_power(const Bimodule<K>&, std::size_t);                                           \
  template Resolution<K> build_resolution(const SplitAlgebra<K>&, std::size_t, std::size_t, const Limits&);        \
  template std::size_t cyc_dims(const Algebra<K>&, std::size_t);                                                   \
  template SparseMatrix<K> sigma_map(const SplitAlgebra<K>&, std::size_t);                                         \
  template CheckResult verify_theorem_1_1(const SplitAlgebra<K>&, std::size_t, const Limits&);                     \
  template CheckResult column_ext_check(const SplitAlgebra<K>&, std::size_t, std::size_t, const Limits&);          \
  template CheckResult verify_lemma_2_3(const Algebra<K>&, std::size_t, const Limits&);                            \
  template CheckResult verify_sigma_homotopy(const Algebra<K>&, std::size_t, const Limits&);                       \
  template CheckResult verify_corollary_2_x(const Algebra<K>&, std::size_t, const Limits&);                        \
  template CheckResult verify_degree_zero_one(const Algebra<K>&, const Limits&);

HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh

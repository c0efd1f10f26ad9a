#include "hh/algebra.hpp"

#include <algorithm>

namespace hh {

AssociativityViolation::AssociativityViolation(std::size_t i_, std::size_t j_, std::size_t k_)
    : AlgebraError("associativity fails: (e" + std::to_string(i_) + " e" + std::to_string(j_) + ") e" +
                   std::to_string(k_) + " != e" + std::to_string(i_) + " (e" + std::to_string(j_) + " e" +
                   std::to_string(k_) + ")"),
      i(i_), j(j_), k(k_) {}

UnitViolation::UnitViolation(std::size_t i_)
    : AlgebraError("unit law fails on basis element " + std::to_string(i_)), i(i_) {}

namespace {

template <class K>
void axpy(SparseVector<K>& acc, const K& c, const SparseVector<K>& v) {
  for (auto& e : v) acc.push_back({e.index, c * e.value});
}

template <class K>
SparseVector<K> to_sparse(std::span<const K> x) {
  SparseVector<K> v;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) v.push_back({static_cast<std::uint32_t>(i), x[i]});
  return v;
}

template <class K>
SparseMatrix<K> combine(const std::vector<SparseMatrix<K>>& mats, std::span<const K> coeffs, std::size_t n) {
  std::vector<Triplet<K>> t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (auto& e : mats[i].triplets()) t.push_back({e.row, e.col, coeffs[i] * e.value});
  }
  return SparseMatrix<K>::from_triplets(n, n, std::move(t));
}

}  // namespace

// ---- Algebra ----

template <class K>
Algebra<K> Algebra<K>::make(const FieldSpec& field, std::vector<std::string> labels,
                            const std::vector<StructureConstant<K>>& mul, std::vector<K> unit, std::string name) {
  auto d = std::make_shared<Data>();
  const std::size_t n = labels.size();
  d->field = field;
  d->dim = n;
  d->labels = std::move(labels);
  d->name = std::move(name);
  if (unit.size() != n) throw AlgebraError("unit vector has wrong length");
  d->unit = std::move(unit);
  d->table.assign(n * n, {});
  for (auto& s : mul) {
    if (s.i >= n || s.j >= n || s.k >= n) throw AlgebraError("structure constant index out of range");
    d->table[s.i * n + s.j].push_back({s.k, s.c});
  }
  for (auto& v : d->table) normalize(v);

  auto prod = [&](const SparseVector<K>& x, const SparseVector<K>& y) {
    SparseVector<K> acc;
    for (auto& a : x)
      for (auto& b : y) axpy(acc, a.value * b.value, d->table[a.index * n + b.index]);
    normalize(acc);
    return acc;
  };
  auto unit_vec = to_sparse<K>(d->unit);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVector<K> ei{{static_cast<std::uint32_t>(i), K::from_int(field, 1)}};
    auto l = prod(unit_vec, ei), r = prod(ei, unit_vec);
    if (!(l.size() == 1 && l[0].index == i && l[0].value.is_one()) ||
        !(r.size() == 1 && r[0].index == i && r[0].value.is_one()))
      throw UnitViolation(i);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector<K> ek{{static_cast<std::uint32_t>(k), K::from_int(field, 1)}};
        SparseVector<K> ei{{static_cast<std::uint32_t>(i), K::from_int(field, 1)}};
        auto lhs = prod(d->table[i * n + j], ek);
        auto rhs = prod(ei, d->table[j * n + k]);
        bool equal = lhs.size() == rhs.size();
        for (std::size_t t = 0; equal && t < lhs.size(); ++t)
          equal = lhs[t].index == rhs[t].index && lhs[t].value == rhs[t].value;
        if (!equal) throw AssociativityViolation(i, j, k);
      }

  d->preimages.assign(n, {});
  std::vector<std::vector<Triplet<K>>> lt(n), rt(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto& e : d->table[i * n + j]) {
        d->preimages[e.index].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), e.value});
        lt[i].push_back({e.index, static_cast<std::uint32_t>(j), e.value});
        rt[j].push_back({e.index, static_cast<std::uint32_t>(i), e.value});
      }
  for (std::size_t i = 0; i < n; ++i) {
    d->left.push_back(SparseMatrix<K>::from_triplets(n, n, std::move(lt[i])));
    d->right.push_back(SparseMatrix<K>::from_triplets(n, n, std::move(rt[i])));
  }
  Algebra a;
  a.d_ = std::move(d);
  return a;
}

template <class K>
std::vector<K> Algebra<K>::multiply(std::span<const K> x, std::span<const K> y) const {
  const std::size_t n = dim();
  std::vector<K> out(n, zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const K c = x[i] * y[j];
      for (auto& e : product(i, j)) out[e.index] += c * e.value;
    }
  }
  return out;
}

template <class K>
SparseMatrix<K> Algebra<K>::left_mult_by(std::span<const K> a) const {
  return combine(d_->left, a, dim());
}

template <class K>
SparseMatrix<K> Algebra<K>::right_mult_by(std::span<const K> a) const {
  return combine(d_->right, a, dim());
}

template <class K>
std::vector<StructureConstant<K>> Algebra<K>::structure_constants() const {
  std::vector<StructureConstant<K>> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (auto& e : product(i, j))
        out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), e.index, e.value});
  return out;
}

template <class K>
std::vector<K> Algebra<K>::basis_vector(std::size_t i) const {
  std::vector<K> v(dim(), zero());
  v[i] = one();
  return v;
}

// ---- AlgebraMorphism ----

template <class K>
AlgebraMorphism<K>::AlgebraMorphism(Algebra<K> source, Algebra<K> target, DenseMatrix<K> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw ShapeError("morphism matrix has wrong shape");
}

template <class K>
AlgebraMorphism<K> AlgebraMorphism<K>::identity(const Algebra<K>& a) {
  return AlgebraMorphism(a, a, DenseMatrix<K>::identity(a.dim(), a.field()));
}

template <class K>
void AlgebraMorphism<K>::validate() const {
  const std::size_t n = source_.dim();
  if (apply(source_.unit()) != target_.unit()) throw MorphismViolation("morphism does not preserve the unit");
  std::vector<std::vector<K>> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = image(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<K> prod(n, source_.zero());
      for (auto& e : source_.product(i, j)) prod[e.index] = e.value;
      if (apply(prod) != target_.multiply(img[i], img[j]))
        throw MorphismViolation("morphism not multiplicative on e" + std::to_string(i) + ", e" + std::to_string(j));
    }
}

template <class K>
AlgebraMorphism<K> AlgebraMorphism<K>::compose(const AlgebraMorphism& inner) const {
  return AlgebraMorphism(inner.source_, target_, matrix_ * inner.matrix_);
}

template <class K>
AlgebraMorphism<K> AlgebraMorphism<K>::inverse() const {
  try {
    return AlgebraMorphism(target_, source_, hh::inverse(matrix_));
  } catch (const std::domain_error&) {
    throw NotInvertible("morphism is not invertible");
  }
}

template <class K>
AlgebraMorphism<K> AlgebraMorphism<K>::power(long long n) const {
  AlgebraMorphism base = n < 0 ? inverse() : *this;
  unsigned long long e = n < 0 ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
  AlgebraMorphism r = identity(source_);
  while (e) {
    if (e & 1) r = r.compose(base);
    base = base.compose(base);
    e >>= 1;
  }
  return r;
}

template <class K>
bool AlgebraMorphism<K>::is_identity() const {
  return matrix_ == DenseMatrix<K>::identity(source_.dim(), source_.field());
}

// ---- Bimodule ----

template <class K>
Bimodule<K>::Bimodule(Algebra<K> a, std::size_t dim, std::vector<SparseMatrix<K>> left,
                      std::vector<SparseMatrix<K>> right)
    : a_(std::move(a)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != a_.dim() || right_.size() != a_.dim()) throw ShapeError("bimodule needs one action matrix per basis element");
  for (std::size_t i = 0; i < a_.dim(); ++i)
    if (left_[i].rows() != dim_ || left_[i].cols() != dim_ || right_[i].rows() != dim_ || right_[i].cols() != dim_)
      throw ShapeError("bimodule action matrix has wrong shape");
}

template <class K>
Bimodule<K> Bimodule<K>::regular(const Algebra<K>& a) {
  std::vector<SparseMatrix<K>> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) l.push_back(a.left_mult(i)), r.push_back(a.right_mult(i));
  return Bimodule(a, a.dim(), std::move(l), std::move(r));
}

template <class K>
SparseMatrix<K> Bimodule<K>::left_by(std::span<const K> a) const {
  return combine(left_, a, dim_);
}

template <class K>
SparseMatrix<K> Bimodule<K>::right_by(std::span<const K> a) const {
  return combine(right_, a, dim_);
}

template <class K>
void Bimodule<K>::validate() const {
  const std::size_t n = a_.dim();
  const auto id = SparseMatrix<K>::identity(dim_, a_.field());
  if (!(left_by(a_.unit()) == id)) throw BimoduleAxiomViolation("left action of 1 is not the identity");
  if (!(right_by(a_.unit()) == id)) throw BimoduleAxiomViolation("right action of 1 is not the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<K> prod(n, a_.zero());
      for (auto& e : a_.product(i, j)) prod[e.index] = e.value;
      if (!(left_[i] * left_[j] == left_by(prod)))
        throw BimoduleAxiomViolation("left action not associative at e" + std::to_string(i) + ", e" + std::to_string(j));
      if (!(right_[j] * right_[i] == right_by(prod)))
        throw BimoduleAxiomViolation("right action not associative at e" + std::to_string(i) + ", e" + std::to_string(j));
      if (!(left_[i] * right_[j] == right_[j] * left_[i]))
        throw BimoduleAxiomViolation("actions do not commute at e" + std::to_string(i) + ", e" + std::to_string(j));
    }
}

template <class K>
Bimodule<K> dual_of(const Bimodule<K>& m) {
  std::vector<SparseMatrix<K>> l, r;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    l.push_back(m.right(i).transpose());  // (a.psi)(x) = psi(x a)
    r.push_back(m.left(i).transpose());   // (psi.b)(x) = psi(b x)
  }
  return Bimodule<K>(m.algebra(), m.dim(), std::move(l), std::move(r));
}

template <class K>
Bimodule<K> twisted_bimodule(const Algebra<K>& a, const AlgebraMorphism<K>& f, const AlgebraMorphism<K>& g) {
  std::vector<SparseMatrix<K>> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto fi = f.image(i), gi = g.image(i);
    l.push_back(a.left_mult_by(fi));
    r.push_back(a.right_mult_by(gi));
  }
  return Bimodule<K>(a, a.dim(), std::move(l), std::move(r));
}

template <class K>
Quotient<K> quotient_by(std::size_t ambient, const std::vector<SparseVector<K>>& relations, const FieldSpec& f) {
  // One row per relation.
  DenseMatrix<K> rel(relations.size(), ambient);
  for (std::size_t r = 0; r < relations.size(); ++r)
    for (auto& e : relations[r]) rel.at(r, e.index) += e.value;
  auto rr = rref(std::move(rel));
  std::vector<std::int64_t> pos(ambient, -1);
  std::vector<std::uint8_t> is_pivot(ambient, 0);
  for (auto p : rr.pivots) is_pivot[p] = 1;
  Quotient<K> q;
  for (std::size_t c = 0; c < ambient; ++c)
    if (!is_pivot[c]) pos[c] = static_cast<std::int64_t>(q.kept.size()), q.kept.push_back(static_cast<std::uint32_t>(c));
  q.dim = q.kept.size();
  std::vector<SparseVector<K>> pcols(ambient);
  for (auto c : q.kept) pcols[c].push_back({static_cast<std::uint32_t>(pos[c]), K::from_int(f, 1)});
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    const auto c = rr.pivots[r];
    for (auto k : q.kept)
      if (!rr.reduced.at(r, k).is_zero()) pcols[c].push_back({static_cast<std::uint32_t>(pos[k]), -rr.reduced.at(r, k)});
  }
  q.projection = SparseMatrix<K>::from_columns(q.dim, std::move(pcols));
  std::vector<SparseVector<K>> scols(q.dim);
  for (std::size_t i = 0; i < q.dim; ++i) scols[i].push_back({q.kept[i], K::from_int(f, 1)});
  q.section = SparseMatrix<K>::from_columns(ambient, std::move(scols));
  return q;
}

template <class K>
TensorQuotient<K> tensor_over_A(const Bimodule<K>& m, const Bimodule<K>& n) {
  if (!m.algebra().same_as(n.algebra())) throw AlgebraError("tensor_over_A: bimodules over different algebras");
  const auto& a = m.algebra();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<SparseVector<K>> rel;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& R = m.right(i);
    const auto& L = n.left(i);
    for (std::size_t x = 0; x < dm; ++x)
      for (std::size_t y = 0; y < dn; ++y) {
        SparseVector<K> v;
        auto rr = R.col_rows(x);
        auto rv = R.col_values(x);
        for (std::size_t t = 0; t < rr.size(); ++t) v.push_back({static_cast<std::uint32_t>(rr[t] * dn + y), rv[t]});
        auto lr = L.col_rows(y);
        auto lv = L.col_values(y);
        for (std::size_t t = 0; t < lr.size(); ++t) v.push_back({static_cast<std::uint32_t>(x * dn + lr[t]), -lv[t]});
        normalize(v);
        if (!v.empty()) rel.push_back(std::move(v));
      }
  }
  auto q = quotient_by(dm * dn, rel, a.field());
  const auto idn = SparseMatrix<K>::identity(dn, a.field());
  const auto idm = SparseMatrix<K>::identity(dm, a.field());
  std::vector<SparseMatrix<K>> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(q.projection * (kronecker(m.left(i), idn) * q.section));
    r.push_back(q.projection * (kronecker(idm, n.right(i)) * q.section));
  }
  TensorQuotient<K> out{Bimodule<K>(a, q.dim, std::move(l), std::move(r)), std::move(q)};
  return out;
}

template <class K>
Quotient<K> coinvariants(const Bimodule<K>& m) {
  const auto& a = m.algebra();
  std::vector<SparseVector<K>> rel;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto diff = m.left(i) - m.right(i);
    for (std::size_t x = 0; x < m.dim(); ++x) {
      auto v = diff.column(x);
      if (!v.empty()) rel.push_back(std::move(v));
    }
  }
  return quotient_by(m.dim(), rel, a.field());
}

template <class K>
Algebra<K> split_algebra(const Algebra<K>& a, const Bimodule<K>& m, const std::vector<std::string>& m_labels) {
  const std::size_t d = a.dim(), md = m.dim();
  std::vector<StructureConstant<K>> mul = a.structure_constants();
  auto u = [](std::size_t x) { return static_cast<std::uint32_t>(x); };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < md; ++k) {
      auto lr = m.left(i).col_rows(k);
      auto lv = m.left(i).col_values(k);
      for (std::size_t t = 0; t < lr.size(); ++t) mul.push_back({u(i), u(d + k), u(d + lr[t]), lv[t]});
      auto rr = m.right(i).col_rows(k);
      auto rv = m.right(i).col_values(k);
      for (std::size_t t = 0; t < rr.size(); ++t) mul.push_back({u(d + k), u(i), u(d + rr[t]), rv[t]});
    }
  std::vector<std::string> labels = a.labels();
  for (std::size_t k = 0; k < md; ++k) labels.push_back(k < m_labels.size() ? m_labels[k] : "m" + std::to_string(k));
  std::vector<K> unit = a.unit();
  unit.resize(d + md, a.zero());
  return Algebra<K>::make(a.field(), std::move(labels), mul, std::move(unit),
                          a.name().empty() ? std::string() : "split(" + a.name() + ")");
}

template <class K>
Algebra<K> trivial_extension(const Algebra<K>& a) {
  std::vector<std::string> dl;
  for (auto& l : a.labels()) dl.push_back("D(" + l + ")");
  auto e = split_algebra(a, dual_bimodule(a), dl);
  return Algebra<K>::make(e.field(), e.labels(), e.structure_constants(), e.unit(),
                          a.name().empty() ? std::string() : "T(" + a.name() + ")");
}

template <class K>
Algebra<K> change_basis(const Algebra<K>& a, const DenseMatrix<K>& basis, std::vector<std::string> labels) {
  const std::size_t n = a.dim();
  const auto inv = hh::inverse(basis);
  std::vector<std::vector<K>> cols(n);
  for (std::size_t s = 0; s < n; ++s) cols[s] = basis.column(s);
  std::vector<StructureConstant<K>> mul;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      auto c = inv.apply(a.multiply(cols[s], cols[t]));
      for (std::size_t k = 0; k < n; ++k)
        if (!c[k].is_zero())
          mul.push_back({static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(k), c[k]});
    }
  if (labels.empty())
    for (std::size_t s = 0; s < n; ++s) labels.push_back("b" + std::to_string(s));
  return Algebra<K>::make(a.field(), std::move(labels), mul, inv.apply(a.unit()), a.name());
}

#define HH_INSTANTIATE(K)                                                                                      \
  template class Algebra<K>;                                                                                  \
  template class AlgebraMorphism<K>;                                                                          \
  template class Bimodule<K>;                                                                                 \
  template Bimodule<K> dual_of<K>(const Bimodule<K>&);                                                        \
  template Bimodule<K> twisted_bimodule<K>(const Algebra<K>&, const AlgebraMorphism<K>&, const AlgebraMorphism<K>&); \
  template Quotient<K> quotient_by<K>(std::size_t, const std::vector<SparseVector<K>>&, const FieldSpec&);   \
  template TensorQuotient<K> tensor_over_A<K>(const Bimodule<K>&, const Bimodule<K>&);                        \
  template Quotient<K> coinvariants<K>(const Bimodule<K>&);                                                   \
  template Algebra<K> split_algebra<K>(const Algebra<K>&, const Bimodule<K>&, const std::vector<std::string>&); \
  template Algebra<K> trivial_extension<K>(const Algebra<K>&);                                                \
  template Algebra<K> change_basis<K>(const Algebra<K>&, const DenseMatrix<K>&, std::vector<std::string>);
HH_INSTANTIATE(Fp)
HH_INSTANTIATE(Rational)

}  // namespace hh

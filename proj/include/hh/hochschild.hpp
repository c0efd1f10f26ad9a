// Hochschild cochain and chain complexes, and an Ext oracle over A^e built
// from iterated syzygies.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/linalg.hpp"

namespace hh {

struct SizeLimitExceeded : std::runtime_error {
  std::size_t requested, limit;
  SizeLimitExceeded(const std::string& what, std::size_t requested_, std::size_t limit_);
};

struct Limits {
  std::size_t max_space_dim = 5'000'000;
};

void check_size(std::size_t dim, const Limits& limits, const std::string& what);

struct DimTable {
  std::string label;
  std::vector<std::size_t> dims;
  friend bool operator==(const DimTable&, const DimTable&) = default;
};

// Spaces C^0..C^top with differentials d^n: C^n -> C^{n+1} for n < top.
template <class K>
class CochainComplex {
 public:
  CochainComplex() = default;
  CochainComplex(std::vector<std::size_t> dims, std::vector<SparseMatrix<K>> diffs);

  std::size_t top() const { return dims_.empty() ? 0 : dims_.size() - 1; }
  std::size_t dim(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const SparseMatrix<K>& d(std::size_t n) const { return diffs_.at(n); }
  SparseMatrix<K>& d_mut(std::size_t n) { return diffs_.at(n); }

  // d^{n+1} d^n = 0 for all stored pairs.
  bool composes_to_zero() const;
  // H^0..H^n_max; needs n_max < top().
  std::vector<std::size_t> cohomology_dims(std::size_t n_max, const RankOptions& opt = {}) const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix<K>> diffs_;
};

// Column generator for the bar differential b on Hom(A^{(x)n}, M). The
// elementary map E_{t,o} (input tensor t in lexicographic order, output basis
// o) has index t * dim M + o.
template <class K>
class BarDifferential {
 public:
  BarDifferential(Algebra<K> a, Bimodule<K> m);
  std::size_t algebra_dim() const { return d_; }
  std::size_t module_dim() const { return m_; }
  // Appends (row index in Hom(A^{(x)n+1}, M), value) pairs for b(E_{t,o}); may repeat rows.
  void column(std::size_t n, std::uint64_t t, std::uint32_t o, std::vector<std::pair<std::uint64_t, K>>& out) const;

 private:
  Algebra<K> a_;
  Bimodule<K> mod_;
  std::size_t d_, m_;
  std::vector<SparseVector<K>> left_cols_, right_cols_;  // index i * m + o: column o of L_i / R_i
  std::vector<std::uint64_t> pow_;
  K minus_one_;
};

std::uint64_t ipow(std::uint64_t base, std::size_t e);

// Concatenation of sorted runs of full indices; position lookup by binary
// search in each run.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::vector<std::uint64_t> sorted) { add_run(std::move(sorted)); }
  void add_run(std::vector<std::uint64_t> sorted);
  std::size_t size() const { return size_; }
  std::uint64_t operator[](std::size_t i) const;
  // Position of x or -1.
  std::int64_t find(std::uint64_t x) const;

 private:
  std::vector<std::vector<std::uint64_t>> runs_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

struct RestrictionLeak : std::logic_error {
  using std::logic_error::logic_error;
};

// Differential from the span of the elementary maps `cols` (degree n) to the
// span of `rows` (degree n+1). Entries outside `rows` raise RestrictionLeak
// unless `allow_leak`, in which case they are dropped.
template <class K>
SparseMatrix<K> restricted_bar_differential(const BarDifferential<K>& b, std::size_t n, const IndexSet& cols,
                                            const IndexSet& rows, bool allow_leak = false);

template <class K>
SparseMatrix<K> bar_differential_matrix(const BarDifferential<K>& b, std::size_t n, const Limits& limits = {});

template <class K>
CochainComplex<K> hochschild_cochain(const Algebra<K>& a, const Bimodule<K>& m, std::size_t n_max,
                                     const Limits& limits = {});

template <class K>
DimTable hh_dims(const Algebra<K>& a, const Bimodule<K>& m, std::size_t n_max, const Limits& limits = {});

// Boundary b_n: A^{(x)n+1} -> A^{(x)n}.
template <class K>
SparseMatrix<K> hochschild_boundary(const Algebra<K>& a, std::size_t n);

template <class K>
DimTable hochschild_homology_dims(const Algebra<K>& a, std::size_t n_max, const Limits& limits = {});

template <class K>
DimTable twisted_hh_dims(const Algebra<K>& a, const AlgebraMorphism<K>& rho, std::size_t p, std::size_t n_max,
                         const Limits& limits = {});

// Cochain-level map f -> outer o f o inner^{(x)k} on Hom(A^{(x)k}, A).
template <class K>
SparseMatrix<K> conjugation_action(const DenseMatrix<K>& outer, const DenseMatrix<K>& inner, std::size_t k,
                                   const FieldSpec& f);

// Ext_{A^e}^i(M, N) for i <= n_max via a syzygy resolution of M.
template <class K>
DimTable ext_bimodule_dims(const Bimodule<K>& m, const Bimodule<K>& n, std::size_t n_max, const Limits& limits = {});

// Radical via the trace form when that form's radical is a nilpotent ideal;
// empty optional otherwise. Columns of the result span rad(A).
template <class K>
std::optional<SparseMatrix<K>> trace_form_radical(const Algebra<K>& a);

}  // namespace hh

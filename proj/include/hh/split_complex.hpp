// Split algebras E = A + M (M an A-bimodule, M^2 = 0) and the subcomplexes
// X_(p) of the Hochschild complex of E: X^n_(p) = Hom(B^n_{p-1}, A) + Hom(B^n_p, M),
// where B^n_p is spanned by the tensors in E^{(x)n} with exactly p factors in M.
#pragma once

#include <cstdint>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/hochschild.hpp"
#include "hh/report.hpp"

namespace hh {

template <class K>
struct SplitAlgebra {
  Algebra<K> a;
  Bimodule<K> m;
  Algebra<K> e;  // basis of A (indices < dim A), then basis of M

  std::size_t d() const { return a.dim(); }
  std::size_t md() const { return m.dim(); }
  std::size_t de() const { return e.dim(); }
};

template <class K>
SplitAlgebra<K> make_split(const Algebra<K>& a, const Bimodule<K>& m);

// E = TA = A + DA.
template <class K>
SplitAlgebra<K> trivial_split(const Algebra<K>& a);

// Sorted lexicographic indices (base dim E) of the tensors spanning B^n_p.
template <class K>
std::vector<std::uint64_t> split_tensors(const SplitAlgebra<K>& s, std::size_t n, long p);

std::uint64_t binomial(std::size_t n, std::size_t k);

// Spaces X^0..X^top, basis Hom(B^n_{p-1}, A) then Hom(B^n_p, M), each ordered
// by (tensor, output); the differential is the restriction of b on E.
template <class K>
CochainComplex<K> build_X(const SplitAlgebra<K>& s, long p, std::size_t top, const Limits& limits = {});

// Column 0: (Hom(B^n_{p-1}, A), b^0) for n <= top0.
// Column 1: (Hom(B^{r+1}_p, M), b^1) for r <= top1.
// delta[n]: column-0 degree n -> column-1 degree n, for n <= min(top0, top1).
template <class K>
struct DoubleComplex {
  CochainComplex<K> col0, col1;
  std::vector<SparseMatrix<K>> delta;
  // Tot^n = col0^n + col1^{n-1} with [[b^0, 0], [delta, b^1]], n <= min(top0, top1 + 1).
  CochainComplex<K> total() const;
  // delta b^0 + b^1 delta = 0, per degree (needed for Tot to be a complex).
  std::vector<bool> delta_anticommutes() const;
};

template <class K>
DoubleComplex<K> build_double_X(const SplitAlgebra<K>& s, long p, std::size_t top0, std::size_t top1,
                                 const Limits& limits = {});

// M^{(x)_A p} together with the projection from M^{(x)_k p} (index
// lexicographic) and a section of it by kept tensors.
template <class K>
struct TensorPower {
  Bimodule<K> module;
  SparseMatrix<K> projection;
  SparseMatrix<K> section;
};

template <class K>
TensorPower<K> tensor_power(const Bimodule<K>& m, std::size_t p);

// The free resolution (A (x) B^{n+p}_p (x) A, b') of M^{(x)_A p} with
// augmentation mu. Index of a (x) t (x) a' is (a * |B^{n+p}_p| + pos(t)) * dim A + a'.
template <class K>
struct Resolution {
  std::vector<std::size_t> dims;         // degrees 0..top
  std::vector<SparseMatrix<K>> b;        // b[n]: degree n -> n-1, n >= 1 (b[0] empty)
  SparseMatrix<K> mu;                    // degree 0 -> M^{(x)_A p}
  bool composes_to_zero() const;
  // Homology at degrees 0..top-1 (degree 0 measured against ker mu) and coker mu.
  std::vector<std::size_t> homology_dims() const;
  std::size_t coker_mu() const;
};

template <class K>
Resolution<K> build_resolution(const SplitAlgebra<K>& s, std::size_t p, std::size_t top, const Limits& limits = {});

// Cyclic functionals on (DA)^{(x)_A p}.
template <class K>
std::size_t cyc_dims(const Algebra<K>& a, std::size_t p);

// sigma_n: Hom(A^{(x)n}, A) -> Hom(B^n_1, DA) for the trivial extension.
template <class K>
SparseMatrix<K> sigma_map(const SplitAlgebra<K>& s, std::size_t n);

template <class K>
CheckResult verify_theorem_1_1(const SplitAlgebra<K>& s, std::size_t n_max, const Limits& limits = {});

template <class K>
CheckResult column_ext_check(const SplitAlgebra<K>& s, std::size_t p_max, std::size_t n_max,
                             const Limits& limits = {});

template <class K>
CheckResult verify_lemma_2_3(const Algebra<K>& a, std::size_t p_max, const Limits& limits = {});

template <class K>
CheckResult verify_sigma_homotopy(const Algebra<K>& a, std::size_t n_max, const Limits& limits = {});

template <class K>
CheckResult verify_corollary_2_x(const Algebra<K>& a, std::size_t n_max, const Limits& limits = {});

template <class K>
CheckResult verify_degree_zero_one(const Algebra<K>& a, const Limits& limits = {});

}  // namespace hh

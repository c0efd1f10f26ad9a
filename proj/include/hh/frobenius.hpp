// Frobenius forms, the Nakayama automorphism and its order, the root-of-unity
// grading, and the Y-complexes computing the cohomology of X_(p) for trivial
// extensions of Frobenius algebras.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hh/split_complex.hpp"

namespace hh {

struct Inconclusive : std::runtime_error {
  std::vector<std::string> log;
  explicit Inconclusive(std::vector<std::string> log_);
};

struct InfiniteOrder : std::runtime_error {
  std::size_t bound;
  explicit InfiniteOrder(std::size_t bound_);
};

struct GradingMissing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrimitiveRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotDiagonalizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
struct FrobeniusData {
  Algebra<K> algebra;
  std::vector<K> phi;
  DenseMatrix<K> gram;               // gram(i, j) = phi(e_i e_j)
  AlgebraMorphism<K> rho;            // x phi = phi rho(x)
  std::optional<std::size_t> ord;    // empty: no rho^m = id for m <= ord_bound
  std::size_t ord_bound = 0;
  std::size_t e_A = 0;               // ord if even, else 2 ord
  std::optional<K> w;
  std::vector<std::vector<std::vector<K>>> grading;  // grading[u]: basis of {rho(a) = w^u a}
  std::string origin;                // which candidate produced phi

  std::size_t order() const;  // throws InfiniteOrder
  bool graded() const { return w.has_value(); }
};

// Candidates: each dual-basis covector, then prefix sums of them, then
// `attempts` seeded random covectors.
template <class K>
FrobeniusData<K> find_frobenius(const Algebra<K>& a, std::size_t attempts = 32, std::uint64_t seed = 1);

// Data for the form phi; throws std::invalid_argument if the Gram matrix is singular.
template <class K>
FrobeniusData<K> frobenius_from_form(const Algebra<K>& a, std::vector<K> phi, std::string origin = {});

// phi' = x phi (phi'(y) = phi(y x)), rho'(a) = rho(x)^{-1} rho(a) rho(x).
template <class K>
FrobeniusData<K> change_form(const FrobeniusData<K>& fd, const std::vector<K>& x);

// phi(y x) = phi(rho(x) y) on all basis pairs.
template <class K>
bool nakayama_relation_holds(const FrobeniusData<K>& fd);

// Eigenspaces {rho(a) = w^u a}. Throws NotPrimitiveRoot, NotDiagonalizable.
template <class K>
void set_grading(FrobeniusData<K>& fd, const K& w);

// Sets the grading with the smallest primitive ord-th root of unity when one
// exists and char does not divide ord; returns false otherwise.
template <class K>
bool try_default_grading(FrobeniusData<K>& fd);

// x -> phi x as a map A -> DA in the dual basis.
template <class K>
SparseMatrix<K> form_map(const FrobeniusData<K>& fd);

// Theta: (DA)^{(x)_A p} -> A_{rho^p}, on the tensor-over-A quotient basis, and
// the same map on (DA)^{(x)_k p}.
template <class K>
struct ThetaMap {
  TensorPower<K> power;
  SparseMatrix<K> on_quotient;
  SparseMatrix<K> on_tensors;
};

template <class K>
ThetaMap<K> theta_iso(const FrobeniusData<K>& fd, std::size_t p);

// The bar resolution of A_{rho^p}: degree n is A^{(x)n+1} (x) A_{rho^p}.
template <class K>
SparseMatrix<K> twisted_bar_resolution_map(const FrobeniusData<K>& fd, std::size_t p, std::size_t n);

// Theta^p_{n+p}: A (x) B^{n+p}_p (x) A -> A^{(x)n+1} (x) A_{rho^p}.
template <class K>
SparseMatrix<K> theta_chain_map(const FrobeniusData<K>& fd, const SplitAlgebra<K>& s, std::size_t p, std::size_t n);

// Psi^p_{n+p} in the other direction; `strict` uses i_1 < ... < i_p.
template <class K>
SparseMatrix<K> psi_chain_map(const FrobeniusData<K>& fd, const SplitAlgebra<K>& s, std::size_t p, std::size_t n,
                              bool strict);

// Y_(p): the Hochschild complex C of A with coefficients A^{rho^{p-1}}, the
// horizontal map on it and the total complex indexed by total degree
// (Y^n = C^{n-p+1} + C^{n-p}, zero for n < p-1).
template <class K>
struct YComplex {
  std::size_t p = 1;
  CochainComplex<K> column;
  std::vector<SparseMatrix<K>> delta;  // delta[q]: C^q -> C^q
  CochainComplex<K> total;
};

template <class K>
YComplex<K> build_Y(const FrobeniusData<K>& fd, std::size_t p, std::size_t n_max, const Limits& limits = {});

// f -> rho^{-1} o f o rho^{(x)q} on Hom(A^{(x)q}, A).
template <class K>
SparseMatrix<K> rho_action(const FrobeniusData<K>& fd, std::size_t q);

// The Hochschild complex with coefficients A^{rho^{p-1}} written in the
// eigenbasis of rho and split by weight l = v - sum u (mod ord).
template <class K>
struct GradedColumns {
  std::size_t p = 1;
  std::vector<CochainComplex<K>> by_weight;  // l = 0..ord-1, tensor degrees 0..top
  std::vector<std::vector<SparseMatrix<K>>> delta;  // restricted horizontal map per weight and degree
};

template <class K>
GradedColumns<K> graded_columns(const FrobeniusData<K>& fd, std::size_t p, std::size_t top, const Limits& limits = {});

// H^n(Y_(p),l) for n <= n_max, from the weight-l total complex.
template <class K>
DimTable graded_Y_dims(const GradedColumns<K>& g, std::size_t l, std::size_t n_max);

// dim{x : rho(x) = (-1)^n x, a x = x rho^n(a)}.
template <class K>
std::size_t remark_cyc_dim(const FrobeniusData<K>& fd, std::size_t n);

struct HHPrediction {
  DimTable from_y;        // Y-cohomology form
  DimTable from_weights;  // eigenspace form; empty dims when no grading
};

template <class K>
HHPrediction predict_hh_TA(const FrobeniusData<K>& fd, std::size_t n_max, const Limits& limits = {});

template <class K>
CheckResult chain_maps_check(const FrobeniusData<K>& fd, std::size_t p_max, std::size_t n_max);
template <class K>
CheckResult verify_theorem_3_2(const FrobeniusData<K>& fd, std::size_t p_max, std::size_t n_max,
                               const Limits& limits = {});
template <class K>
CheckResult verify_proposition_3_4(const FrobeniusData<K>& fd, std::size_t n_max, const Limits& limits = {});
template <class K>
CheckResult verify_corollary_3_5(const FrobeniusData<K>& fd, std::size_t n_max, const Limits& limits = {});
template <class K>
CheckResult verify_remark_3_6(const FrobeniusData<K>& fd, std::size_t n_max, const Limits& limits = {});
template <class K>
CheckResult verify_theorem_3_8(const FrobeniusData<K>& fd, std::size_t n_max, const Limits& limits = {});
template <class K>
CheckResult verify_proposition_3_9(const FrobeniusData<K>& fd, std::size_t p_max, std::size_t n_max,
                                   const Limits& limits = {});
template <class K>
CheckResult verify_theorem_3_10(const FrobeniusData<K>& fd, std::size_t n_max, const Limits& limits = {});
template <class K>
CheckResult verify_theorem_3_15(const FrobeniusData<K>& fd, std::size_t n_max, const Limits& limits = {});
// Taft algebra of order N with parameter w: Nakayama formula, order and the
// C_N-invariants description of HH.
template <class K>
CheckResult taft_invariants_check(const FrobeniusData<K>& fd, std::uint32_t n, const K& w, std::size_t n_max,
                                  const Limits& limits = {});

}  // namespace hh

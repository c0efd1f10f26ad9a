// Exact rank, kernel and solve for sparse matrices.
//
// rank() splits the matrix into connected components of its row/column
// incidence graph and eliminates each block independently (OpenMP over
// blocks). Each block uses Markowitz-style sparse elimination and falls
// back to dense elimination once fill-in makes the active part dense.
// rank_reference() runs the same elimination serially on the whole matrix.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hh/matrix.hpp"

namespace hh {

struct ComplexNotExactlyComposable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankOptions {
  // Over Q, recompute modulo two random primes and require agreement.
  bool certify = false;
  std::uint64_t seed = 1;
  // Switch a block to dense elimination when its active part has at least
  // this density and fits in dense_cell_limit cells.
  double dense_threshold = 0.15;
  std::size_t dense_cell_limit = std::size_t(1) << 26;
};

struct Block {
  std::vector<std::uint32_t> rows, cols;
};

// Connected components of the bipartite incidence graph, ignoring empty
// rows and columns. Ordered by smallest column index.
template <class K>
std::vector<Block> components(const SparseMatrix<K>& m);

template <class K>
std::size_t rank(const SparseMatrix<K>& m, const RankOptions& opt = {});

template <class K>
std::size_t rank_reference(const SparseMatrix<K>& m, const RankOptions& opt = {});

// Rank of a set of sparse rows over `ncols` columns (Markowitz elimination).
template <class K>
std::size_t sparse_rank(std::vector<SparseVector<K>> rows, std::size_t ncols, const RankOptions& opt = {});

template <class K>
std::size_t dense_rank(DenseMatrix<K> m);

template <class K>
struct Rref {
  DenseMatrix<K> reduced;              // reduced row echelon form, zero rows at the bottom
  std::vector<std::uint32_t> pivots;   // pivot column of row i
};

template <class K>
Rref<K> rref(DenseMatrix<K> m);

// A subspace of K^n given by basis columns that restrict to the identity on
// `coordinates` (so coordinates of a member are read off those rows).
template <class K>
struct Subspace {
  SparseMatrix<K> basis;                    // n x dim
  std::vector<std::uint32_t> coordinates;   // size dim, increasing
  std::size_t dim() const { return basis.cols(); }
};

template <class K>
Subspace<K> kernel(const SparseMatrix<K>& m, const FieldSpec& field);

template <class K>
std::vector<std::vector<K>> kernel_basis(const SparseMatrix<K>& m, const FieldSpec& field);

// Some x with m x = b, or nullopt.
template <class K>
std::optional<std::vector<K>> solve(const SparseMatrix<K>& m, const std::vector<K>& b);

// Inverse of a square matrix; throws std::domain_error if singular.
template <class K>
DenseMatrix<K> inverse(const DenseMatrix<K>& m);

// dim ker(d_out) - rank(d_in); requires d_out * d_in = 0.
template <class K>
std::size_t cohomology_dim(const SparseMatrix<K>& d_in, const SparseMatrix<K>& d_out, const RankOptions& opt = {});

}  // namespace hh

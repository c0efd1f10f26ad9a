// Finite-dimensional algebras given by structure constants, their bimodules
// and morphisms.
#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hh/linalg.hpp"
#include "hh/matrix.hpp"

namespace hh {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AssociativityViolation : AlgebraError {
  std::size_t i, j, k;
  AssociativityViolation(std::size_t i_, std::size_t j_, std::size_t k_);
};

struct UnitViolation : AlgebraError {
  std::size_t i;
  explicit UnitViolation(std::size_t i_);
};

struct BimoduleAxiomViolation : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct MorphismViolation : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct NotInvertible : AlgebraError {
  using AlgebraError::AlgebraError;
};

template <class K>
struct StructureConstant {
  std::uint32_t i, j, k;
  K c;  // e_i e_j has coefficient c on e_k
};

template <class K>
struct Preimage {
  std::uint32_t a, b;
  K c;  // coefficient of the target basis element in e_a e_b
};

template <class K>
class Algebra {
 public:
  Algebra() = default;

  // Validates associativity and the unit; throws AssociativityViolation / UnitViolation.
  static Algebra make(const FieldSpec& field, std::vector<std::string> labels,
                      const std::vector<StructureConstant<K>>& mul, std::vector<K> unit, std::string name = {});

  const FieldSpec& field() const { return d_->field; }
  std::size_t dim() const { return d_->dim; }
  const std::vector<std::string>& labels() const { return d_->labels; }
  const std::string& name() const { return d_->name; }
  const std::vector<K>& unit() const { return d_->unit; }

  const SparseVector<K>& product(std::size_t i, std::size_t j) const { return d_->table[i * d_->dim + j]; }
  std::vector<K> multiply(std::span<const K> x, std::span<const K> y) const;
  const SparseMatrix<K>& left_mult(std::size_t i) const { return d_->left[i]; }
  const SparseMatrix<K>& right_mult(std::size_t i) const { return d_->right[i]; }
  SparseMatrix<K> left_mult_by(std::span<const K> a) const;
  SparseMatrix<K> right_mult_by(std::span<const K> a) const;
  const std::vector<Preimage<K>>& preimages(std::size_t k) const { return d_->preimages[k]; }
  std::vector<StructureConstant<K>> structure_constants() const;

  K zero() const { return K::from_int(field(), 0); }
  K one() const { return K::from_int(field(), 1); }
  std::vector<K> basis_vector(std::size_t i) const;

  bool same_as(const Algebra& o) const { return d_ == o.d_; }

 private:
  struct Data {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::string name;
    std::vector<SparseVector<K>> table;
    std::vector<K> unit;
    std::vector<SparseMatrix<K>> left, right;
    std::vector<std::vector<Preimage<K>>> preimages;
  };
  std::shared_ptr<const Data> d_;
};

template <class K>
class AlgebraMorphism {
 public:
  AlgebraMorphism() = default;
  // Columns of `matrix` are the images of the source basis.
  AlgebraMorphism(Algebra<K> source, Algebra<K> target, DenseMatrix<K> matrix);
  static AlgebraMorphism identity(const Algebra<K>& a);

  const Algebra<K>& source() const { return source_; }
  const Algebra<K>& target() const { return target_; }
  const DenseMatrix<K>& matrix() const { return matrix_; }

  // Multiplicative on basis pairs and unital; throws MorphismViolation.
  void validate() const;
  std::vector<K> apply(std::span<const K> x) const { return matrix_.apply(x); }
  std::vector<K> image(std::size_t i) const { return matrix_.column(i); }
  AlgebraMorphism compose(const AlgebraMorphism& inner) const;  // this o inner
  AlgebraMorphism inverse() const;                              // throws NotInvertible
  AlgebraMorphism power(long long n) const;                     // n < 0 uses the inverse
  bool is_identity() const;

 private:
  Algebra<K> source_, target_;
  DenseMatrix<K> matrix_;
};

template <class K>
class Bimodule {
 public:
  Bimodule() = default;
  // left[i], right[i]: dim x dim matrices of x -> e_i x and x -> x e_i.
  Bimodule(Algebra<K> a, std::size_t dim, std::vector<SparseMatrix<K>> left, std::vector<SparseMatrix<K>> right);
  static Bimodule regular(const Algebra<K>& a);

  const Algebra<K>& algebra() const { return a_; }
  std::size_t dim() const { return dim_; }
  const SparseMatrix<K>& left(std::size_t i) const { return left_[i]; }
  const SparseMatrix<K>& right(std::size_t i) const { return right_[i]; }
  SparseMatrix<K> left_by(std::span<const K> a) const;
  SparseMatrix<K> right_by(std::span<const K> a) const;

  // Unitality, associativity and commuting actions; throws BimoduleAxiomViolation.
  void validate() const;

 private:
  Algebra<K> a_;
  std::size_t dim_ = 0;
  std::vector<SparseMatrix<K>> left_, right_;
};

// DM with (a.psi.b)(x) = psi(b x a), in the dual basis.
template <class K>
Bimodule<K> dual_of(const Bimodule<K>& m);

template <class K>
Bimodule<K> dual_bimodule(const Algebra<K>& a) {
  return dual_of(Bimodule<K>::regular(a));
}

// A with a.x.b = f(a) x g(b).
template <class K>
Bimodule<K> twisted_bimodule(const Algebra<K>& a, const AlgebraMorphism<K>& f, const AlgebraMorphism<K>& g);

// Quotient of a space by a span of relations; basis = non-pivot columns of the
// relation span's reduced echelon form.
template <class K>
struct Quotient {
  std::size_t dim = 0;
  SparseMatrix<K> projection;           // dim x ambient
  SparseMatrix<K> section;              // ambient x dim, unit vectors at the kept columns
  std::vector<std::uint32_t> kept;      // kept ambient coordinates
};

template <class K>
Quotient<K> quotient_by(std::size_t ambient, const std::vector<SparseVector<K>>& relations, const FieldSpec& f);

template <class K>
struct TensorQuotient {
  Bimodule<K> module;
  Quotient<K> quotient;  // of the m.dim() * n.dim() space, index x * n.dim() + y
};

template <class K>
TensorQuotient<K> tensor_over_A(const Bimodule<K>& m, const Bimodule<K>& n);

// M / [A, M].
template <class K>
Quotient<K> coinvariants(const Bimodule<K>& m);

// E = A + M with (a+m)(a'+m') = aa' + am' + ma'; basis of A then basis of M.
template <class K>
Algebra<K> split_algebra(const Algebra<K>& a, const Bimodule<K>& m, const std::vector<std::string>& m_labels = {});

template <class K>
Algebra<K> trivial_extension(const Algebra<K>& a);

// Algebra with the same multiplication written in another basis; columns of
// `basis` are the new basis vectors in old coordinates.
template <class K>
Algebra<K> change_basis(const Algebra<K>& a, const DenseMatrix<K>& basis, std::vector<std::string> labels = {});

}  // namespace hh

#include <random>

#include "doctest.h"
#include "hh/linalg.hpp"
#include "oracle.hpp"

using namespace hh;

namespace {
const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec QQ = FieldSpec::rationals();

SparseMatrix<Rational> random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::vector<Triplet<Rational>> t;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 3 == 0)
        t.push_back({std::uint32_t(i), std::uint32_t(j), Rational::from_int(QQ, long(rng() % 7) - 3)});
  return SparseMatrix<Rational>::from_triplets(r, c, std::move(t));
}

SparseMatrix<Fp> reduce(const SparseMatrix<Rational>& m, std::uint32_t p) {
  std::vector<Triplet<Fp>> t;
  for (auto& e : m.triplets()) t.push_back({e.row, e.col, Fp::from_int(FieldSpec::prime_field(p), e.value.value().get_num().get_si())});
  return SparseMatrix<Fp>::from_triplets(m.rows(), m.cols(), std::move(t));
}
}  // namespace

TEST_CASE("trivial ranks") {
  CHECK(rank(SparseMatrix<Fp>(0, 0)) == 0);
  CHECK(rank(SparseMatrix<Fp>::identity(3, F5)) == 3);
  CHECK(rank_reference(SparseMatrix<Fp>::identity(3, F5)) == 3);
}

TEST_CASE("storage invariants: duplicates summed, zeros dropped") {
  std::vector<Triplet<Fp>> t{{0, 0, Fp(2, 5)}, {0, 0, Fp(3, 5)}, {1, 1, Fp(1, 5)}, {1, 1, Fp(1, 5)}};
  auto m = SparseMatrix<Fp>::from_triplets(2, 2, t);
  CHECK(m.nnz() == 1);
  CHECK(m.at(1, 1) == Fp(2, 5));
}

TEST_CASE("rank agrees with dense oracle on random small matrices over F_p") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    std::uint32_t p = (trial % 3 == 0) ? 2 : (trial % 3 == 1 ? 3 : 7);
    double density = 0.1 + 0.8 * double(rng() % 100) / 100.0;
    auto m = oracle::random_fp(rng, r, c, p, density);
    const auto expected = oracle::dense_rank(m);
    CHECK(rank(m) == expected);
    CHECK(rank_reference(m) == expected);
    CHECK(rank(m.transpose()) == expected);
    CHECK(expected <= std::min(r, c));
  }
}

TEST_CASE("sparse elimination path agrees with dense oracle on larger sparse matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    auto m = oracle::random_fp(rng, 120 + rng() % 80, 90 + rng() % 60, 3, 0.02 + 0.01 * (trial % 4));
    const auto expected = oracle::dense_rank(m);
    RankOptions sparse_only;
    sparse_only.dense_cell_limit = 0;
    CHECK(rank(m, sparse_only) == expected);
    CHECK(rank_reference(m, sparse_only) == expected);
    CHECK(rank(m) == expected);
  }
}

TEST_CASE("rational ranks: oracle agreement, certification and modular consistency") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_int_matrix(rng, 1 + rng() % 10, 1 + rng() % 10);
    const auto rq = rank(m);
    CHECK(rq == oracle::dense_rank(m));
    RankOptions cert;
    cert.certify = true;
    CHECK(rank(m, cert) == rq);
    for (std::uint32_t p : {2u, 3u, 5u}) CHECK(rank(reduce(m, p)) <= rq);
  }
}

TEST_CASE("mixed-field entries are an error") {
  std::vector<Triplet<Fp>> t{{0, 0, Fp(1, 5)}, {1, 1, Fp(1, 7)}};
  auto m = SparseMatrix<Fp>::from_triplets(2, 2, t);
  CHECK_THROWS_AS(rank(m), FieldError);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(SparseMatrix<Fp>::identity(2, F5), F5).empty());
  CHECK(kernel_basis(SparseMatrix<Fp>(2, 3), F5).size() == 3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = oracle::random_fp(rng, 1 + rng() % 10, 1 + rng() % 10, 5, 0.4);
    auto k = kernel(m, F5);
    CHECK(k.dim() == m.cols() - oracle::dense_rank(m));
    CHECK((m * k.basis).is_zero());
    CHECK(rank(k.basis) == k.dim());
    auto id = k.basis.select_rows(k.coordinates);
    CHECK(id == SparseMatrix<Fp>::identity(k.dim(), F5));
  }
}

TEST_CASE("solve and inverse") {
  std::vector<Triplet<Rational>> t{{0, 0, Rational::from_int(QQ, 2)}, {0, 1, Rational::from_int(QQ, 1)},
                                   {1, 1, Rational::from_int(QQ, 3)}};
  auto m = SparseMatrix<Rational>::from_triplets(2, 2, t);
  std::vector<Rational> b{Rational::from_int(QQ, 1), Rational::from_int(QQ, 1)};
  auto x = solve(m, b);
  REQUIRE(x);
  CHECK(m.apply(*x) == b);
  auto inv = inverse(m.to_dense());
  CHECK(inv * m.to_dense() == DenseMatrix<Rational>::identity(2, QQ));
  CHECK_THROWS_AS(inverse(SparseMatrix<Rational>(2, 2).to_dense()), std::domain_error);
  CHECK_FALSE(solve(SparseMatrix<Rational>(1, 1), {Rational::from_int(QQ, 1)}));
}

TEST_CASE("cohomology_dim trivial cases") {
  CHECK(cohomology_dim(SparseMatrix<Fp>(1, 0), SparseMatrix<Fp>(0, 1)) == 1);
  auto id = SparseMatrix<Fp>::identity(2, F5);
  CHECK_THROWS_AS(cohomology_dim(id, id), ComplexNotExactlyComposable);
  CHECK(cohomology_dim(SparseMatrix<Fp>(2, 0), id) == 0);
  CHECK(cohomology_dim(id, SparseMatrix<Fp>(0, 2)) == 0);
}

#include "doctest.h"
#include "hh/frobenius.hpp"
#include "hh/zoo.hpp"
#include "oracle.hpp"

using namespace hh;

namespace {
const FieldSpec QQ = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);
const FieldSpec F7 = FieldSpec::prime_field(7);

template <class K>
K eval(const std::vector<K>& phi, const std::vector<K>& v) {
  K s{};
  for (std::size_t i = 0; i < v.size(); ++i) s += phi[i] * v[i];
  return s;
}

void require_all(const CheckResult& r) {
  CAPTURE(r.id);
  for (auto& n : r.notes) MESSAGE(n);
  for (auto& c : r.comparisons) CHECK_MESSAGE(c.holds(), c.what);
  CHECK(r.status == Status::Pass);
}

}  // namespace

TEST_CASE("Frobenius forms of small algebras") {
  auto c2 = find_frobenius(zoo<Rational>("cyclic:2", QQ));
  CHECK(c2.rho.is_identity());
  CHECK(c2.order() == 1);
  CHECK(c2.e_A == 2);
  auto dn = find_frobenius(zoo<Rational>("dual-numbers", QQ));
  CHECK(dn.origin == "dual of x");
  CHECK(dn.rho.is_identity());
  auto k3 = zoo<Rational>("trunc:3", QQ);
  CHECK_THROWS_AS(frobenius_from_form(k3, {Rational::from_int(QQ, 1), {}, {}}), std::invalid_argument);
}

TEST_CASE("Nakayama automorphism: relation, multiplicativity and inner changes") {
  for (const char* name : {"taft:2", "taft:3"}) {
    CAPTURE(name);
    auto a = zoo<Fp>(name, F7);
    auto fd = find_frobenius(a);
    CHECK(nakayama_relation_holds(fd));
    fd.rho.validate();
    // Direct check of phi(y x) = phi(rho(x) y) on random elements.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Fp> x, y;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        x.emplace_back(static_cast<std::uint32_t>(rng() % 7), 7);
        y.emplace_back(static_cast<std::uint32_t>(rng() % 7), 7);
      }
      CHECK(eval(fd.phi, a.multiply(y, x)) == eval(fd.phi, a.multiply(fd.rho.apply(x), y)));
    }
    // phi' = x phi has rho' = rho(x)^{-1} rho rho(x) with x = 1 + g.
    std::vector<Fp> u(a.dim(), Fp(0, 7));
    u[0] = Fp(1, 7);
    u[1] = Fp(2, 7);
    auto fd2 = change_form(fd, u);
    auto ru = fd.rho.apply(u);
    auto ru_inv = fd.rho.apply(u);
    auto lm = a.left_mult_by(ru).to_dense();
    auto inv_m = inverse(lm);
    auto inv_elt = inv_m.apply(a.unit());
    for (std::size_t z = 0; z < a.dim(); ++z) {
      auto expected = a.multiply(a.multiply(inv_elt, fd.rho.image(z)), ru);
      CHECK(fd2.rho.image(z) == expected);
    }
    (void)ru_inv;
  }
  auto m2 = find_frobenius(zoo<Rational>("mat:2", QQ), 8, 5);
  CHECK(nakayama_relation_holds(m2));
}

TEST_CASE("order of rho and the root-of-unity grading") {
  auto fd = find_frobenius(zoo<Fp>("taft:3", F7));
  CHECK(fd.order() == 3);
  CHECK(fd.e_A == 6);
  REQUIRE(try_default_grading(fd));
  REQUIRE(fd.grading.size() == 3);
  for (auto& g : fd.grading) CHECK(g.size() == 3);
  CHECK_THROWS_AS(set_grading(fd, Fp(1, 7)), NotPrimitiveRoot);
  auto t2 = find_frobenius(zoo<Fp>("taft:2", F5));
  CHECK(t2.order() == 2);
  CHECK(t2.e_A == 2);
  // Over Q there is no primitive cube root of unity.
  auto q = find_frobenius(zoo<Rational>("cyclic:3", QQ));
  CHECK(q.order() == 1);
}

TEST_CASE("form map is the Gram transpose") {
  auto a = zoo<Fp>("taft:2", F5);
  auto fd = find_frobenius(a);
  auto fm = form_map(fd);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      CHECK(fm.at(k, i) == eval(fd.phi, a.multiply(a.basis_vector(i), a.basis_vector(k))));
  CHECK(oracle::dense_rank(fm) == a.dim());
}

TEST_CASE("Theta and Psi are chain maps between the resolutions") {
  require_all(chain_maps_check(find_frobenius(zoo<Rational>("dual-numbers", QQ)), 2, 2));
  require_all(chain_maps_check(find_frobenius(zoo<Rational>("cyclic:2", QQ)), 2, 2));
  require_all(chain_maps_check(find_frobenius(zoo<Fp>("taft:2", F5)), 2, 1));
}

TEST_CASE("Y_(p) computes the cohomology of X_(p)") {
  require_all(verify_theorem_3_2(find_frobenius(zoo<Rational>("dual-numbers", QQ)), 3, 3));
  require_all(verify_theorem_3_2(find_frobenius(zoo<Rational>("trunc:3", QQ)), 3, 2));
  require_all(verify_theorem_3_2(find_frobenius(zoo<Fp>("taft:2", F5)), 3, 2));
}

TEST_CASE("first column and the corollary") {
  for (const char* name : {"dual-numbers", "cyclic:2", "trunc:3"}) {
    CAPTURE(name);
    auto fd = find_frobenius(zoo<Rational>(name, QQ));
    require_all(verify_proposition_3_4(fd, 3));
    require_all(verify_corollary_3_5(fd, 3));
    require_all(verify_remark_3_6(fd, 3));
  }
  auto t = find_frobenius(zoo<Fp>("taft:2", F5));
  require_all(verify_proposition_3_4(t, 2));
  require_all(verify_corollary_3_5(t, 2));
  require_all(verify_remark_3_6(t, 2));
}

TEST_CASE("predicted HH(TA) matches the direct computation") {
  auto fd = find_frobenius(zoo<Rational>("dual-numbers", QQ));
  require_all(verify_theorem_3_8(fd, 3));
  auto t = find_frobenius(zoo<Fp>("taft:2", F5));
  REQUIRE(try_default_grading(t));
  require_all(verify_theorem_3_8(t, 3));
  require_all(verify_proposition_3_9(t, 3, 3));
  require_all(verify_theorem_3_10(t, 3));
  require_all(verify_theorem_3_15(t, 3));
}

TEST_CASE("Taft invariants") {
  std::uint32_t n;
  Fp w;
  REQUIRE(parse_taft("taft:2", F5, n, w));
  auto t = find_frobenius(zoo<Fp>("taft:2", F5));
  require_all(taft_invariants_check(t, n, w, 2));
}

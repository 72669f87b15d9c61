#include <doctest.h>

#include <random>

#include "gpi/algebra.hpp"
#include "gpi/error.hpp"
#include "support.hpp"

using namespace gpi;
using test::el;
using test::oracle;

namespace {

AlgebraDescriptor two_by_two_units(std::int64_t p) {
  // e_ij e_kl = delta_jk e_il on basis e11, e12, e21, e22
  AlgebraDescriptor d;
  d.name = "M2";
  d.p = p;
  d.basis = {"e11", "e12", "e21", "e22"};
  d.mul_table.assign(4, std::vector<std::vector<std::int64_t>>(4, std::vector<std::int64_t>(4, 0)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) d.mul_table[i * 2 + j][k * 2 + l][i * 2 + l] = 1;
  d.one = {1, 0, 0, 1};
  return d;
}

std::uint64_t gl_order(std::uint64_t n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (std::uint64_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t out = 1, qi = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    out *= qn - qi;
    qi *= q;
  }
  return out;
}

}  // namespace

TEST_SUITE("fp") {
  TEST_CASE("scalar arithmetic") {
    CHECK(is_prime(65521));
    CHECK_FALSE(is_prime(65523));
    CHECK_FALSE(is_prime(1));
    CHECK(reduce(-1, 7) == 6);
    CHECK(mul_mod(inv_mod(3, 7), 3, 7) == 1);
    CHECK(pow_mod(2, 10, 1000003) == 1024);
  }

  TEST_CASE("elimination") {
    FpMatrix m(2, 3, 5);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 0; m.at(1, 1) = 1; m.at(1, 2) = 1;
    CHECK(rank(m) == 2);
    const auto ns = nullspace(m);
    REQUIRE(ns.rows() == 1);
    const auto image = m.apply(ns.row(0));
    CHECK(image == std::vector<Residue>{0, 0});
    const std::vector<Residue> b = {1, 2};
    const auto x = solve_linear(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);

    FpMatrix sing(2, 2, 3);
    sing.at(0, 0) = 1; sing.at(0, 1) = 2;
    sing.at(1, 0) = 2; sing.at(1, 1) = 1;  // second row = 2 * first
    CHECK_FALSE(inverse(sing));
    const std::vector<Residue> bad = {1, 0};
    CHECK_FALSE(solve_linear(sing, bad));
  }
}

TEST_SUITE("algebra-core") {
  TEST_CASE("build from matrix units") {
    const auto A = Algebra::build(two_by_two_units(3));
    CHECK(A->dim() == 4);
    CHECK(A->one() == el(*A, "e11") + el(*A, "e22"));
  }

  TEST_CASE("associativity failure names the basis triple") {
    AlgebraDescriptor d;
    d.name = "bad";
    d.p = 2;
    d.basis = {"1", "a", "b"};
    d.one = {1, 0, 0};
    d.mul_table = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                   {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}},   // a*a = b, a*b = 0
                   {{0, 0, 1}, {0, 0, 1}, {0, 0, 0}}};  // b*a = b
    // (a a) a = b a = b but a (a a) = a b = 0
    CHECK_THROWS_WITH_AS(Algebra::build(d), doctest::Contains("associativity fails on basis triple (a, a, a)"),
                         InputError);
  }

  TEST_CASE("descriptor validation") {
    auto d = two_by_two_units(4);
    CHECK_THROWS_AS(Algebra::build(d), InputError);
    d = two_by_two_units(3);
    d.one = {1, 0, 0, 0};
    CHECK_THROWS_WITH_AS(Algebra::build(d), doctest::Contains("unity"), InputError);
    d = two_by_two_units(3);
    d.mul_table[0].pop_back();
    CHECK_THROWS_AS(Algebra::build(d), InputError);
  }

  TEST_CASE("product of prime fields") {
    const auto A = product_of_prime_fields(2, 2);
    CHECK(A->dim() == 2);
    CHECK(A->prime() == 2);
    CHECK(A->is_commutative());
  }

  TEST_CASE("standard algebras") {
    const auto gf9 = field_algebra(3, 2, std::vector<std::int64_t>{1, 0, 1});
    CHECK(gf9->dim() == 2);
    const auto m2f3 = standard_algebra(StandardKind::kMatrix, {2, 3, 1, std::nullopt});
    CHECK(m2f3->dim() == 4);
    CHECK_THROWS_WITH_AS(field_algebra(3, 2, std::vector<std::int64_t>{2, 0, 1}), doctest::Contains("reducible"),
                         InputError);
    CHECK_THROWS_AS(field_algebra(3, 0), InputError);
    CHECK(matrix_algebra(2, 2, 2)->dim() == 8);
  }

  TEST_CASE("default modulus") {
    const auto& o = oracle();
    const auto m9 = default_modulus(3, 2);
    CHECK(std::vector<std::int64_t>(m9.begin(), m9.end()) == o["gf9_modulus"].get<std::vector<std::int64_t>>());
    const auto m25 = default_modulus(5, 2);
    CHECK(std::vector<std::int64_t>(m25.begin(), m25.end()) == o["gf25_modulus"].get<std::vector<std::int64_t>>());
  }

  TEST_CASE("multiplication") {
    const auto M = matrix_algebra(2, 3);
    CHECK(el(*M, "e11") * el(*M, "e12") == el(*M, "e12"));
    CHECK((el(*M, "e12") * el(*M, "e12")).is_zero());
    const auto F = field_algebra(3, 2);
    CHECK(test::coords(el(*F, "t") * el(*F, "t")) == oracle()["gf9_t_squared"].get<std::vector<std::int64_t>>());
    CHECK_THROWS_AS(el(*M, "e11") * el(*F, "t"), AlgebraMismatch);
  }

  TEST_CASE("inverse") {
    const auto M = matrix_algebra(2, 3);
    CHECK(*M->inv(M->one()) == M->one());
    CHECK_FALSE(M->inv(el(*M, "e12")));
    const auto F = field_algebra(3, 2);
    const auto inv_t = F->inv(el(*F, "t"));
    REQUIRE(inv_t);
    CHECK(test::coords(*inv_t) == oracle()["gf9_inv_t"].get<std::vector<std::int64_t>>());
    for (const auto& x : F->elements()) CHECK(F->inv(x).has_value() == !x.is_zero());
  }

  TEST_CASE("power") {
    const auto M = matrix_algebra(2, 3);
    const Element a = el(*M, "e11") + el(*M, "e12");
    for (std::uint64_t k = 1; k <= 12; ++k) CHECK(M->pow(a, k) == a);
    CHECK(M->pow(el(*M, "e12"), 0) == M->one());
    const auto F = field_algebra(3, 2);
    CHECK(test::coords(F->pow(el(*F, "t"), 4)) == oracle()["gf9_t4"].get<std::vector<std::int64_t>>());
  }

  TEST_CASE("unit enumeration") {
    CHECK(field_algebra(3, 2)->units().size() == 8);
    CHECK(matrix_algebra(2, 3)->units().size() == oracle()["m2f3_units"].get<std::size_t>());
    CHECK(field_algebra(2, 1)->units().size() == 1);
    const auto units = matrix_algebra(2, 3)->units();
    const auto& A = units.front().algebra();
    for (std::size_t i = 1; i < units.size(); ++i) CHECK(A.index_of(units[i - 1]) < A.index_of(units[i]));
    CHECK_THROWS_AS(matrix_algebra(4, 5)->units(), BudgetExceeded);
  }

  TEST_CASE("unit counts of matrix algebras") {
    struct Case { std::int64_t n, p, k; };
    for (const auto c : {Case{2, 2, 1}, Case{2, 3, 1}, Case{2, 5, 1}, Case{2, 7, 1}, Case{3, 2, 1}, Case{3, 3, 1},
                         Case{2, 2, 2}, Case{2, 3, 2}, Case{1, 3, 3}}) {
      std::uint64_t q = 1;
      for (int i = 0; i < c.k; ++i) q *= static_cast<std::uint64_t>(c.p);
      CAPTURE(c.n);
      CAPTURE(q);
      CHECK(matrix_algebra(c.n, c.p, c.k)->units().size() == gl_order(static_cast<std::uint64_t>(c.n), q));
    }
  }

  TEST_CASE("centralizer and center") {
    const auto M = matrix_algebra(2, 3);
    const Element s[] = {el(*M, "e11")};
    const auto C = M->centralizer(s);
    CHECK(C.size() == oracle()["m2f3_centralizer_e11_dim"].get<std::size_t>());
    CHECK(M->center().size() == oracle()["m2f3_center_dim"].get<std::size_t>());
    const auto F = field_algebra(3, 2);
    const Element t[] = {el(*F, "t")};
    CHECK(F->centralizer(t).size() == 2);

    // closed under multiplication and contains 1
    FpMatrix span(0, M->dim(), M->prime());
    for (const auto& b : C) span.append_row(b.coords());
    CHECK(in_row_space(span, M->one().coords()));
    for (const auto& a : C)
      for (const auto& b : C) CHECK(in_row_space(span, (a * b).coords()));
  }

  TEST_CASE("associativity and unity on random triples") {
    const auto M = matrix_algebra(3, 5);
    std::mt19937_64 rng(7);
    auto rnd = [&] {
      std::vector<std::int64_t> c(M->dim());
      for (auto& x : c) x = static_cast<std::int64_t>(rng() % 5);
      return M->element_from_ints(c);
    };
    for (int i = 0; i < 200; ++i) {
      const auto a = rnd(), b = rnd(), c = rnd();
      CHECK((a * b) * c == a * (b * c));
      CHECK(M->one() * a == a);
      CHECK(a * M->one() == a);
    }
  }

  TEST_CASE("Frobenius power is additive on fields") {
    for (const auto& F : {field_algebra(3, 2), field_algebra(3, 3)}) {
      const auto xs = F->elements();
      for (std::uint64_t e : {3ULL, 9ULL}) {
        for (const auto& a : xs)
          for (const auto& b : xs) CHECK(F->pow(a + b, e) == F->pow(a, e) + F->pow(b, e));
      }
    }
  }

  TEST_CASE("element indexing round-trips") {
    const auto A = matrix_algebra(2, 2);
    for (std::uint64_t i = 0; i < 16; ++i) CHECK(A->index_of(A->element_at(i)) == i);
    CHECK(A->element_at(1) == el(*A, "e11"));
  }
}

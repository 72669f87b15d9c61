#include <doctest.h>

#include "gpi/error.hpp"
#include "gpi/expr.hpp"
#include "gpi/solver.hpp"
#include "support.hpp"

using namespace gpi;
using test::el;
using test::oracle;

namespace {

SolutionSpace solve_power(const AlgebraPtr& A, std::int64_t n) {
  return solve(IdentityTemplate::power(PolyContext::make(A), n));
}

std::vector<AdditiveMap> pair(const AdditiveMap& f, const AdditiveMap& g) { return {f, g}; }

AdditiveMap scalar_map(const Algebra& A, std::int64_t c) { return AdditiveMap::identity(A).scaled(c); }

}  // namespace

TEST_SUITE("fi-solver") {
  TEST_CASE("compiled system sizes") {
    const auto gf5 = PolyContext::make(field_algebra(5, 1));
    const auto s1 = compile(IdentityTemplate::power(gf5, 6));
    CHECK(s1.lhs.rows() == 4);
    CHECK(s1.lhs.cols() == 2);
    CHECK(s1.domain_size == 4);

    const auto m2f5 = PolyContext::make(matrix_algebra(2, 5));
    const auto s2 = compile(IdentityTemplate::power(m2f5, 2));
    CHECK(s2.lhs.rows() == oracle()["m2f5_n2_rows"].get<std::size_t>());
    CHECK(s2.lhs.cols() == 32);

    const auto gf9 = PolyContext::make(field_algebra(3, 2));
    const auto s3 = compile(IdentityTemplate::gx(parse_expr("X", gf9, 1), parse_expr("X^2", gf9, 1)));
    CHECK(s3.lhs.rows() == 18);
    CHECK(s3.lhs.cols() == 4);
  }

  TEST_CASE("template validation") {
    const auto ctx = PolyContext::make(field_algebra(3, 2));
    CHECK_THROWS_WITH_AS(IdentityTemplate::parse(ctx, 1, "all", {{"1", 0, "xinv", "1"}}, "0"),
                         doctest::Contains("units"), InputError);
    CHECK_THROWS_WITH_AS(IdentityTemplate::parse(ctx, 1, "all", {{"xinv", 0, "x", "1"}}, "0"),
                         doctest::Contains("units"), InputError);
    CHECK_THROWS_AS(IdentityTemplate::parse(ctx, 1, "units", {{"1", 1, "x", "1"}}, "0"), InputError);
    CHECK_THROWS_AS(IdentityTemplate::parse(ctx, 1, "everywhere", {{"1", 0, "x", "1"}}, "0"), InputError);
    CHECK_THROWS_AS(IdentityTemplate::parse(ctx, 1, "units", {{"1", 0, "y", "1"}}, "0"), InputError);
  }

  TEST_CASE("golden solutions") {
    const auto gf5 = field_algebra(5, 1);
    const auto s5 = solve_power(gf5, 6);
    CHECK(s5.contains(pair(AdditiveMap::identity(*gf5), AdditiveMap::identity(*gf5))));

    const auto gf9 = field_algebra(3, 2);
    const auto s9 = solve_power(gf9, 12);
    CHECK(s9.contains(pair(AdditiveMap::identity(*gf9), AdditiveMap::frobenius(*gf9, 1))));
    CHECK_FALSE(s9.contains(pair(AdditiveMap::identity(*gf9), AdditiveMap::zero(*gf9))));

    const auto gf2 = field_algebra(2, 1);
    for (std::int64_t n : {1, 3, 4}) {
      CAPTURE(n);
      CHECK(solve_power(gf2, n).contains(pair(AdditiveMap::identity(*gf2), AdditiveMap::identity(*gf2))));
    }
  }

  TEST_CASE("dimensions match the oracle") {
    const auto& o = oracle()["power_identity_dimension"];
    CHECK(solve_power(field_algebra(5, 1), 3).dimension() == o["gf5_n3"].get<std::size_t>());
    CHECK(solve_power(field_algebra(5, 1), 6).dimension() == o["gf5_n6"].get<std::size_t>());
    CHECK(solve_power(field_algebra(7, 1), 4).dimension() == o["gf7_n4"].get<std::size_t>());
    CHECK(solve_power(field_algebra(3, 2), 12).dimension() == o["gf9_n12"].get<std::size_t>());
    CHECK(solve_power(matrix_algebra(2, 3), 3).dimension() == o["m2f3_n3"].get<std::size_t>());
    CHECK(solve_power(matrix_algebra(2, 5), 2).dimension() == o["m2f5_n2"].get<std::size_t>());
  }

  TEST_CASE("right multiplication pairs at n = 2") {
    const auto M = matrix_algebra(2, 5);
    const auto s = solve_power(M, 2);
    for (std::size_t i = 0; i < M->dim(); ++i) {
      const auto r = AdditiveMap::right_mul(M->basis(i));
      CHECK(s.contains(pair(r, r)));
    }
    // a second solve gives the identical echelon basis
    const auto again = solve_power(M, 2);
    CHECK(again.basis_vectors == s.basis_vectors);
  }

  TEST_CASE("zero tuple is always a solution of a homogeneous template") {
    for (const auto& A : {field_algebra(3, 2), matrix_algebra(2, 3)}) {
      const auto s = solve_power(A, 5);
      CHECK(s.consistent);
      CHECK_FALSE(s.particular);
      CHECK(s.contains(pair(AdditiveMap::zero(*A), AdditiveMap::zero(*A))));
    }
  }

  TEST_CASE("soundness: basis tuples re-verify") {
    for (const auto& [A, n] : {std::pair{field_algebra(3, 2), std::int64_t{12}}, std::pair{field_algebra(5, 1), std::int64_t{6}},
                               std::pair{field_algebra(7, 1), std::int64_t{8}}, std::pair{field_algebra(3, 2), std::int64_t{-6}}}) {
      const auto t = IdentityTemplate::power(PolyContext::make(A), n);
      const auto s = solve(t);
      CHECK(s.dimension() > 0);
      for (const auto& tuple : s.basis) {
        CHECK(check_template(t, tuple).holds);
        CHECK(fi_residual(tuple[0], tuple[1], n).holds);
      }
    }
  }

  TEST_CASE("inhomogeneous template") {
    const auto gf9 = field_algebra(3, 2);
    const auto ctx = PolyContext::make(gf9);
    const auto t = IdentityTemplate::gx(parse_expr("X", ctx, 1), parse_expr("X^4", ctx, 1));
    const auto s = solve(t);
    REQUIRE(s.consistent);
    REQUIRE(s.particular);
    CHECK(check_template(t, *s.particular).holds);
    // x f(x) = x^4 forces f = Frobenius away from 0, and f(0) = 0 by additivity
    CHECK(s.dimension() == 0);
    CHECK(s.contains(std::vector<AdditiveMap>{AdditiveMap::frobenius(*gf9, 1)}));

    // x f(x) = 1 has no additive solution since x = 0 gives 0 = 1
    const auto bad = solve(IdentityTemplate::gx(parse_expr("X", ctx, 1), parse_expr("1", ctx, 1)));
    CHECK_FALSE(bad.consistent);
  }

  TEST_CASE("templates from text") {
    const auto M = matrix_algebra(2, 3);
    const auto ctx = PolyContext::make(M);
    // f(x) + x^2 g(x^-1) = 0
    const auto t13 = IdentityTemplate::parse(ctx, 2, "units", {{"1", 0, "x", "1"}, {"x^2", 1, "xinv", "1"}}, "0");
    const auto s13 = solve(t13);
    const auto r = AdditiveMap::right_mul(el(*M, "e12"));
    CHECK(s13.contains(pair(r, r.scaled(-1))));
    // f(x) x^-1 + x g(x^-1) = 0
    const auto t1 = IdentityTemplate::parse(ctx, 2, "units", {{"1", 0, "x", "xinv"}, {"x", 1, "xinv", "1"}}, "0");
    const auto s1 = solve(t1);
    for (const auto& tuple : s1.basis) CHECK(check_template(t1, tuple).holds);
    const auto id = AdditiveMap::identity(*M);
    CHECK(s1.contains(pair(id, id.scaled(-1))));
  }

  TEST_CASE("completeness against exhaustive enumeration") {
    const auto& expected = oracle()["gf3_n4_solutions"];
    const auto gf3 = field_algebra(3, 1);
    const auto s = solve_power(gf3, 4);
    std::vector<std::vector<std::int64_t>> found;
    for (std::int64_t a = 0; a < 3; ++a)
      for (std::int64_t b = 0; b < 3; ++b) {
        const auto f = scalar_map(*gf3, a), g = scalar_map(*gf3, b);
        const bool brute = fi_residual(f, g, 4).holds;
        CHECK(brute == s.contains(pair(f, g)));
        if (brute) found.push_back({a, b});
      }
    CHECK(found == expected.get<std::vector<std::vector<std::int64_t>>>());

    const auto gf2 = field_algebra(2, 1);
    for (std::int64_t n = -3; n <= 6; ++n) {
      const auto s2 = solve_power(gf2, n);
      for (std::int64_t a = 0; a < 2; ++a)
        for (std::int64_t b = 0; b < 2; ++b) {
          const auto f = scalar_map(*gf2, a), g = scalar_map(*gf2, b);
          CHECK(fi_residual(f, g, n).holds == s2.contains(pair(f, g)));
        }
    }
  }

  TEST_CASE("scaling filter and unit generation force zero") {
    struct Case { AlgebraPtr A; std::int64_t n; };
    for (const auto& c : {Case{field_algebra(7, 1), 4}, Case{matrix_algebra(2, 3), 3}, Case{field_algebra(5, 1), 3}}) {
      const auto f = scaling_filter(static_cast<std::uint64_t>(c.A->prime()), c.n);
      REQUIRE(f.forces_zero);
      REQUIRE(units_additively_generate(*c.A).generates);
      CHECK(solve_power(c.A, c.n).dimension() == 0);
    }
  }

  TEST_CASE("field solutions satisfy the b-substitution relation") {
    // f(b) = (-(1-b)^n + b^n + 1) f(1) - g(b)
    for (const auto& [A, n] : {std::pair{field_algebra(5, 1), std::uint64_t{6}}, std::pair{field_algebra(3, 2), std::uint64_t{12}},
                               std::pair{field_algebra(7, 1), std::uint64_t{8}}, std::pair{field_algebra(3, 2), std::uint64_t{4}}}) {
      const auto s = solve_power(A, static_cast<std::int64_t>(n));
      for (const auto& tuple : s.basis) {
        const auto& f = tuple[0];
        const auto& g = tuple[1];
        const auto f1 = f(A->one());
        for (const auto& b : A->elements()) {
          const auto coeff = A->pow(b, n) + A->one() - A->pow(A->one() - b, n);
          CHECK(f(b) == coeff * f1 - g(b));
        }
      }
    }
  }

  TEST_CASE("stacking round trip") {
    const auto M = matrix_algebra(2, 3);
    const auto maps = pair(AdditiveMap::left_mul(el(*M, "e12")), AdditiveMap::right_mul(el(*M, "e21")));
    const auto v = stack_maps(maps);
    CHECK(v.size() == 32);
    const auto back = unstack_maps(*M, v, 2);
    CHECK(back[0] == maps[0]);
    CHECK(back[1] == maps[1]);
  }

  TEST_CASE("elementary decomposition examples") {
    const auto M = matrix_algebra(2, 3);
    const auto id = elementary_decomposition(AdditiveMap::identity(*M));
    REQUIRE(id.success);
    CHECK(id.terms.size() == 1);
    CHECK(AdditiveMap::elementary(*M, id.terms) == AdditiveMap::identity(*M));

    const std::pair<Element, Element> one_term[] = {{el(*M, "e11"), el(*M, "e22")}};
    const auto T = AdditiveMap::elementary(*M, one_term);
    const auto d = elementary_decomposition(T);
    REQUIRE(d.success);
    CHECK(d.terms.size() == 1);
    CHECK(AdditiveMap::elementary(*M, d.terms) == T);

    const auto transpose = AdditiveMap::from_function(*M, [&](const Element& x) {
      return el(*M, "e11").scaled(x[0]) + el(*M, "e21").scaled(x[1]) + el(*M, "e12").scaled(x[2]) +
             el(*M, "e22").scaled(x[3]);
    });
    const auto dt = elementary_decomposition(transpose);
    REQUIRE(dt.success);
    CHECK(dt.terms.size() <= 16);
    const auto back = AdditiveMap::elementary(*M, dt.terms);
    for (const auto& x : M->elements()) CHECK(back(x) == transpose(x));
  }

  TEST_CASE("decomposition of random maps") {
    const auto M = matrix_algebra(2, 3);
    std::mt19937_64 rng(33);
    for (int i = 0; i < 30; ++i) {
      FpMatrix m(4, 4, 3);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = static_cast<Residue>(rng() % 3);
      const AdditiveMap T(*M, m);
      const auto d = elementary_decomposition(T);
      REQUIRE(d.success);
      CHECK(d.terms.size() <= 16);
      CHECK(AdditiveMap::elementary(*M, d.terms) == T);
    }
  }

  TEST_CASE("decomposition fails outside the span") {
    const auto A = product_of_prime_fields(2, 2);
    const auto swap = AdditiveMap::from_function(*A, [&](const Element& x) {
      return A->element_from_ints(std::vector<std::int64_t>{x[1], x[0]});
    });
    const auto d = elementary_decomposition(swap);
    CHECK_FALSE(d.success);
    CHECK_FALSE(d.failure.empty());
    const auto limited = elementary_decomposition(AdditiveMap::identity(*matrix_algebra(2, 3)).scaled(2), 1);
    CHECK(limited.success);
  }

  TEST_CASE("scaling filter") {
    const auto f = scaling_filter(5, 3);
    const auto expected = oracle()["scaling"]["5_3"].get<std::vector<std::int64_t>>();
    CHECK(f.forces_zero);
    CHECK(static_cast<std::int64_t>(f.k) == expected[0]);
    CHECK(f.value == expected[1]);
    CHECK_FALSE(scaling_filter(5, 6).forces_zero);
    CHECK_FALSE(scaling_filter(3, 4).forces_zero);
    // 2 (2^3 - 1) = 0 mod 7, so the least primitive root is used
    const auto g = scaling_filter(7, 5);
    CHECK(g.forces_zero);
    CHECK(g.k == 3);
    CHECK(g.value != 0);
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
      for (std::int64_t n = -10; n <= 30; ++n) {
        const auto h = scaling_filter(p, n);
        CHECK(h.forces_zero == ((n - 2) % static_cast<std::int64_t>(p - 1) != 0));
        if (h.forces_zero) CHECK(h.value != 0);
      }
  }

  TEST_CASE("additive generation by units") {
    const auto& o = oracle()["units_rank"];
    const auto m = units_additively_generate(*matrix_algebra(2, 3));
    CHECK(m.generates);
    CHECK(m.rank == o["m2f3"].get<std::size_t>());
    CHECK(m.units == 48);
    const auto f = units_additively_generate(*field_algebra(3, 2));
    CHECK(f.generates);
    CHECK(f.rank == o["gf9"].get<std::size_t>());
    const auto p = units_additively_generate(*product_of_prime_fields(2, 2));
    CHECK_FALSE(p.generates);
    CHECK(p.rank == 1);
    CHECK(p.units == 1);
  }
}

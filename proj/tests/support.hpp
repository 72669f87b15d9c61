#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpi/algebra.hpp"

namespace test {

/// Frozen values from tests/oracle/derive.py.
inline const nlohmann::json& oracle() {
  static const nlohmann::json j = [] {
    std::ifstream in(GPI_ORACLE_FILE);
    return nlohmann::json::parse(in);
  }();
  return j;
}

inline std::vector<std::int64_t> coords(const gpi::Element& a) {
  return {a.coords().begin(), a.coords().end()};
}

inline gpi::Element el(const gpi::Algebra& A, const std::string& label) { return A.basis(*A.basis_index(label)); }

}  // namespace test

#include <random>

#include "gpi/ncpoly.hpp"

namespace test {

inline gpi::Element random_element(const gpi::Algebra& A, std::mt19937_64& rng) {
  std::vector<std::int64_t> c(A.dim());
  for (auto& x : c) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(A.prime()));
  return A.element_from_ints(c);
}

/// Sum of a few random monomials in X_1..X_m, each of degree at most max_degree.
inline gpi::GenPoly random_poly(const gpi::ContextPtr& ctx, std::size_t m, std::size_t max_degree,
                                std::mt19937_64& rng, std::size_t max_terms = 4) {
  const auto& A = ctx->algebra();
  std::vector<gpi::GenMonomial> terms;
  const std::size_t count = 1 + rng() % max_terms;
  for (std::size_t i = 0; i < count; ++i) {
    gpi::GenMonomial mono;
    const std::size_t s = rng() % (max_degree + 1);
    for (std::size_t j = 0; j < s; ++j) mono.vars.push_back(rng() % m);
    for (std::size_t j = 0; j <= s; ++j) mono.coeffs.push_back(random_element(A, rng));
    terms.push_back(std::move(mono));
  }
  return gpi::GenPoly::from_terms(ctx, m, terms);
}

}  // namespace test

#pragma once

// Binomials mod p, the special polynomials P and Q, and classification of
// exponents n with p > 2, n > 2 and (p - 1) | (n - 2).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpi/ncpoly.hpp"

namespace gpi {

/// C(k, t) mod p by Lucas' theorem. Throws InputError for non-prime p.
Residue binom_mod_p(std::uint64_t k, std::uint64_t t, std::uint64_t p);

/// Exponent of p in n (n > 0).
unsigned p_adic_valuation(std::uint64_t n, std::uint64_t p);

/// e with p^e == n, if n is a power of p (p^0 = 1 counts).
std::optional<unsigned> p_power_exponent(std::uint64_t n, std::uint64_t p);

struct BinomialWitness {
  unsigned m = 0;        // largest m with p^m | k - 1
  Residue residue = 0;   // C(k, p^m + 1) mod p, never zero
};

/// Requires odd prime p, k > 1, gcd(p, k) = 1 and k - 1 not a power of p.
BinomialWitness binomial_witness(std::uint64_t k, std::uint64_t p);

/// Dense polynomial over F_p; coefficient of X^i at index i, trailing zeros trimmed.
class DensePoly {
 public:
  DensePoly(std::vector<Residue> coeffs, Residue p);

  Residue prime() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  Residue coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  const std::vector<Residue>& coefficients() const { return coeffs_; }

  /// Indices of nonzero coefficients.
  std::vector<std::size_t> support() const;

  Residue eval(Residue x) const;
  /// Horner evaluation at an element of a commutative or arbitrary algebra (powers of one element commute).
  Element eval(const Element& x) const;

  DensePoly negate_variable() const;
  bool operator==(const DensePoly&) const = default;

 private:
  std::vector<Residue> coeffs_;
  Residue p_;
};

/// Refuse to build P with more than this many coefficients.
inline constexpr std::uint64_t kMaxDenseDegree = 1u << 22;

/// (1 + X)^n + (1 - X)^n - 2 X^n - 2 over F_p.
DensePoly poly_P(std::uint64_t n, std::uint64_t p);

/// P(x) computed directly from its defining expression.
Element eval_P(std::uint64_t n, const Element& x);

/// Q(X, Y) = a^(p^(l+m)) ((X+Y)^(p^(l+m)) - X^(p^(l+m)) - Y^(p^(l+m)))
///         + a^(p^l) ((X+Y)^(p^l) - X^(p^l) - Y^(p^l)),
/// with a = 1 unless a central coefficient is given. Formal expansion has about 2^(p^(l+m)) words;
/// throws BudgetExceeded beyond max_terms.
GenPoly poly_Q(std::uint64_t p, unsigned l, unsigned m, const ContextPtr& target,
               const std::optional<Element>& a = std::nullopt, double max_terms = 1 << 20);

/// Q(x, y) by repeated squaring, without expanding the polynomial.
Element eval_Q(std::uint64_t p, unsigned l, unsigned m, const Element& x, const Element& y,
               const std::optional<Element>& a = std::nullopt);

enum class ExponentCase { kI, kII };

struct CaseParams {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  ExponentCase kind = ExponentCase::kI;
  unsigned l = 0;
  std::uint64_t k = 0;   // n / p^l
  unsigned m = 0;        // case II only: k - 1 = p^m

  /// p^l k in case I, p^(l+m) + p^l in case II.
  std::uint64_t rebuild() const;
};

/// True iff p > 2, n > 2 and (p - 1) | (n - 2).
bool hard_case_condition(std::uint64_t n, std::uint64_t p);

/// Throws InputError naming the violated part of the condition.
CaseParams classify_case(std::uint64_t n, std::uint64_t p);

struct NonrootSearch {
  AlgebraPtr field;                 // GF(q) with the default modulus
  std::optional<Element> nonroot;   // first x with P(x) != 0
  std::uint64_t scanned = 0;
};

/// Scans GF(q) in lexicographic coordinate order. q must be a power of p.
NonrootSearch find_P_nonroot(std::uint64_t n, std::uint64_t p, std::uint64_t q);

std::string to_string(ExponentCase c);

}  // namespace gpi

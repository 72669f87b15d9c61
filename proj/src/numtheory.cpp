#include "gpi/numtheory.hpp"

#include <cmath>
#include <numeric>

#include "gpi/error.hpp"

namespace gpi {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw InputError("prime " + std::to_string(p) + " exceeds the supported maximum");
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / base) throw InputError("exponent " + std::to_string(base) + "^" + std::to_string(e) + " overflows");
    r *= base;
  }
  return r;
}

// Small binomials C(a, b) mod p for digits a, b < p.
Residue digit_binom(std::uint64_t a, std::uint64_t b, Residue p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  Residue num = 1;
  Residue den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = mul_mod(num, static_cast<Residue>((a - i) % p), p);
    den = mul_mod(den, static_cast<Residue>((i + 1) % p), p);
  }
  return mul_mod(num, inv_mod(den, p), p);
}

GenPoly frobenius_difference(const ContextPtr& ctx, std::uint64_t e) {
  const auto X = GenPoly::variable(ctx, 2, 0);
  const auto Y = GenPoly::variable(ctx, 2, 1);
  return (X + Y).pow(e) - X.pow(e) - Y.pow(e);
}

}  // namespace

Residue binom_mod_p(std::uint64_t k, std::uint64_t t, std::uint64_t p) {
  require_prime(p);
  const auto pr = static_cast<Residue>(p);
  if (t > k) return 0;
  Residue r = 1;
  while (k > 0 || t > 0) {
    r = mul_mod(r, digit_binom(k % p, t % p, pr), pr);
    if (r == 0) return 0;
    k /= p;
    t /= p;
  }
  return r;
}

unsigned p_adic_valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InputError("valuation of 0 is undefined");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::optional<unsigned> p_power_exponent(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return std::nullopt;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

BinomialWitness binomial_witness(std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw InputError("p must be an odd prime");
  if (k <= 1) throw InputError("k must exceed 1");
  if (k % p == 0) throw InputError("gcd(p, k) != 1");
  if (auto e = p_power_exponent(k - 1, p)) {
    throw InputError("k-1 is a power of p: " + std::to_string(k - 1) + " = " + std::to_string(p) + "^" +
                     std::to_string(*e));
  }
  BinomialWitness out;
  out.m = p_adic_valuation(k - 1, p);
  out.residue = binom_mod_p(k, checked_pow(p, out.m) + 1, p);
  if (out.residue == 0) {
    throw Error("C(" + std::to_string(k) + ", p^m + 1) vanishes mod " + std::to_string(p));
  }
  return out;
}

DensePoly::DensePoly(std::vector<Residue> coeffs, Residue p) : coeffs_(std::move(coeffs)), p_(p) {
  for (auto& c : coeffs_) c %= p_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::vector<std::size_t> DensePoly::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.push_back(i);
  return out;
}

Residue DensePoly::eval(Residue x) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_mod(mul_mod(acc, x % p_, p_), *it, p_);
  return acc;
}

Element DensePoly::eval(const Element& x) const {
  const Algebra& A = x.algebra();
  if (A.prime() != p_) throw InputError("characteristic mismatch");
  Element acc = A.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + A.scalar(*it);
  return acc;
}

DensePoly DensePoly::negate_variable() const {
  auto c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = (p_ - c[i]) % p_;
  return DensePoly(std::move(c), p_);
}

DensePoly poly_P(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n >= kMaxDenseDegree) throw BudgetExceeded("poly_P coefficients", static_cast<double>(n) + 1, kMaxDenseDegree);
  const auto pr = static_cast<Residue>(p);
  std::vector<Residue> c(n + 1, 0);
  // Coefficient of X^t in (1+X)^n + (1-X)^n is C(n,t)(1 + (-1)^t).
  for (std::uint64_t t = 0; t <= n; t += 2) c[t] = mul_mod(2 % pr, binom_mod_p(n, t, p), pr);
  c[n] = sub_mod(c[n], 2 % pr, pr);
  c[0] = sub_mod(c[0], 2 % pr, pr);
  return DensePoly(std::move(c), pr);
}

Element eval_P(std::uint64_t n, const Element& x) {
  const Algebra& A = x.algebra();
  const Element one = A.one();
  return A.pow(one + x, n) + A.pow(one - x, n) - A.pow(x, n).scaled(2) - A.scalar(2);
}

GenPoly poly_Q(std::uint64_t p, unsigned l, unsigned m, const ContextPtr& target, const std::optional<Element>& a,
               double max_terms) {
  require_prime(p);
  const Algebra& A = target->algebra();
  if (A.prime() != p) {
    throw InputError("characteristic mismatch: Q over F_" + std::to_string(p) + " but algebra has p = " +
                     std::to_string(A.prime()));
  }
  const std::uint64_t low = checked_pow(p, l);
  const std::uint64_t high = checked_pow(p, l + m);
  const double words = std::ldexp(1.0, static_cast<int>(std::min<std::uint64_t>(high, 4096)));
  if (words > max_terms) throw BudgetExceeded("formal expansion of Q", words, max_terms);

  Element c_high = A.one();
  Element c_low = A.one();
  if (a) {
    if (a->algebra_ptr() != &A) throw AlgebraMismatch();
    for (std::size_t i = 0; i < A.dim(); ++i) {
      if (*a * A.basis(i) != A.basis(i) * *a) throw InputError("coefficient of Q must be central");
    }
    c_high = A.pow(*a, high);
    c_low = A.pow(*a, low);
  }
  const auto high_part = frobenius_difference(target, high);
  const auto low_part = low == high ? high_part : frobenius_difference(target, low);
  return GenPoly::constant(target, 2, c_high) * high_part + GenPoly::constant(target, 2, c_low) * low_part;
}

Element eval_Q(std::uint64_t p, unsigned l, unsigned m, const Element& x, const Element& y,
               const std::optional<Element>& a) {
  const Algebra& A = x.algebra();
  if (y.algebra_ptr() != &A) throw AlgebraMismatch();
  if (A.prime() != p) throw InputError("characteristic mismatch");
  const std::uint64_t low = checked_pow(p, l);
  const std::uint64_t high = checked_pow(p, l + m);
  auto diff = [&](std::uint64_t e) { return A.pow(x + y, e) - A.pow(x, e) - A.pow(y, e); };
  const Element c_high = a ? A.pow(*a, high) : A.one();
  const Element c_low = a ? A.pow(*a, low) : A.one();
  return c_high * diff(high) + c_low * diff(low);
}

std::uint64_t CaseParams::rebuild() const {
  if (kind == ExponentCase::kI) return checked_pow(p, l) * k;
  return checked_pow(p, l + m) + checked_pow(p, l);
}

bool hard_case_condition(std::uint64_t n, std::uint64_t p) {
  return p > 2 && n > 2 && (n - 2) % (p - 1) == 0;
}

CaseParams classify_case(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw InputError("condition requires p > 2");
  if (n <= 2) throw InputError("condition requires n > 2");
  if ((n - 2) % (p - 1) != 0) {
    throw InputError("condition requires (p-1) | (n-2): " + std::to_string(p - 1) + " does not divide " +
                     std::to_string(n - 2));
  }
  CaseParams c;
  c.n = n;
  c.p = p;
  c.l = p_adic_valuation(n, p);
  c.k = n / checked_pow(p, c.l);
  if (auto e = p_power_exponent(c.k - 1, p)) {
    c.kind = ExponentCase::kII;
    c.m = *e;
  } else {
    c.kind = ExponentCase::kI;
  }
  return c;
}

NonrootSearch find_P_nonroot(std::uint64_t n, std::uint64_t p, std::uint64_t q) {
  require_prime(p);
  const auto r = p_power_exponent(q, p);
  if (!r || *r == 0) throw InputError(std::to_string(q) + " is not a positive power of " + std::to_string(p));
  NonrootSearch out;
  out.field = field_algebra(static_cast<std::int64_t>(p), *r);
  const auto P = poly_P(n, p);
  if (P.is_zero()) return out;
  const auto total = *out.field->cardinality();
  for (std::uint64_t i = 0; i < total; ++i) {
    const Element x = out.field->element_at(i);
    ++out.scanned;
    if (!P.eval(x).is_zero()) {
      out.nonroot = x;
      break;
    }
  }
  return out;
}

std::string to_string(ExponentCase c) { return c == ExponentCase::kI ? "I" : "II"; }

}  // namespace gpi

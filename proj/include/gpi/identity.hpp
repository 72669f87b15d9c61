#pragma once

// Deciding identities on a finite algebra by exhaustive or seeded-random substitution.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gpi/maps.hpp"
#include "gpi/ncpoly.hpp"

namespace gpi {

inline constexpr std::uint64_t kDefaultTrials = 10000;

struct CheckOptions {
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = kDefaultTrials;
  double budget = kDefaultBudget;
};

struct Verdict {
  bool holds = true;
  /// First violating assignment in iteration order; empty when holds.
  std::vector<Element> witness;
  /// Assignments evaluated. Exhaustive runs stop at the first violation.
  std::uint64_t checked = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  std::string mode() const;
};

/// Random element with coordinates drawn as rng() % p.
class ElementSampler {
 public:
  ElementSampler(const Algebra& A, std::uint64_t seed);
  Element next();
  /// Rejection-samples until a unit appears; nullopt after many misses.
  std::optional<Element> next_unit(std::uint64_t max_attempts = 1 << 16);

 private:
  const Algebra* algebra_;
  std::mt19937_64 rng_;
};

/// G(x_1..x_m) = 0 for every tested assignment.
Verdict is_gpi(const GenPoly& G, const CheckOptions& options = {});

struct HuaResult {
  Verdict verdict;
  std::uint64_t unit_pairs = 0;
  std::uint64_t admissible = 0;
};

/// a - a b a = (a^-1 + (b^-1 - a)^-1)^-1 over unit pairs (a, b) where every inverse exists.
HuaResult check_hua(const Algebra& A, double budget = kDefaultBudget);

/// f(x) - x^n g(x^-1) = 0 on units.
Verdict fi_residual(const AdditiveMap& f, const AdditiveMap& g, std::int64_t n, const CheckOptions& options = {});

/// sum_j G_j(x) f_j(x) = H(x) on all of A.
Verdict check_gfi(const std::vector<std::pair<GenPoly, AdditiveMap>>& pairs, const GenPoly& H,
                  const CheckOptions& options = {});

/// 2w(2X) - w(X+Y) - w(X-Y) - 2w(X) and w(X+Y) - w(X-Y) - 2w(Y), in two variables.
std::pair<GenPoly, GenPoly> w_coefficients(const GenPoly& w);

struct WIdentityResult {
  Verdict hypothesis;   // f(x^2) = w(x) g(x) for all x
  Verdict conclusion;   // c1(x, y) g(x) = c2(x, y) g(y) for all x, y
};

/// Requires p != 2.
WIdentityResult check_w_identity(const AdditiveMap& f, const AdditiveMap& g, const GenPoly& w,
                                 const CheckOptions& options = {});

/// sum a_i X^2 b_i - sum w(X) a_i X b_i
GenPoly square_twist_poly(const ContextPtr& ctx, std::span<const std::pair<Element, Element>> pairs,
                          const GenPoly& w);

/// Hypotheses of the finiteness criterion for f(x^2) = w(x) f(x).
struct SquareIdentityHypotheses {
  bool odd_characteristic = false;
  bool f_nonzero = false;
  bool w_nonzero = false;
  std::optional<std::size_t> w_degree;
  Verdict identity;

  bool all_hold() const {
    return odd_characteristic && f_nonzero && w_nonzero && w_degree && *w_degree > 1 && identity.holds;
  }
};

SquareIdentityHypotheses check_square_identity_hypotheses(const AdditiveMap& f, const GenPoly& w,
                                                          const CheckOptions& options = {});

}  // namespace gpi

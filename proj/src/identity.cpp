#include "gpi/identity.hpp"

#include <functional>

#include "gpi/error.hpp"

namespace gpi {

namespace {

enum class Domain { kAll, kUnits };

using Predicate = std::function<bool(std::span<const Element>)>;

// Runs `ok` over every tuple (exhaustive, first tuple coordinate most significant)
// or over options.trials random tuples. Stops at the first failure.
Verdict run_check(const Algebra& A, std::size_t arity, Domain domain, const CheckOptions& options,
                  const Predicate& ok, const std::string& what) {
  Verdict v;
  v.sampled = options.sampled;
  if (options.sampled) {
    v.seed = options.seed;
    v.trials = options.trials;
    ElementSampler sampler(A, options.seed);
    std::vector<Element> tuple(arity);
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      for (auto& x : tuple) {
        if (domain == Domain::kUnits) {
          auto u = sampler.next_unit();
          if (!u) throw Error("could not sample a unit of " + A.name());
          x = *u;
        } else {
          x = sampler.next();
        }
      }
      ++v.checked;
      if (!ok(tuple)) {
        v.holds = false;
        v.witness = tuple;
        return v;
      }
    }
    return v;
  }

  A.require_enumerable(what, options.budget, 1);
  const std::vector<Element> pool = domain == Domain::kUnits ? A.units(options.budget) : A.elements(options.budget);
  double total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= static_cast<double>(pool.size());
  if (total > options.budget) throw BudgetExceeded(what, total, options.budget);
  if (pool.empty() && arity > 0) return v;

  std::vector<std::size_t> idx(arity, 0);
  std::vector<Element> tuple(arity, pool.empty() ? A.zero() : pool[0]);
  while (true) {
    ++v.checked;
    if (!ok(tuple)) {
      v.holds = false;
      v.witness = tuple;
      return v;
    }
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++idx[k] < pool.size()) {
        tuple[k] = pool[idx[k]];
        break;
      }
      idx[k] = 0;
      tuple[k] = pool[0];
      if (k == 0) return v;
    }
    if (arity == 0) return v;
  }
}

void require_same(const Algebra& A, const Algebra& B) {
  if (&A != &B) throw AlgebraMismatch();
}

void require_univariate(const GenPoly& g, const std::string& role) {
  if (g.num_vars() != 1) throw InputError(role + " must be a univariate polynomial");
}

}  // namespace

std::string Verdict::mode() const { return sampled ? "sampled" : "exhaustive"; }

ElementSampler::ElementSampler(const Algebra& A, std::uint64_t seed) : algebra_(&A), rng_(seed) {}

Element ElementSampler::next() {
  std::vector<Residue> c(algebra_->dim());
  for (auto& r : c) r = static_cast<Residue>(rng_() % algebra_->prime());
  return algebra_->element(c);
}

std::optional<Element> ElementSampler::next_unit(std::uint64_t max_attempts) {
  for (std::uint64_t i = 0; i < max_attempts; ++i) {
    Element x = next();
    if (algebra_->is_unit(x)) return x;
  }
  return std::nullopt;
}

Verdict is_gpi(const GenPoly& G, const CheckOptions& options) {
  const Algebra& A = G.algebra();
  return run_check(A, G.num_vars(), Domain::kAll, options,
                   [&](std::span<const Element> xs) { return G.eval(xs).is_zero(); },
                   "identity check over " + A.name());
}

HuaResult check_hua(const Algebra& A, double budget) {
  const auto units = A.units(budget);
  HuaResult out;
  out.unit_pairs = static_cast<std::uint64_t>(units.size()) * units.size();
  if (static_cast<double>(out.unit_pairs) > budget) {
    throw BudgetExceeded("unit pairs of " + A.name(), static_cast<double>(out.unit_pairs), budget);
  }
  std::vector<Element> inverses;
  inverses.reserve(units.size());
  for (const auto& u : units) inverses.push_back(*A.inv(u));

  for (std::size_t i = 0; i < units.size(); ++i) {
    const Element& a = units[i];
    const Element& a_inv = inverses[i];
    for (std::size_t j = 0; j < units.size(); ++j) {
      const Element& b = units[j];
      const auto c_inv = A.inv(inverses[j] - a);
      if (!c_inv) continue;
      const auto rhs = A.inv(a_inv + *c_inv);
      if (!rhs) continue;
      ++out.admissible;
      ++out.verdict.checked;
      if (a - a * b * a != *rhs) {
        out.verdict.holds = false;
        out.verdict.witness = {a, b};
        return out;
      }
    }
  }
  return out;
}

Verdict fi_residual(const AdditiveMap& f, const AdditiveMap& g, std::int64_t n, const CheckOptions& options) {
  const Algebra& A = f.algebra();
  require_same(A, g.algebra());
  return run_check(
      A, 1, Domain::kUnits, options,
      [&](std::span<const Element> xs) {
        const Element& x = xs[0];
        const Element x_inv = *A.inv(x);
        const Element xn = n >= 0 ? A.pow(x, static_cast<std::uint64_t>(n)) : A.pow(x_inv, static_cast<std::uint64_t>(-n));
        return f(x) == xn * g(x_inv);
      },
      "functional identity over units of " + A.name());
}

Verdict check_gfi(const std::vector<std::pair<GenPoly, AdditiveMap>>& pairs, const GenPoly& H,
                  const CheckOptions& options) {
  const Algebra& A = H.algebra();
  require_univariate(H, "H");
  for (const auto& [G, f] : pairs) {
    require_univariate(G, "G");
    require_same(A, G.algebra());
    require_same(A, f.algebra());
  }
  return run_check(
      A, 1, Domain::kAll, options,
      [&](std::span<const Element> xs) {
        Element lhs = A.zero();
        for (const auto& [G, f] : pairs) lhs += G.eval(xs) * f(xs[0]);
        return lhs == H.eval(xs);
      },
      "functional identity over " + A.name());
}

std::pair<GenPoly, GenPoly> w_coefficients(const GenPoly& w) {
  require_univariate(w, "w");
  auto at = [&](LinearForm form) {
    const LinearForm images[] = {std::move(form)};
    return w.substitute(images, 2);
  };
  const GenPoly w_2x = at({{0, 2}});
  const GenPoly w_sum = at({{0, 1}, {1, 1}});
  const GenPoly w_diff = at({{0, 1}, {1, -1}});
  const GenPoly w_x = at({{0, 1}});
  const GenPoly w_y = at({{1, 1}});
  return {w_2x.scaled(2) - w_sum - w_diff - w_x.scaled(2), w_sum - w_diff - w_y.scaled(2)};
}

WIdentityResult check_w_identity(const AdditiveMap& f, const AdditiveMap& g, const GenPoly& w,
                                 const CheckOptions& options) {
  const Algebra& A = f.algebra();
  require_same(A, g.algebra());
  require_same(A, w.algebra());
  require_univariate(w, "w");
  if (A.prime() == 2) throw InputError("the derived identity needs characteristic other than 2");

  WIdentityResult out;
  out.hypothesis = run_check(
      A, 1, Domain::kAll, options,
      [&](std::span<const Element> xs) { return f(xs[0] * xs[0]) == w.eval(xs) * g(xs[0]); },
      "hypothesis over " + A.name());
  const auto [c1, c2] = w_coefficients(w);
  out.conclusion = run_check(
      A, 2, Domain::kAll, options,
      [&](std::span<const Element> xy) { return c1.eval(xy) * g(xy[0]) == c2.eval(xy) * g(xy[1]); },
      "derived identity over pairs of " + A.name());
  return out;
}

GenPoly square_twist_poly(const ContextPtr& ctx, std::span<const std::pair<Element, Element>> pairs,
                          const GenPoly& w) {
  require_univariate(w, "w");
  const GenPoly X = GenPoly::variable(ctx, 1, 0);
  GenPoly out(ctx, 1);
  for (const auto& [a, b] : pairs) {
    const GenPoly ca = GenPoly::constant(ctx, 1, a);
    const GenPoly cb = GenPoly::constant(ctx, 1, b);
    out = out + ca * X * X * cb - w * ca * X * cb;
  }
  return out;
}

SquareIdentityHypotheses check_square_identity_hypotheses(const AdditiveMap& f, const GenPoly& w,
                                                          const CheckOptions& options) {
  const Algebra& A = f.algebra();
  require_same(A, w.algebra());
  require_univariate(w, "w");
  SquareIdentityHypotheses h;
  h.odd_characteristic = A.prime() != 2;
  h.f_nonzero = !(f == AdditiveMap::zero(A));
  h.w_nonzero = !w.is_zero();
  if (h.w_nonzero) h.w_degree = w.degree().value();
  h.identity = run_check(
      A, 1, Domain::kAll, options,
      [&](std::span<const Element> xs) { return f(xs[0] * xs[0]) == w.eval(xs) * f(xs[0]); },
      "square identity over " + A.name());
  return h;
}

}  // namespace gpi

#include "gpi/solver.hpp"

#include "gpi/error.hpp"
#include "gpi/expr.hpp"

namespace gpi {

namespace {

GenPoly two_vars(const GenPoly& g, const char* role) {
  if (g.num_vars() > 2) throw InputError(std::string(role) + " may only use the variables x and xinv");
  return g.with_num_vars(2);
}

Residue signed_pow(Residue k, std::int64_t e, Residue p) {
  if (e >= 0) return pow_mod(k, static_cast<std::uint64_t>(e), p);
  return pow_mod(inv_mod(k, p), static_cast<std::uint64_t>(-(e + 1)) + 1, p);
}

Residue least_primitive_root(Residue p) {
  if (p == 2) return 1;
  std::vector<Residue> factors;
  Residue m = p - 1;
  for (Residue q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    factors.push_back(q);
    while (m % q == 0) m /= q;
  }
  if (m > 1) factors.push_back(m);
  for (Residue g = 2; g < p; ++g) {
    bool primitive = true;
    for (Residue q : factors) primitive = primitive && pow_mod(g, (p - 1) / q, p) != 1;
    if (primitive) return g;
  }
  throw Error("no primitive root found");
}

}  // namespace

IdentityTemplate::IdentityTemplate(ContextPtr ctx, std::size_t unknowns, TemplateDomain domain,
                                   std::vector<TemplateTerm> terms, GenPoly rhs)
    : ctx_(std::move(ctx)), unknowns_(unknowns), domain_(domain), terms_(std::move(terms)), rhs_(two_vars(rhs, "rhs")) {
  if (unknowns_ == 0) throw InputError("template needs at least one unknown map");
  bool uses_inverse = rhs_.uses_variable(1);
  for (auto& t : terms_) {
    t.L = two_vars(t.L, "L");
    t.R = two_vars(t.R, "R");
    if (t.L.context() != ctx_ || t.R.context() != ctx_) throw AlgebraMismatch();
    if (t.slot >= unknowns_) {
      throw InputError("term refers to map slot " + std::to_string(t.slot) + " but there are only " +
                       std::to_string(unknowns_) + " unknowns");
    }
    uses_inverse = uses_inverse || t.arg == MapArgument::kXinv || t.L.uses_variable(1) || t.R.uses_variable(1);
  }
  if (rhs_.context() != ctx_) throw AlgebraMismatch();
  if (uses_inverse && domain_ == TemplateDomain::kAll) {
    throw InputError("xinv is only defined on units; use domain \"units\"");
  }
}

IdentityTemplate IdentityTemplate::parse(ContextPtr ctx, std::size_t unknowns, const std::string& domain,
                                         const std::vector<TextTerm>& terms, const std::string& rhs) {
  TemplateDomain dom;
  if (domain == "units") {
    dom = TemplateDomain::kUnits;
  } else if (domain == "all") {
    dom = TemplateDomain::kAll;
  } else {
    throw InputError("domain must be \"units\" or \"all\", got \"" + domain + "\"");
  }
  std::vector<TemplateTerm> parsed;
  for (const auto& t : terms) {
    MapArgument arg;
    if (t.arg == "x") {
      arg = MapArgument::kX;
    } else if (t.arg == "xinv") {
      arg = MapArgument::kXinv;
    } else {
      throw InputError("term argument must be \"x\" or \"xinv\", got \"" + t.arg + "\"");
    }
    parsed.push_back({parse_expr(t.L, ctx, 2, VariableNaming::kTemplate), t.slot, arg,
                      parse_expr(t.R, ctx, 2, VariableNaming::kTemplate)});
  }
  GenPoly r = parse_expr(rhs, ctx, 2, VariableNaming::kTemplate);
  return IdentityTemplate(std::move(ctx), unknowns, dom, std::move(parsed), std::move(r));
}

IdentityTemplate IdentityTemplate::power(ContextPtr ctx, std::int64_t n) {
  const GenPoly one = GenPoly::integer(ctx, 2, 1);
  const GenPoly xn = n >= 0 ? GenPoly::variable(ctx, 2, 0).pow(static_cast<std::uint64_t>(n))
                            : GenPoly::variable(ctx, 2, 1).pow(static_cast<std::uint64_t>(-(n + 1)) + 1);
  std::vector<TemplateTerm> terms;
  terms.push_back({one, 0, MapArgument::kX, one});
  terms.push_back({-xn, 1, MapArgument::kXinv, one});
  GenPoly zero(ctx, 2);
  return IdentityTemplate(std::move(ctx), 2, TemplateDomain::kUnits, std::move(terms), std::move(zero));
}

IdentityTemplate IdentityTemplate::gx(const GenPoly& G, const GenPoly& H) {
  if (G.num_vars() != 1 || H.num_vars() != 1) throw InputError("G and H must be univariate");
  if (G.context() != H.context()) throw AlgebraMismatch();
  const auto& ctx = G.context();
  std::vector<TemplateTerm> terms;
  terms.push_back({G.with_num_vars(2), 0, MapArgument::kX, GenPoly::integer(ctx, 2, 1)});
  return IdentityTemplate(ctx, 1, TemplateDomain::kAll, std::move(terms), H.with_num_vars(2));
}

std::vector<Element> IdentityTemplate::domain_elements(double budget) const {
  return domain_ == TemplateDomain::kUnits ? algebra().units(budget) : algebra().elements(budget);
}

Element IdentityTemplate::homogeneous_residual(std::span<const AdditiveMap> maps, const Element& x) const {
  if (maps.size() != unknowns_) throw InputError("expected " + std::to_string(unknowns_) + " maps");
  const Algebra& A = algebra();
  const Element xi = domain_ == TemplateDomain::kUnits ? *A.inv(x) : A.zero();
  const Element vars[] = {x, xi};
  Element out = A.zero();
  for (const auto& t : terms_) {
    const Element& y = t.arg == MapArgument::kX ? x : xi;
    out += t.L.eval(vars) * maps[t.slot](y) * t.R.eval(vars);
  }
  return out;
}

Element IdentityTemplate::residual(std::span<const AdditiveMap> maps, const Element& x) const {
  const Algebra& A = algebra();
  const Element xi = domain_ == TemplateDomain::kUnits ? *A.inv(x) : A.zero();
  const Element vars[] = {x, xi};
  return homogeneous_residual(maps, x) - rhs_.eval(vars);
}

LinearSystem compile(const IdentityTemplate& t, double budget) {
  const Algebra& A = t.algebra();
  const std::size_t d = A.dim();
  const Residue p = A.prime();
  const std::size_t cols = t.unknowns() * d * d;
  const auto domain = t.domain_elements(budget);
  if (static_cast<double>(domain.size()) * static_cast<double>(d) * static_cast<double>(cols) > 64.0 * budget) {
    throw BudgetExceeded("linear system entries", static_cast<double>(domain.size() * d * cols), 64.0 * budget);
  }

  LinearSystem sys;
  sys.domain_size = domain.size();
  sys.lhs = FpMatrix(0, cols, p);
  std::vector<Element> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(A.basis(i));

  std::vector<std::uint64_t> acc(d * cols);
  std::vector<Residue> row(cols);
  for (const Element& x : domain) {
    const Element xi = t.domain() == TemplateDomain::kUnits ? *A.inv(x) : A.zero();
    const Element vars[] = {x, xi};
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& term : t.terms()) {
      const Element Lv = term.L.eval(vars);
      const Element Rv = term.R.eval(vars);
      const Element& y = term.arg == MapArgument::kX ? x : xi;
      const std::size_t base = term.slot * d * d;
      for (std::size_t i = 0; i < d; ++i) {
        const Element c = Lv * basis[i] * Rv;
        for (std::size_t r = 0; r < d; ++r) {
          if (c[r] == 0) continue;
          for (std::size_t j = 0; j < d; ++j) {
            if (y[j] == 0) continue;
            auto& slot = acc[r * cols + base + i * d + j];
            slot = (slot + static_cast<std::uint64_t>(c[r]) * y[j]) % p;
          }
        }
      }
    }
    const Element b = t.rhs().eval(vars);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < cols; ++c) row[c] = static_cast<Residue>(acc[r * cols + c]);
      sys.lhs.append_row(row);
      sys.rhs.push_back(b[r]);
    }
  }
  return sys;
}

std::vector<Residue> stack_maps(std::span<const AdditiveMap> maps) {
  std::vector<Residue> v;
  for (const auto& m : maps) {
    const auto& M = m.matrix();
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) v.push_back(M.at(i, j));
  }
  return v;
}

std::vector<AdditiveMap> unstack_maps(const Algebra& A, std::span<const Residue> v, std::size_t unknowns) {
  const std::size_t d = A.dim();
  if (v.size() != unknowns * d * d) throw InputError("stacked vector has the wrong length");
  std::vector<AdditiveMap> out;
  for (std::size_t s = 0; s < unknowns; ++s) {
    FpMatrix M(d, d, A.prime());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) M.at(i, j) = v[s * d * d + i * d + j];
    out.emplace_back(A, std::move(M));
  }
  return out;
}

bool SolutionSpace::contains(std::span<const AdditiveMap> maps) const {
  if (!consistent) return false;
  if (maps.size() != unknowns) return false;
  for (const auto& m : maps)
    if (&m.algebra() != algebra) throw AlgebraMismatch();
  auto v = stack_maps(maps);
  const Residue p = algebra->prime();
  if (particular) {
    const auto base = stack_maps(*particular);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = sub_mod(v[i], base[i], p);
  }
  if (basis_vectors.rows() == 0) {
    for (Residue r : v)
      if (r != 0) return false;
    return true;
  }
  return in_row_space(basis_vectors, v);
}

SolutionSpace solve(const IdentityTemplate& t, double budget) {
  const Algebra& A = t.algebra();
  const auto sys = compile(t, budget);
  SolutionSpace out;
  out.algebra = &A;
  out.unknowns = t.unknowns();
  out.basis_vectors = nullspace(sys.lhs);

  bool homogeneous = true;
  for (Residue r : sys.rhs) homogeneous = homogeneous && r == 0;
  if (!homogeneous) {
    const auto x = solve_linear(sys.lhs, sys.rhs);
    if (!x) {
      out.consistent = false;
      out.basis_vectors = FpMatrix(0, sys.lhs.cols(), A.prime());
      return out;
    }
    out.particular = unstack_maps(A, *x, t.unknowns());
  }
  for (std::size_t r = 0; r < out.basis_vectors.rows(); ++r) {
    out.basis.push_back(unstack_maps(A, out.basis_vectors.row(r), t.unknowns()));
  }

  const auto domain = t.domain_elements(budget);
  for (const Element& x : domain) {
    for (const auto& maps : out.basis) {
      if (!t.homogeneous_residual(maps, x).is_zero()) throw Error("solution basis failed re-verification");
    }
    if (out.particular && !t.residual(*out.particular, x).is_zero()) {
      throw Error("particular solution failed re-verification");
    }
  }
  return out;
}

Verdict check_template(const IdentityTemplate& t, std::span<const AdditiveMap> maps, double budget) {
  Verdict v;
  for (const Element& x : t.domain_elements(budget)) {
    ++v.checked;
    if (!t.residual(maps, x).is_zero()) {
      v.holds = false;
      v.witness = {x};
      break;
    }
  }
  return v;
}

Decomposition elementary_decomposition(const AdditiveMap& T, std::size_t max_terms) {
  const Algebra& A = T.algebra();
  const std::size_t d = A.dim();
  const Residue p = A.prime();
  if (max_terms == 0) max_terms = d * d;

  // Column a*d+b holds the entries of L_{e_a} R_{e_b}.
  FpMatrix K(d * d, d * d, p);
  std::vector<FpMatrix> right;
  for (std::size_t b = 0; b < d; ++b) right.push_back(A.right_mul_matrix(A.basis(b)));
  for (std::size_t a = 0; a < d; ++a) {
    const FpMatrix La = A.left_mul_matrix(A.basis(a));
    for (std::size_t b = 0; b < d; ++b) {
      const FpMatrix LR = La * right[b];
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) K.at(r * d + c, a * d + b) = LR.at(r, c);
    }
  }
  std::vector<Residue> target;
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) target.push_back(T.matrix().at(r, c));

  Decomposition out;
  const auto coeffs = solve_linear(K, target);
  if (!coeffs) {
    out.failure = "map is not in the span of the operators x -> a x b";
    return out;
  }
  FpMatrix C(d, d, p);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) C.at(a, b) = (*coeffs)[a * d + b];

  // C = C[:, pivots] * rref(C) gives rank(C) terms.
  const RowEchelon ech = rref(C);
  const std::size_t r = ech.pivots.size();
  if (r > max_terms) {
    out.failure = "decomposition needs " + std::to_string(r) + " terms, more than the limit " + std::to_string(max_terms);
    return out;
  }
  for (std::size_t k = 0; k < r; ++k) {
    Element a = A.zero();
    Element b = A.zero();
    for (std::size_t i = 0; i < d; ++i) {
      a += A.basis(i).scaled(C.at(i, ech.pivots[k]));
      b += A.basis(i).scaled(ech.reduced.at(k, i));
    }
    out.terms.emplace_back(std::move(a), std::move(b));
  }
  if (!(AdditiveMap::elementary(A, out.terms) == T)) throw Error("decomposition failed to recompose");
  out.success = true;
  return out;
}

ScalingFilter scaling_filter(std::uint64_t p, std::int64_t n) {
  if (!is_prime(p) || p > kMaxPrime) throw InputError(std::to_string(p) + " is not a supported prime");
  const auto pr = static_cast<Residue>(p);
  const std::int64_t e = n - 2;
  const auto q = static_cast<std::int64_t>(p - 1);
  ScalingFilter out;
  if (((e % q) + q) % q == 0) return out;
  out.forces_zero = true;
  auto value = [&](Residue k) { return mul_mod(k, sub_mod(signed_pow(k, e, pr), 1, pr), pr); };
  Residue k = 2;
  if (value(k) == 0) k = least_primitive_root(pr);
  out.k = k;
  out.value = value(k);
  return out;
}

UnitGeneration units_additively_generate(const Algebra& A, double budget) {
  const auto units = A.units(budget);
  FpMatrix M(0, A.dim(), A.prime());
  for (const auto& u : units) M.append_row(u.coords());
  UnitGeneration out;
  out.units = units.size();
  out.rank = units.empty() ? 0 : rank(M);
  out.generates = out.rank == A.dim();
  return out;
}

}  // namespace gpi

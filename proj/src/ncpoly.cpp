#include "gpi/ncpoly.hpp"

#include <cassert>
#include <cmath>

#include "gpi/error.hpp"

namespace gpi {

// ---------------------------------------------------------------- PolyContext

std::shared_ptr<const PolyContext> PolyContext::make(AlgebraPtr algebra, double budget) {
  if (!algebra) throw InputError("null algebra");
  std::shared_ptr<PolyContext> ctx(new PolyContext());
  const Algebra& A = *algebra;
  const Residue p = A.prime();
  const std::size_t d = A.dim();
  ctx->algebra_ = algebra;
  ctx->center_basis_ = A.center();
  const std::size_t c = ctx->center_basis_.size();

  // The normal form needs Z(A) to be a field: every nonzero central element must be a unit.
  const double center_size = std::pow(static_cast<double>(p), static_cast<double>(c));
  if (center_size > budget) throw BudgetExceeded("center enumeration of " + A.name(), center_size, budget);
  const auto count = static_cast<std::uint64_t>(center_size);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    Element z = A.zero();
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < c; ++i) {
      z += ctx->center_basis_[i].scaled(static_cast<std::int64_t>(rest % p));
      rest /= p;
    }
    if (!A.is_unit(z)) {
      throw InputError("center of " + A.name() + " is not a field (" + std::to_string(c) +
                       "-dimensional center has zero divisors); generalized polynomials need a field center");
    }
  }

  // Greedy Z-basis of A starting from the unity.
  FpMatrix spanned(0, d, p);
  std::vector<Element> candidates{A.one()};
  for (std::size_t i = 0; i < d; ++i) candidates.push_back(A.basis(i));
  for (const auto& u : candidates) {
    FpMatrix trial = spanned;
    for (const auto& z : ctx->center_basis_) trial.append_row((z * u).coords());
    if (rank(trial) > rank(spanned)) {
      spanned = std::move(trial);
      ctx->module_basis_.push_back(u);
    }
    if (rank(spanned) == d) break;
  }
  const std::size_t r = ctx->module_basis_.size();
  assert(r * c == d);

  // Column (j * c + i) of B is z_i u_j; expansion_ = B^{-1}.
  FpMatrix B(d, d, p);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < c; ++i) {
      const auto v = ctx->center_basis_[i] * ctx->module_basis_[j];
      for (std::size_t k = 0; k < d; ++k) B.at(k, j * c + i) = v[k];
    }
  auto inv = inverse(B);
  if (!inv) throw Error("module basis construction failed");
  ctx->expansion_ = std::move(*inv);

  ctx->module_products_.resize(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      ctx->module_products_[i * r + j] = ctx->expand(ctx->module_basis_[i] * ctx->module_basis_[j]);

  ctx->center_products_.resize(c * c);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      const auto terms = ctx->expand(ctx->center_basis_[a] * ctx->center_basis_[b]);
      CenterCoords z(c, 0);
      for (const auto& t : terms) {
        assert(t.slot == 0);
        z = t.coeff;
      }
      ctx->center_products_[a * c + b] = std::move(z);
    }
  return ctx;
}

std::vector<PolyContext::SlotTerm> PolyContext::expand(const Element& a) const {
  if (a.algebra_ptr() != algebra_.get()) throw AlgebraMismatch();
  const auto y = expansion_.apply(a.coords());
  const std::size_t c = center_dim();
  std::vector<SlotTerm> out;
  for (std::size_t j = 0; j < module_rank(); ++j) {
    CenterCoords z(y.begin() + static_cast<std::ptrdiff_t>(j * c), y.begin() + static_cast<std::ptrdiff_t>((j + 1) * c));
    if (!center_is_zero(z)) out.push_back({static_cast<std::uint32_t>(j), std::move(z)});
  }
  return out;
}

Element PolyContext::center_element(const CenterCoords& z) const {
  Element out = algebra_->zero();
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0) out += center_basis_[i].scaled(z[i]);
  return out;
}

CenterCoords PolyContext::center_mul(const CenterCoords& a, const CenterCoords& b) const {
  const std::size_t c = center_dim();
  const Residue p = algebra_->prime();
  std::vector<std::uint64_t> acc(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < c; ++j) {
      if (b[j] == 0) continue;
      const std::uint64_t w = static_cast<std::uint64_t>(a[i]) * b[j] % p;
      const auto& prod = center_products_[i * c + j];
      for (std::size_t k = 0; k < c; ++k) acc[k] += w * prod[k];
    }
  }
  CenterCoords out(c);
  for (std::size_t k = 0; k < c; ++k) out[k] = static_cast<Residue>(acc[k] % p);
  return out;
}

CenterCoords PolyContext::center_scale(const CenterCoords& a, Residue s) const {
  CenterCoords out = a;
  for (auto& v : out) v = mul_mod(v, s, algebra_->prime());
  return out;
}

bool PolyContext::center_is_zero(const CenterCoords& a) const {
  for (auto v : a)
    if (v != 0) return false;
  return true;
}

bool PolyContext::center_independent(std::span<const Element> elements) const {
  FpMatrix rows(0, algebra_->dim(), algebra_->prime());
  for (const auto& a : elements)
    for (const auto& z : center_basis_) rows.append_row((z * a).coords());
  return rank(rows) == elements.size() * center_dim();
}

// ---------------------------------------------------------------- Degree

std::size_t Degree::value() const {
  if (is_minus_infinity()) throw Error("degree of the zero polynomial is -infinity");
  return static_cast<std::size_t>(value_);
}

Degree Degree::operator+(const Degree& rhs) const {
  if (is_minus_infinity() || rhs.is_minus_infinity()) return minus_infinity();
  return Degree(static_cast<std::size_t>(value_ + rhs.value_));
}

std::string to_string(const Degree& d) { return d.is_minus_infinity() ? "-inf" : std::to_string(d.value()); }

// ---------------------------------------------------------------- GenPoly

GenPoly::GenPoly(ContextPtr ctx, std::size_t num_vars) : ctx_(std::move(ctx)), num_vars_(num_vars) {
  if (!ctx_) throw InputError("null polynomial context");
}

void GenPoly::accumulate(TermKey&& key, const CenterCoords& coeff) {
  if (ctx_->center_is_zero(coeff)) return;
  auto [it, inserted] = canon_.try_emplace(std::move(key), coeff);
  if (inserted) return;
  const Residue p = ctx_->algebra().prime();
  for (std::size_t i = 0; i < coeff.size(); ++i) it->second[i] = add_mod(it->second[i], coeff[i], p);
  if (ctx_->center_is_zero(it->second)) canon_.erase(it);
}

void GenPoly::accumulate(const TermKey& key, const CenterCoords& coeff) {
  TermKey copy = key;
  accumulate(std::move(copy), coeff);
}

GenPoly GenPoly::monomial(ContextPtr ctx, std::size_t num_vars, std::span<const Element> coeffs,
                          std::span<const std::size_t> vars) {
  if (coeffs.size() != vars.size() + 1) throw InputError("a monomial of degree s needs s+1 coefficients");
  for (auto v : vars) {
    if (v >= num_vars) throw InputError("variable index " + std::to_string(v + 1) + " exceeds " + std::to_string(num_vars));
  }
  GenPoly out(ctx, num_vars);
  std::vector<std::vector<PolyContext::SlotTerm>> expansions;
  for (const auto& a : coeffs) {
    expansions.push_back(ctx->expand(a));
    if (expansions.back().empty()) return out;
  }
  TermKey key;
  key.word.assign(vars.begin(), vars.end());
  key.slots.assign(coeffs.size(), 0);
  std::vector<std::size_t> pick(coeffs.size(), 0);
  while (true) {
    CenterCoords z = expansions[0][pick[0]].coeff;
    key.slots[0] = expansions[0][pick[0]].slot;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
      z = ctx->center_mul(z, expansions[i][pick[i]].coeff);
      key.slots[i] = expansions[i][pick[i]].slot;
    }
    out.accumulate(key, z);
    std::size_t pos = coeffs.size();
    while (pos-- > 0) {
      if (++pick[pos] < expansions[pos].size()) break;
      pick[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

GenPoly GenPoly::constant(ContextPtr ctx, std::size_t num_vars, const Element& a) {
  const Element coeffs[] = {a};
  return monomial(std::move(ctx), num_vars, coeffs, {});
}

GenPoly GenPoly::integer(ContextPtr ctx, std::size_t num_vars, std::int64_t n) {
  const Element a = ctx->algebra().scalar(n);
  return constant(std::move(ctx), num_vars, a);
}

GenPoly GenPoly::variable(ContextPtr ctx, std::size_t num_vars, std::size_t var) {
  const Element& one = ctx->algebra().one();
  const Element coeffs[] = {one, one};
  const std::size_t vars[] = {var};
  return monomial(std::move(ctx), num_vars, coeffs, vars);
}

GenPoly GenPoly::from_terms(ContextPtr ctx, std::size_t num_vars, std::span<const GenMonomial> terms) {
  GenPoly out(ctx, num_vars);
  for (const auto& t : terms) out = out + monomial(ctx, num_vars, t.coeffs, t.vars);
  return out;
}

Degree GenPoly::degree() const {
  if (canon_.empty()) return Degree::minus_infinity();
  return Degree(canon_.rbegin()->first.word.size());
}

GenPoly GenPoly::homogeneous_part(std::size_t j) const {
  GenPoly out(ctx_, num_vars_);
  for (const auto& [key, z] : canon_)
    if (key.word.size() == j) out.canon_.emplace(key, z);
  return out;
}

Element GenPoly::constant_term() const {
  Element out = ctx_->algebra().zero();
  for (const auto& [key, z] : canon_) {
    if (!key.word.empty()) break;
    out += ctx_->center_element(z) * ctx_->module_basis()[key.slots[0]];
  }
  return out;
}

bool GenPoly::is_multilinear() const {
  for (const auto& [key, z] : canon_) {
    if (key.word.size() != num_vars_) return false;
    std::vector<bool> seen(num_vars_, false);
    for (auto v : key.word) {
      if (seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

bool GenPoly::uses_variable(std::size_t var) const {
  for (const auto& [key, z] : canon_)
    for (auto v : key.word)
      if (v == var) return true;
  return false;
}

GenPoly GenPoly::with_num_vars(std::size_t m) const {
  if (m < num_vars_) {
    for (std::size_t v = m; v < num_vars_; ++v)
      if (uses_variable(v)) throw InputError("cannot drop a variable that occurs in the polynomial");
  }
  GenPoly out = *this;
  out.num_vars_ = m;
  return out;
}

void GenPoly::check_compatible(const GenPoly& rhs) const {
  if (ctx_->algebra_ptr() != rhs.ctx_->algebra_ptr()) throw AlgebraMismatch();
}

GenPoly GenPoly::operator+(const GenPoly& rhs) const {
  check_compatible(rhs);
  GenPoly out = with_num_vars(std::max(num_vars_, rhs.num_vars_));
  for (const auto& [key, z] : rhs.canon_) out.accumulate(key, z);
  return out;
}

GenPoly GenPoly::operator-() const { return scaled(-1); }

GenPoly GenPoly::operator-(const GenPoly& rhs) const { return *this + (-rhs); }

GenPoly GenPoly::scaled(std::int64_t n) const {
  const Residue s = reduce(n, ctx_->algebra().prime());
  GenPoly out(ctx_, num_vars_);
  if (s == 0) return out;
  for (const auto& [key, z] : canon_) out.canon_.emplace(key, ctx_->center_scale(z, s));
  return out;
}

GenPoly GenPoly::operator*(const GenPoly& rhs) const {
  check_compatible(rhs);
  GenPoly out(ctx_, std::max(num_vars_, rhs.num_vars_));
  TermKey key;
  for (const auto& [k1, z1] : canon_) {
    for (const auto& [k2, z2] : rhs.canon_) {
      const auto z12 = ctx_->center_mul(z1, z2);
      key.word = k1.word;
      key.word.insert(key.word.end(), k2.word.begin(), k2.word.end());
      key.slots.assign(k1.slots.begin(), k1.slots.end() - 1);
      const std::size_t boundary = key.slots.size();
      key.slots.push_back(0);
      key.slots.insert(key.slots.end(), k2.slots.begin() + 1, k2.slots.end());
      for (const auto& [slot, zeta] : ctx_->module_product(k1.slots.back(), k2.slots.front())) {
        key.slots[boundary] = slot;
        out.accumulate(key, ctx_->center_mul(z12, zeta));
      }
    }
  }
  return out;
}

GenPoly GenPoly::pow(std::uint64_t n) const {
  GenPoly result = integer(ctx_, num_vars_, 1);
  GenPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

bool GenPoly::operator==(const GenPoly& rhs) const {
  return ctx_->algebra_ptr() == rhs.ctx_->algebra_ptr() && canon_ == rhs.canon_;
}

Element GenPoly::eval(std::span<const Element> assignment) const {
  if (assignment.size() != num_vars_) {
    throw InputError("assignment has " + std::to_string(assignment.size()) + " values for " +
                     std::to_string(num_vars_) + " variables");
  }
  const Algebra& A = ctx_->algebra();
  for (const auto& x : assignment)
    if (x.algebra_ptr() != &A) throw AlgebraMismatch();
  const auto& u = ctx_->module_basis();
  Element out = A.zero();
  for (const auto& [key, z] : canon_) {
    Element value = ctx_->center_element(z);
    if (key.slots[0] != 0) value = value * u[key.slots[0]];
    for (std::size_t i = 0; i < key.word.size(); ++i) {
      value = value * assignment[key.word[i]];
      if (key.slots[i + 1] != 0) value = value * u[key.slots[i + 1]];
    }
    out += value;
  }
  return out;
}

GenPoly GenPoly::substitute(std::span<const LinearForm> images, std::size_t new_num_vars) const {
  if (images.size() != num_vars_) throw InputError("substitution needs one image per variable");
  for (const auto& form : images)
    for (const auto& [v, c] : form)
      if (v >= new_num_vars) throw InputError("substitution image uses an out-of-range variable");
  const Residue p = ctx_->algebra().prime();
  GenPoly out(ctx_, new_num_vars);
  for (const auto& [key, z] : canon_) {
    const std::size_t s = key.word.size();
    bool vanishes = false;
    for (auto v : key.word) vanishes = vanishes || images[v].empty();
    if (vanishes) continue;
    std::vector<std::size_t> pick(s, 0);
    TermKey target{key.word, key.slots};
    while (true) {
      Residue scalar = 1;
      for (std::size_t i = 0; i < s; ++i) {
        const auto& [v, c] = images[key.word[i]][pick[i]];
        target.word[i] = static_cast<std::uint16_t>(v);
        scalar = mul_mod(scalar, reduce(c, p), p);
      }
      if (scalar != 0) out.accumulate(target, ctx_->center_scale(z, scalar));
      std::size_t pos = s;
      while (pos-- > 0) {
        if (++pick[pos] < images[key.word[pos]].size()) break;
        pick[pos] = 0;
      }
      if (pos == static_cast<std::size_t>(-1)) break;
    }
  }
  return out;
}

GenPoly GenPoly::compose(std::span<const GenPoly> images) const {
  if (images.size() != num_vars_) throw InputError("composition needs one image per variable");
  std::size_t m = num_vars_;
  if (!images.empty()) {
    m = images[0].num_vars();
    for (const auto& img : images) {
      check_compatible(img);
      m = std::max(m, img.num_vars());
    }
  }
  const auto& u = ctx_->module_basis();
  GenPoly out(ctx_, m);
  for (const auto& [key, z] : canon_) {
    GenPoly term = constant(ctx_, m, ctx_->center_element(z) * u[key.slots[0]]);
    for (std::size_t i = 0; i < key.word.size(); ++i) {
      term = term * images[key.word[i]];
      if (key.slots[i + 1] != 0) term = term * constant(ctx_, m, u[key.slots[i + 1]]);
    }
    out = out + term;
  }
  return out;
}

std::vector<GenMonomial> GenPoly::terms() const {
  const auto& u = ctx_->module_basis();
  std::vector<GenMonomial> out;
  for (const auto& [key, z] : canon_) {
    GenMonomial mono;
    mono.coeffs.push_back(ctx_->center_element(z) * u[key.slots[0]]);
    for (std::size_t i = 0; i < key.word.size(); ++i) {
      mono.vars.push_back(key.word[i]);
      mono.coeffs.push_back(u[key.slots[i + 1]]);
    }
    out.push_back(std::move(mono));
  }
  return out;
}

// ---------------------------------------------------------------- linearization

GenPoly linearize(const GenPoly& g, std::size_t t) {
  if (t < 1) throw InputError("linearization order must be at least 1");
  if (g.num_vars() != 1) throw InputError("linearization is defined for univariate polynomials");
  GenPoly f = g;
  for (std::size_t k = 1; k < t; ++k) {
    // f has k variables; split the last one.
    std::vector<LinearForm> split(k), last_to_new(k);
    for (std::size_t i = 0; i + 1 < k; ++i) {
      split[i] = {{i, 1}};
      last_to_new[i] = {{i, 1}};
    }
    split[k - 1] = {{k - 1, 1}, {k, 1}};
    last_to_new[k - 1] = {{k, 1}};
    f = f.substitute(split, k + 1) - f.with_num_vars(k + 1) - f.substitute(last_to_new, k + 1);
  }
  return f;
}

AdditiveForm additive_form_test(const GenPoly& g) {
  if (g.num_vars() != 1) throw InputError("additivity test is defined for univariate polynomials");
  AdditiveForm out;
  const Element c = g.constant_term();
  if (!c.is_zero()) out.constant_term = c;
  const Degree deg = g.degree();
  if (!deg.is_minus_infinity() && deg.value() >= 2) out.degree = deg.value();
  if (out.constant_term) {
    out.obstruction = AdditiveObstruction::kConstantTerm;
  } else if (out.degree) {
    out.obstruction = AdditiveObstruction::kHigherDegree;
  } else {
    out.additive = true;
    const auto& ctx = *g.context();
    const auto& u = ctx.module_basis();
    // group sum z u_i X u_j by the left factor u_i
    std::map<std::uint32_t, Element> right;
    for (const auto& [key, z] : g.canon()) {
      if (key.word.size() != 1) continue;
      auto [it, inserted] = right.try_emplace(key.slots[0], ctx.algebra().zero());
      it->second += ctx.center_element(z) * u[key.slots[1]];
    }
    for (auto& [slot, b] : right)
      if (!b.is_zero()) out.pairs.emplace_back(u[slot], b);
  }
  return out;
}

GenPoly elementary_poly(ContextPtr ctx, std::span<const std::pair<Element, Element>> pairs) {
  GenPoly out(ctx, 1);
  const std::size_t vars[] = {0};
  for (const auto& [a, b] : pairs) {
    const Element coeffs[] = {a, b};
    out = out + GenPoly::monomial(ctx, 1, coeffs, vars);
  }
  return out;
}

}  // namespace gpi

#include "gpi/algebra.hpp"

#include <cassert>
#include <cmath>

#include "gpi/error.hpp"

namespace gpi {

// ---------------------------------------------------------------- Element

bool Element::is_zero() const {
  for (auto c : coords_)
    if (c != 0) return false;
  return true;
}

Element Element::operator+(const Element& rhs) const {
  Element out = *this;
  out += rhs;
  return out;
}

Element Element::operator-(const Element& rhs) const {
  Element out = *this;
  out -= rhs;
  return out;
}

Element Element::operator-() const {
  Element out = *this;
  const Residue p = algebra_->prime();
  for (auto& c : out.coords_) c = sub_mod(0, c, p);
  return out;
}

Element Element::operator*(const Element& rhs) const { return algebra_->mul(*this, rhs); }

Element Element::scaled(std::int64_t n) const {
  Element out = *this;
  const Residue p = algebra_->prime();
  const Residue s = reduce(n, p);
  for (auto& c : out.coords_) c = mul_mod(c, s, p);
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  if (algebra_ != rhs.algebra_) throw AlgebraMismatch();
  const Residue p = algebra_->prime();
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = add_mod(coords_[i], rhs.coords_[i], p);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  if (algebra_ != rhs.algebra_) throw AlgebraMismatch();
  const Residue p = algebra_->prime();
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = sub_mod(coords_[i], rhs.coords_[i], p);
  return *this;
}

// ---------------------------------------------------------------- Algebra

AlgebraPtr Algebra::build(const AlgebraDescriptor& desc) {
  if (desc.p < 2 || static_cast<std::uint64_t>(desc.p) > kMaxPrime || !is_prime(static_cast<std::uint64_t>(desc.p))) {
    throw InputError("characteristic " + std::to_string(desc.p) + " is not a supported prime");
  }
  const auto d = desc.basis.size();
  if (d == 0) throw InputError("algebra must have dimension at least 1");
  if (desc.mul_table.size() != d) throw InputError("mul_table has " + std::to_string(desc.mul_table.size()) +
                                                   " rows, expected " + std::to_string(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (desc.mul_table[i].size() != d) throw InputError("mul_table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < d; ++j) {
      if (desc.mul_table[i][j].size() != d) {
        throw InputError("mul_table entry (" + std::to_string(i) + "," + std::to_string(j) + ") has wrong length");
      }
    }
  }
  if (desc.one.size() != d) throw InputError("unity vector has wrong length");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (desc.basis[i] == desc.basis[j]) throw InputError("duplicate basis label '" + desc.basis[i] + "'");

  std::shared_ptr<Algebra> alg(new Algebra());
  const auto p = static_cast<Residue>(desc.p);
  alg->p_ = p;
  alg->dim_ = d;
  alg->labels_ = desc.basis;
  alg->descriptor_ = desc;
  alg->products_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto& out = alg->products_[i * d + j];
      for (std::size_t k = 0; k < d; ++k) {
        const Residue v = reduce(desc.mul_table[i][j][k], p);
        if (v != 0) out.push_back({static_cast<std::uint32_t>(k), v});
      }
      alg->descriptor_.mul_table[i][j].assign(d, 0);
      for (auto [k, v] : out) alg->descriptor_.mul_table[i][j][k] = v;
    }
  }
  std::vector<Residue> one(d);
  for (std::size_t i = 0; i < d; ++i) {
    one[i] = reduce(desc.one[i], p);
    alg->descriptor_.one[i] = one[i];
  }
  alg->one_ = Element(alg.get(), std::move(one));
  alg->name_ = desc.name.empty() ? "algebra" : desc.name;

  for (std::size_t i = 0; i < d; ++i) {
    const auto e = alg->basis(i);
    if (alg->mul(alg->one_, e) != e || alg->mul(e, alg->one_) != e) {
      throw InputError("unity check failed on basis element '" + desc.basis[i] + "'");
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const auto ei = alg->basis(i);
    for (std::size_t j = 0; j < d; ++j) {
      const auto eij = alg->mul(ei, alg->basis(j));
      for (std::size_t k = 0; k < d; ++k) {
        const auto ek = alg->basis(k);
        if (alg->mul(eij, ek) != alg->mul(ei, alg->mul(alg->basis(j), ek))) {
          throw InputError("associativity fails on basis triple (" + desc.basis[i] + ", " + desc.basis[j] + ", " +
                           desc.basis[k] + ")");
        }
      }
    }
  }
  return alg;
}

std::optional<std::size_t> Algebra::basis_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Element Algebra::zero() const { return Element(this, std::vector<Residue>(dim_, 0)); }

Element Algebra::basis(std::size_t i) const {
  std::vector<Residue> c(dim_, 0);
  c.at(i) = 1;
  return Element(this, std::move(c));
}

Element Algebra::element(std::span<const Residue> coords) const {
  if (coords.size() != dim_) throw InputError("coordinate vector has wrong length");
  std::vector<Residue> c(coords.begin(), coords.end());
  for (auto& v : c) v %= p_;
  return Element(this, std::move(c));
}

Element Algebra::element_from_ints(std::span<const std::int64_t> coords) const {
  if (coords.size() != dim_) {
    throw InputError("coordinate vector has length " + std::to_string(coords.size()) + ", expected " +
                     std::to_string(dim_));
  }
  std::vector<Residue> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) c[i] = reduce(coords[i], p_);
  return Element(this, std::move(c));
}

void Algebra::check_same(const Element& a) const {
  if (a.algebra_ptr() != this) throw AlgebraMismatch();
}

Element Algebra::mul(const Element& a, const Element& b) const {
  check_same(a);
  check_same(b);
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    const Residue ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Residue bj = b[j];
      if (bj == 0) continue;
      const std::uint64_t w = static_cast<std::uint64_t>(ai) * bj % p_;
      for (const auto& [k, v] : products_[i * dim_ + j]) acc[k] += w * v;
    }
  }
  std::vector<Residue> out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<Residue>(acc[k] % p_);
  return Element(this, std::move(out));
}

Element Algebra::pow(const Element& a, std::uint64_t n) const {
  check_same(a);
  Element result = one_;
  Element base = a;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

FpMatrix Algebra::left_mul_matrix(const Element& a) const {
  FpMatrix m(dim_, dim_, p_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto col = mul(a, basis(j));
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

FpMatrix Algebra::right_mul_matrix(const Element& b) const {
  FpMatrix m(dim_, dim_, p_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const auto col = mul(basis(j), b);
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::optional<Element> Algebra::inv(const Element& a) const {
  check_same(a);
  auto x = solve_linear(left_mul_matrix(a), one_.coords());
  if (!x) return std::nullopt;
  Element candidate(this, std::move(*x));
  if (mul(a, candidate) != one_ || mul(candidate, a) != one_) return std::nullopt;
  return candidate;
}

bool Algebra::is_unit(const Element& a) const { return inv(a).has_value(); }

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (mul(basis(i), basis(j)) != mul(basis(j), basis(i))) return false;
  return true;
}

std::optional<std::uint64_t> Algebra::cardinality() const {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (n > UINT64_MAX / p_) return std::nullopt;
    n *= p_;
  }
  return n;
}

void Algebra::require_enumerable(const std::string& what, double budget, std::size_t arity) const {
  const double count = std::pow(static_cast<double>(p_), static_cast<double>(dim_ * arity));
  if (count > budget) throw BudgetExceeded(what, count, budget);
}

Element Algebra::element_at(std::uint64_t index) const {
  std::vector<Residue> c(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    c[i] = static_cast<Residue>(index % p_);
    index /= p_;
  }
  return Element(this, std::move(c));
}

std::uint64_t Algebra::index_of(const Element& a) const {
  check_same(a);
  std::uint64_t idx = 0;
  for (std::size_t i = dim_; i-- > 0;) idx = idx * p_ + a[i];
  return idx;
}

std::vector<Element> Algebra::elements(double budget) const {
  require_enumerable("element enumeration of " + name_, budget);
  const auto n = *cardinality();
  std::vector<Element> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<Element> Algebra::units(double budget) const {
  require_enumerable("unit enumeration of " + name_, budget);
  const auto n = *cardinality();
  std::vector<Element> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto e = element_at(i);
    if (rank(left_mul_matrix(e)) == dim_) out.push_back(std::move(e));
  }
  return out;
}

std::vector<Element> Algebra::centralizer(std::span<const Element> S) const {
  // Unknown a = sum_j a_j basis_j; each s contributes dim equations (a s - s a = 0).
  FpMatrix system(0, dim_, p_);
  std::vector<Element> commutators;
  for (std::size_t j = 0; j < dim_; ++j) commutators.push_back(zero());
  for (const auto& s : S) {
    check_same(s);
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto bj = basis(j);
      commutators[j] = mul(bj, s) - mul(s, bj);
    }
    std::vector<Residue> row(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      for (std::size_t j = 0; j < dim_; ++j) row[j] = commutators[j][k];
      system.append_row(row);
    }
  }
  const auto kernel = nullspace(system);
  std::vector<Element> out;
  for (std::size_t r = 0; r < kernel.rows(); ++r) out.push_back(element(kernel.row(r)));
  return out;
}

std::vector<Element> Algebra::center() const {
  std::vector<Element> all;
  for (std::size_t i = 0; i < dim_; ++i) all.push_back(basis(i));
  return centralizer(all);
}

// ---------------------------------------------------------------- standard algebras

namespace {

FpPoly trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Remainder of a modulo a monic-or-not nonzero b.
FpPoly poly_mod(FpPoly a, const FpPoly& b, Residue p) {
  a = trim(std::move(a));
  const auto lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const Residue factor = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = sub_mod(a[shift + i], mul_mod(factor, b[i], p), p);
    }
    a = trim(std::move(a));
  }
  return a;
}

FpPoly normalized_modulus(const std::vector<std::int64_t>& raw, Residue p, std::size_t k) {
  FpPoly f;
  for (auto c : raw) f.push_back(reduce(c, p));
  f = trim(std::move(f));
  if (f.size() != k + 1) {
    throw InputError("modulus must have degree " + std::to_string(k) + " (coefficients listed constant term first)");
  }
  const auto lead_inv = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, lead_inv, p);
  return f;
}

// Coordinates of t^e modulo f for e < 2k - 1.
std::vector<FpPoly> power_residues(const FpPoly& f, Residue p) {
  const std::size_t k = f.size() - 1;
  std::vector<FpPoly> out;
  for (std::size_t e = 0; e + 1 < 2 * k || e == 0; ++e) {
    FpPoly mono(e + 1, 0);
    mono[e] = 1;
    auto r = poly_mod(mono, f, p);
    r.resize(k, 0);
    out.push_back(std::move(r));
  }
  return out;
}

std::string field_name(std::int64_t p, std::int64_t k) {
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < k; ++i) q *= p;
  return "GF(" + std::to_string(q) + ")";
}

void check_field_params(std::int64_t p, std::int64_t k) {
  if (p < 2 || static_cast<std::uint64_t>(p) > kMaxPrime || !is_prime(static_cast<std::uint64_t>(p))) {
    throw InputError("characteristic " + std::to_string(p) + " is not a supported prime");
  }
  if (k < 1) throw InputError("extension degree k must be at least 1");
}

FpPoly resolve_modulus(std::int64_t p, std::int64_t k, const std::optional<std::vector<std::int64_t>>& modulus) {
  const auto pr = static_cast<Residue>(p);
  const auto kk = static_cast<std::size_t>(k);
  if (!modulus) return default_modulus(pr, kk);
  auto f = normalized_modulus(*modulus, pr, kk);
  if (!is_irreducible(f, pr)) throw InputError("modulus is reducible over F_" + std::to_string(p));
  return f;
}

}  // namespace

bool is_irreducible(const FpPoly& poly, Residue p) {
  const FpPoly f = trim(poly);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // trial division by every monic polynomial of degree 1..deg/2
  for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
    FpPoly g(dd + 1, 0);
    g[dd] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < dd; ++i) {
        g[i] = static_cast<Residue>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FpPoly default_modulus(Residue p, std::size_t k) {
  if (k == 0) throw InputError("extension degree k must be at least 1");
  FpPoly f(k + 1, 0);
  f[k] = 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= p;
  // lexicographic in (c_0, ..., c_{k-1}): c_0 is the most significant digit
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      f[i] = static_cast<Residue>(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

AlgebraPtr field_algebra(std::int64_t p, std::int64_t k, std::optional<std::vector<std::int64_t>> modulus) {
  check_field_params(p, k);
  const auto f = resolve_modulus(p, k, modulus);
  const auto pr = static_cast<Residue>(p);
  const auto kk = static_cast<std::size_t>(k);
  const auto residues = power_residues(f, pr);

  AlgebraDescriptor desc;
  desc.name = field_name(p, k);
  desc.p = p;
  for (std::size_t i = 0; i < kk; ++i) desc.basis.push_back(i == 0 ? "1" : i == 1 ? "t" : "t" + std::to_string(i));
  desc.mul_table.assign(kk, std::vector<std::vector<std::int64_t>>(kk));
  for (std::size_t i = 0; i < kk; ++i)
    for (std::size_t j = 0; j < kk; ++j) desc.mul_table[i][j].assign(residues[i + j].begin(), residues[i + j].end());
  desc.one.assign(kk, 0);
  desc.one[0] = 1;
  return Algebra::build(desc);
}

AlgebraPtr matrix_algebra(std::int64_t n, std::int64_t p, std::int64_t k,
                          std::optional<std::vector<std::int64_t>> modulus) {
  check_field_params(p, k);
  if (n < 1) throw InputError("matrix size n must be at least 1");
  const auto f = resolve_modulus(p, k, modulus);
  const auto pr = static_cast<Residue>(p);
  const auto nn = static_cast<std::size_t>(n);
  const auto kk = static_cast<std::size_t>(k);
  const auto residues = power_residues(f, pr);
  const std::size_t d = nn * nn * kk;
  auto index = [&](std::size_t i, std::size_t j, std::size_t l) { return (i * nn + j) * kk + l; };

  AlgebraDescriptor desc;
  desc.name = "M" + std::to_string(n) + "(" + (k == 1 ? "F" + std::to_string(p) : field_name(p, k)) + ")";
  desc.p = p;
  desc.basis.resize(d);
  for (std::size_t i = 0; i < nn; ++i) {
    for (std::size_t j = 0; j < nn; ++j) {
      const std::string base = nn < 10 ? "e" + std::to_string(i + 1) + std::to_string(j + 1)
                                       : "e" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      for (std::size_t l = 0; l < kk; ++l) {
        desc.basis[index(i, j, l)] = l == 0 ? base : l == 1 ? base + "t" : base + "t" + std::to_string(l);
      }
    }
  }
  desc.mul_table.assign(d, std::vector<std::vector<std::int64_t>>(d, std::vector<std::int64_t>(d, 0)));
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      for (std::size_t a = 0; a < kk; ++a)
        for (std::size_t l = 0; l < nn; ++l)
          for (std::size_t b = 0; b < kk; ++b) {
            // (e_ij t^a)(e_jl t^b) = e_il t^(a+b); all other products vanish
            auto& out = desc.mul_table[index(i, j, a)][index(j, l, b)];
            for (std::size_t c = 0; c < kk; ++c) out[index(i, l, c)] = residues[a + b][c];
          }
  desc.one.assign(d, 0);
  for (std::size_t i = 0; i < nn; ++i) desc.one[index(i, i, 0)] = 1;
  return Algebra::build(desc);
}

AlgebraPtr standard_algebra(StandardKind kind, const StandardParams& params) {
  if (kind == StandardKind::kField) return field_algebra(params.p, params.k, params.modulus);
  return matrix_algebra(params.n, params.p, params.k, params.modulus);
}

AlgebraPtr product_of_prime_fields(std::int64_t p, std::size_t copies) {
  if (copies == 0) throw InputError("need at least one factor");
  AlgebraDescriptor desc;
  desc.name = "F" + std::to_string(p) + "^" + std::to_string(copies);
  desc.p = p;
  for (std::size_t i = 0; i < copies; ++i) desc.basis.push_back("u" + std::to_string(i + 1));
  desc.mul_table.assign(copies, std::vector<std::vector<std::int64_t>>(copies, std::vector<std::int64_t>(copies, 0)));
  for (std::size_t i = 0; i < copies; ++i) desc.mul_table[i][i][i] = 1;
  desc.one.assign(copies, 1);
  return Algebra::build(desc);
}

}  // namespace gpi

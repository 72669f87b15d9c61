#pragma once

// Generalized polynomials A{X_1, ..., X_m}: elements of the free product of the
// coefficient algebra A with the free algebra Z(A)<X_1, ..., X_m> over the center.
//
// Normal form. Fix an F_p-basis z_1..z_c of the center Z (which must be a field)
// and a Z-basis u_0 = 1, u_1, ..., u_{r-1} of A. A monomial a_1 X_{v_1} a_2 ... X_{v_s} a_{s+1}
// lives in the block A (x)_Z ... (x)_Z A indexed by the word v_1..v_s, which has the
// Z-basis u_{j_1} (x) ... (x) u_{j_{s+1}}. A polynomial is stored as the sparse map
// (word, j_1..j_{s+1}) -> coefficient in Z. Two polynomials are equal in the free
// product iff these maps are equal.

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpi/algebra.hpp"

namespace gpi {

/// Coordinates of a central element in the F_p-basis of the center.
using CenterCoords = std::vector<Residue>;

/// Per-algebra data for the tensor normal form.
class PolyContext {
 public:
  /// Throws InputError when the center of A is not a field.
  static std::shared_ptr<const PolyContext> make(AlgebraPtr algebra, double budget = kDefaultBudget);

  const Algebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }

  std::size_t center_dim() const { return center_basis_.size(); }
  std::size_t module_rank() const { return module_basis_.size(); }
  const std::vector<Element>& center_basis() const { return center_basis_; }
  /// Z-basis of A; entry 0 is the unity.
  const std::vector<Element>& module_basis() const { return module_basis_; }

  struct SlotTerm {
    std::uint32_t slot;
    CenterCoords coeff;
  };

  /// a = sum_j z_j u_j with z_j central; zero coefficients omitted.
  std::vector<SlotTerm> expand(const Element& a) const;
  /// Expansion of u_i u_j.
  const std::vector<SlotTerm>& module_product(std::size_t i, std::size_t j) const {
    return module_products_[i * module_rank() + j];
  }

  Element center_element(const CenterCoords& z) const;
  CenterCoords center_mul(const CenterCoords& a, const CenterCoords& b) const;
  CenterCoords center_scale(const CenterCoords& a, Residue s) const;
  bool center_is_zero(const CenterCoords& a) const;

  /// True iff the elements are linearly independent over Z(A).
  bool center_independent(std::span<const Element> elements) const;

 private:
  PolyContext() = default;

  AlgebraPtr algebra_;
  std::vector<Element> center_basis_;
  std::vector<Element> module_basis_;
  FpMatrix expansion_;  // F_p coords -> (slot, center) coords
  std::vector<std::vector<SlotTerm>> module_products_;
  std::vector<CenterCoords> center_products_;  // c * c entries
};

using ContextPtr = std::shared_ptr<const PolyContext>;

/// Degree with a distinct value for the zero polynomial.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  explicit Degree(std::size_t value) : value_(static_cast<std::int64_t>(value)) {}

  bool is_minus_infinity() const { return value_ == kMinusInfinity; }
  std::size_t value() const;

  Degree operator+(const Degree& rhs) const;
  auto operator<=>(const Degree&) const = default;

 private:
  static constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();
  Degree() : value_(kMinusInfinity) {}
  std::int64_t value_;
};

std::string to_string(const Degree& d);

/// One monomial a_1 X_{v_1} a_2 ... a_s X_{v_s} a_{s+1}.
struct GenMonomial {
  std::vector<Element> coeffs;
  std::vector<std::size_t> vars;
};

/// Key of one normal-form coordinate; ordered by (degree, word, slots).
struct TermKey {
  std::vector<std::uint16_t> word;
  std::vector<std::uint32_t> slots;

  bool operator==(const TermKey&) const = default;
  bool operator<(const TermKey& rhs) const {
    if (word.size() != rhs.word.size()) return word.size() < rhs.word.size();
    if (word != rhs.word) return word < rhs.word;
    return slots < rhs.slots;
  }
};

/// Variable image under a linear substitution: sum of (coefficient * X_var).
using LinearForm = std::vector<std::pair<std::size_t, std::int64_t>>;

class GenPoly {
 public:
  using Canon = std::map<TermKey, CenterCoords>;

  GenPoly(ContextPtr ctx, std::size_t num_vars);

  static GenPoly constant(ContextPtr ctx, std::size_t num_vars, const Element& a);
  static GenPoly integer(ContextPtr ctx, std::size_t num_vars, std::int64_t n);
  static GenPoly variable(ContextPtr ctx, std::size_t num_vars, std::size_t var);
  static GenPoly monomial(ContextPtr ctx, std::size_t num_vars, std::span<const Element> coeffs,
                          std::span<const std::size_t> vars);
  static GenPoly from_terms(ContextPtr ctx, std::size_t num_vars, std::span<const GenMonomial> terms);

  const ContextPtr& context() const { return ctx_; }
  const Algebra& algebra() const { return ctx_->algebra(); }
  std::size_t num_vars() const { return num_vars_; }
  const Canon& canon() const { return canon_; }
  std::size_t size() const { return canon_.size(); }

  /// Zero in the free product, not zero as a function on A.
  bool is_zero() const { return canon_.empty(); }
  Degree degree() const;
  GenPoly homogeneous_part(std::size_t j) const;
  /// Value at X = 0.
  Element constant_term() const;
  /// Every word uses each of the num_vars variables exactly once.
  bool is_multilinear() const;
  bool uses_variable(std::size_t var) const;

  /// Same polynomial regarded in more variables.
  GenPoly with_num_vars(std::size_t m) const;

  GenPoly operator+(const GenPoly& rhs) const;
  GenPoly operator-(const GenPoly& rhs) const;
  GenPoly operator-() const;
  GenPoly operator*(const GenPoly& rhs) const;
  GenPoly scaled(std::int64_t n) const;
  GenPoly pow(std::uint64_t n) const;

  bool operator==(const GenPoly& rhs) const;

  Element eval(std::span<const Element> assignment) const;

  /// Replace X_i by images[i] (a sum of integer multiples of variables) in a ring of new_num_vars variables.
  GenPoly substitute(std::span<const LinearForm> images, std::size_t new_num_vars) const;
  /// Replace X_i by an arbitrary polynomial images[i].
  GenPoly compose(std::span<const GenPoly> images) const;

  /// Expanded monomials, one per normal-form coordinate.
  std::vector<GenMonomial> terms() const;

 private:
  void check_compatible(const GenPoly& rhs) const;
  void accumulate(const TermKey& key, const CenterCoords& coeff);
  void accumulate(TermKey&& key, const CenterCoords& coeff);

  ContextPtr ctx_;
  std::size_t num_vars_;
  Canon canon_;
};

/// F^(t) for univariate F by the iterated difference recursion; result has t variables.
GenPoly linearize(const GenPoly& g, std::size_t t);

enum class AdditiveObstruction { kNone, kConstantTerm, kHigherDegree };

struct AdditiveForm {
  bool additive = false;
  /// (a_i, b_i) with G(X) = sum a_i X b_i; filled when additive.
  std::vector<std::pair<Element, Element>> pairs;
  AdditiveObstruction obstruction = AdditiveObstruction::kNone;
  std::optional<Element> constant_term;    // set when G(0) != 0
  std::optional<std::size_t> degree;       // set when deg G >= 2
};

/// Formal additivity test for univariate G: additive iff deg G <= 1 and G(0) = 0.
AdditiveForm additive_form_test(const GenPoly& g);

/// x -> sum a_i x b_i as a univariate polynomial.
GenPoly elementary_poly(ContextPtr ctx, std::span<const std::pair<Element, Element>> pairs);

}  // namespace gpi

#pragma once

// Functional identities  sum_t L_t(x) f_{slot_t}(arg_t) R_t(x) = rhs(x)  over a finite algebra,
// compiled to linear systems in the matrix entries of the unknown maps.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpi/identity.hpp"
#include "gpi/maps.hpp"
#include "gpi/ncpoly.hpp"

namespace gpi {

enum class TemplateDomain { kUnits, kAll };
enum class MapArgument { kX, kXinv };

/// L, R and rhs are polynomials in two variables: x (index 0) and xinv (index 1).
struct TemplateTerm {
  GenPoly L;
  std::size_t slot = 0;
  MapArgument arg = MapArgument::kX;
  GenPoly R;
};

class IdentityTemplate {
 public:
  /// Validates slots and that xinv only occurs with domain = units.
  IdentityTemplate(ContextPtr ctx, std::size_t unknowns, TemplateDomain domain, std::vector<TemplateTerm> terms,
                   GenPoly rhs);

  struct TextTerm {
    std::string L;
    std::size_t slot = 0;
    std::string arg = "x";
    std::string R;
  };
  static IdentityTemplate parse(ContextPtr ctx, std::size_t unknowns, const std::string& domain,
                                const std::vector<TextTerm>& terms, const std::string& rhs);

  /// f(x) - x^n g(x^-1) = 0 on units; n may be negative.
  static IdentityTemplate power(ContextPtr ctx, std::int64_t n);
  /// G(x) f(x) = H(x) on all of A; G, H univariate.
  static IdentityTemplate gx(const GenPoly& G, const GenPoly& H);

  const ContextPtr& context() const { return ctx_; }
  const Algebra& algebra() const { return ctx_->algebra(); }
  std::size_t unknowns() const { return unknowns_; }
  TemplateDomain domain() const { return domain_; }
  const std::vector<TemplateTerm>& terms() const { return terms_; }
  const GenPoly& rhs() const { return rhs_; }

  /// Domain elements in lexicographic coordinate order.
  std::vector<Element> domain_elements(double budget = kDefaultBudget) const;

  /// Left side minus right side at x for concrete maps.
  Element residual(std::span<const AdditiveMap> maps, const Element& x) const;
  /// Same with the right-hand side dropped.
  Element homogeneous_residual(std::span<const AdditiveMap> maps, const Element& x) const;

 private:
  ContextPtr ctx_;
  std::size_t unknowns_;
  TemplateDomain domain_;
  std::vector<TemplateTerm> terms_;
  GenPoly rhs_;
};

struct LinearSystem {
  FpMatrix lhs;                   // rows: (domain element, coordinate); cols: slot*d^2 + i*d + j
  std::vector<Residue> rhs;
  std::size_t domain_size = 0;
};

LinearSystem compile(const IdentityTemplate& t, double budget = kDefaultBudget);

/// Map tuple <-> stacked unknown vector.
std::vector<Residue> stack_maps(std::span<const AdditiveMap> maps);
std::vector<AdditiveMap> unstack_maps(const Algebra& A, std::span<const Residue> v, std::size_t unknowns);

struct SolutionSpace {
  const Algebra* algebra = nullptr;
  std::size_t unknowns = 0;
  bool consistent = true;
  /// Present when the right-hand side is nonzero and the system is consistent.
  std::optional<std::vector<AdditiveMap>> particular;
  /// Rows of the reduced echelon basis of the homogeneous solutions.
  FpMatrix basis_vectors;
  std::vector<std::vector<AdditiveMap>> basis;

  std::size_t dimension() const { return basis.size(); }
  bool contains(std::span<const AdditiveMap> maps) const;
};

/// Solves exactly and re-verifies every returned tuple on the whole domain.
SolutionSpace solve(const IdentityTemplate& t, double budget = kDefaultBudget);

/// Verdict for concrete maps against the template, over its domain.
Verdict check_template(const IdentityTemplate& t, std::span<const AdditiveMap> maps, double budget = kDefaultBudget);

struct Decomposition {
  bool success = false;
  std::vector<std::pair<Element, Element>> terms;
  std::string failure;
};

/// T = sum a_i x b_i with at most max_terms terms (0 means d^2).
Decomposition elementary_decomposition(const AdditiveMap& T, std::size_t max_terms = 0);

struct ScalingFilter {
  bool forces_zero = false;
  std::uint64_t k = 0;          // scaling witness
  Residue value = 0;            // k (k^(n-2) - 1) mod p
};

/// forces_zero iff (p - 1) does not divide (n - 2).
ScalingFilter scaling_filter(std::uint64_t p, std::int64_t n);

struct UnitGeneration {
  bool generates = false;
  std::size_t rank = 0;
  std::size_t units = 0;
};

/// Whether the additive subgroup generated by the units is all of A.
UnitGeneration units_additively_generate(const Algebra& A, double budget = kDefaultBudget);

}  // namespace gpi

#pragma once

// Finite-dimensional unital associative algebras over a prime field F_p,
// given by structure constants on a fixed basis.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpi/fp.hpp"

namespace gpi {

/// Default cap on the number of elements any exhaustive enumeration may visit.
inline constexpr double kDefaultBudget = 16777216.0;  // 2^24

class Algebra;

/// Raw construction data. mul_table[i][j] holds the coordinates of basis_i * basis_j.
struct AlgebraDescriptor {
  std::string name;
  std::int64_t p = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<std::vector<std::int64_t>>> mul_table;
  std::vector<std::int64_t> one;
};

/// A coordinate vector over F_p in the basis of its algebra.
///
/// Elements keep a non-owning pointer to their algebra; the algebra must outlive them.
class Element {
 public:
  Element() = default;

  const Algebra& algebra() const { return *algebra_; }
  const Algebra* algebra_ptr() const { return algebra_; }
  std::span<const Residue> coords() const { return coords_; }
  Residue operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;

  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element operator-() const;
  Element operator*(const Element& rhs) const;
  Element scaled(std::int64_t n) const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);

  bool operator==(const Element& rhs) const { return algebra_ == rhs.algebra_ && coords_ == rhs.coords_; }
  std::strong_ordering operator<=>(const Element& rhs) const { return coords_ <=> rhs.coords_; }

 private:
  friend class Algebra;
  Element(const Algebra* algebra, std::vector<Residue> coords)
      : algebra_(algebra), coords_(std::move(coords)) {}

  const Algebra* algebra_ = nullptr;
  std::vector<Residue> coords_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
 public:
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  /// Validates the descriptor exhaustively (associativity on basis triples, two-sided unity).
  static AlgebraPtr build(const AlgebraDescriptor& descriptor);

  const std::string& name() const { return name_; }
  Residue prime() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  std::optional<std::size_t> basis_index(const std::string& label) const;

  Element zero() const;
  const Element& one() const { return one_; }
  Element basis(std::size_t i) const;
  Element element(std::span<const Residue> coords) const;
  Element element_from_ints(std::span<const std::int64_t> coords) const;
  Element scalar(std::int64_t n) const { return one_.scaled(n); }

  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t n) const;
  std::optional<Element> inv(const Element& a) const;
  bool is_unit(const Element& a) const;

  /// Matrix of x -> a x (column j holds a * basis_j).
  FpMatrix left_mul_matrix(const Element& a) const;
  /// Matrix of x -> x b.
  FpMatrix right_mul_matrix(const Element& b) const;

  bool is_commutative() const;

  /// p^dim, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> cardinality() const;
  /// Throws BudgetExceeded if p^(dim * arity) > budget.
  void require_enumerable(const std::string& what, double budget, std::size_t arity = 1) const;

  /// Element whose base-p digits, least significant first, are its coordinates.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& a) const;

  std::vector<Element> elements(double budget = kDefaultBudget) const;
  /// Invertible elements in index order.
  std::vector<Element> units(double budget = kDefaultBudget) const;

  /// Basis (reduced echelon in coordinates) of {a : a s = s a for every s in S}.
  std::vector<Element> centralizer(std::span<const Element> S) const;
  std::vector<Element> center() const;

  const AlgebraDescriptor& descriptor() const { return descriptor_; }

 private:
  struct Product {
    std::uint32_t index;
    Residue value;
  };

  Algebra() = default;
  void check_same(const Element& a) const;

  std::string name_;
  Residue p_ = 2;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Product>> products_;  // dim * dim sparse structure constants
  Element one_;
  AlgebraDescriptor descriptor_;
};

/// Dense univariate polynomial over F_p, coefficient of t^i at index i.
using FpPoly = std::vector<Residue>;

bool is_irreducible(const FpPoly& poly, Residue p);

/// Smallest monic irreducible of degree k in lexicographic order of (c_0, c_1, ..., c_{k-1}).
FpPoly default_modulus(Residue p, std::size_t k);

/// GF(p^k) as a k-dimensional F_p-algebra with basis 1, t, t2, ...
AlgebraPtr field_algebra(std::int64_t p, std::int64_t k, std::optional<std::vector<std::int64_t>> modulus = {});

/// M_n(GF(p^k)) as an n^2 k-dimensional F_p-algebra with basis e_ij t^l.
AlgebraPtr matrix_algebra(std::int64_t n, std::int64_t p, std::int64_t k = 1,
                          std::optional<std::vector<std::int64_t>> modulus = {});

enum class StandardKind { kMatrix, kField };

struct StandardParams {
  std::int64_t n = 1;
  std::int64_t p = 2;
  std::int64_t k = 1;
  std::optional<std::vector<std::int64_t>> modulus;
};

AlgebraPtr standard_algebra(StandardKind kind, const StandardParams& params);

/// Componentwise product algebra F_p x ... x F_p.
AlgebraPtr product_of_prime_fields(std::int64_t p, std::size_t copies);

}  // namespace gpi

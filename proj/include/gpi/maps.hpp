#pragma once

// Additive endomorphisms of a finite algebra, stored as F_p-matrices on coordinates.

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "gpi/algebra.hpp"

namespace gpi {

class AdditiveMap {
 public:
  /// Column j of `matrix` is the image of basis_j.
  AdditiveMap(const Algebra& algebra, FpMatrix matrix);

  static AdditiveMap identity(const Algebra& A);
  static AdditiveMap zero(const Algebra& A);
  /// x -> a x
  static AdditiveMap left_mul(const Element& a);
  /// x -> x b
  static AdditiveMap right_mul(const Element& b);
  /// x -> sum a_i x b_i
  static AdditiveMap elementary(const Algebra& A, std::span<const std::pair<Element, Element>> pairs);
  /// x -> x^(p^j). Throws InputError unless A is commutative.
  static AdditiveMap frobenius(const Algebra& A, unsigned j);
  /// Matrix of the function on the basis; additivity of `fn` is the caller's promise.
  static AdditiveMap from_function(const Algebra& A, const std::function<Element(const Element&)>& fn);

  const Algebra& algebra() const { return *algebra_; }
  const FpMatrix& matrix() const { return matrix_; }

  Element operator()(const Element& x) const;

  AdditiveMap operator+(const AdditiveMap& rhs) const;
  AdditiveMap operator-(const AdditiveMap& rhs) const;
  AdditiveMap scaled(std::int64_t n) const;
  /// (this o rhs)(x) = this(rhs(x))
  AdditiveMap compose(const AdditiveMap& rhs) const;

  bool operator==(const AdditiveMap& rhs) const;

 private:
  const Algebra* algebra_;
  FpMatrix matrix_;
};

}  // namespace gpi

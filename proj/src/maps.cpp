#include "gpi/maps.hpp"

#include "gpi/error.hpp"

namespace gpi {

AdditiveMap::AdditiveMap(const Algebra& algebra, FpMatrix matrix) : algebra_(&algebra), matrix_(std::move(matrix)) {
  if (matrix_.rows() != algebra.dim() || matrix_.cols() != algebra.dim() || matrix_.prime() != algebra.prime()) {
    throw InputError("map matrix must be " + std::to_string(algebra.dim()) + "x" + std::to_string(algebra.dim()) +
                     " over F_" + std::to_string(algebra.prime()));
  }
}

AdditiveMap AdditiveMap::identity(const Algebra& A) {
  FpMatrix m(A.dim(), A.dim(), A.prime());
  for (std::size_t i = 0; i < A.dim(); ++i) m.at(i, i) = 1;
  return {A, std::move(m)};
}

AdditiveMap AdditiveMap::zero(const Algebra& A) { return {A, FpMatrix(A.dim(), A.dim(), A.prime())}; }

AdditiveMap AdditiveMap::left_mul(const Element& a) { return {a.algebra(), a.algebra().left_mul_matrix(a)}; }

AdditiveMap AdditiveMap::right_mul(const Element& b) { return {b.algebra(), b.algebra().right_mul_matrix(b)}; }

AdditiveMap AdditiveMap::elementary(const Algebra& A, std::span<const std::pair<Element, Element>> pairs) {
  AdditiveMap out = zero(A);
  for (const auto& [a, b] : pairs) {
    if (a.algebra_ptr() != &A || b.algebra_ptr() != &A) throw AlgebraMismatch();
    out = out + AdditiveMap(A, A.left_mul_matrix(a) * A.right_mul_matrix(b));
  }
  return out;
}

AdditiveMap AdditiveMap::frobenius(const Algebra& A, unsigned j) {
  if (!A.is_commutative()) throw InputError("Frobenius power is additive only on commutative algebras");
  std::uint64_t e = 1;
  for (unsigned i = 0; i < j; ++i) e *= A.prime();
  return from_function(A, [&](const Element& x) { return A.pow(x, e); });
}

AdditiveMap AdditiveMap::from_function(const Algebra& A, const std::function<Element(const Element&)>& fn) {
  FpMatrix m(A.dim(), A.dim(), A.prime());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const Element image = fn(A.basis(j));
    if (image.algebra_ptr() != &A) throw AlgebraMismatch();
    for (std::size_t i = 0; i < A.dim(); ++i) m.at(i, j) = image[i];
  }
  return {A, std::move(m)};
}

Element AdditiveMap::operator()(const Element& x) const {
  if (x.algebra_ptr() != algebra_) throw AlgebraMismatch();
  return algebra_->element(matrix_.apply(x.coords()));
}

AdditiveMap AdditiveMap::operator+(const AdditiveMap& rhs) const {
  if (rhs.algebra_ != algebra_) throw AlgebraMismatch();
  FpMatrix m = matrix_;
  const Residue p = algebra_->prime();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = add_mod(m.at(i, j), rhs.matrix_.at(i, j), p);
  return {*algebra_, std::move(m)};
}

AdditiveMap AdditiveMap::operator-(const AdditiveMap& rhs) const { return *this + rhs.scaled(-1); }

AdditiveMap AdditiveMap::scaled(std::int64_t n) const {
  const Residue p = algebra_->prime();
  const Residue s = reduce(n, p);
  FpMatrix m = matrix_;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = mul_mod(m.at(i, j), s, p);
  return {*algebra_, std::move(m)};
}

AdditiveMap AdditiveMap::compose(const AdditiveMap& rhs) const {
  if (rhs.algebra_ != algebra_) throw AlgebraMismatch();
  return {*algebra_, matrix_ * rhs.matrix_};
}

bool AdditiveMap::operator==(const AdditiveMap& rhs) const {
  return algebra_ == rhs.algebra_ && matrix_ == rhs.matrix_;
}

}  // namespace gpi

#pragma once

// Arithmetic in the prime field F_p and dense linear algebra over it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gpi {

using Residue = std::uint32_t;

/// Largest supported characteristic. Keeps every sum of d^2 products inside 64 bits.
inline constexpr std::uint64_t kMaxPrime = 65521;

bool is_prime(std::uint64_t n);

Residue reduce(std::int64_t v, Residue p);
Residue add_mod(Residue a, Residue b, Residue p);
Residue sub_mod(Residue a, Residue b, Residue p);
Residue mul_mod(Residue a, Residue b, Residue p);
Residue pow_mod(Residue a, std::uint64_t e, Residue p);

/// Multiplicative inverse of a nonzero residue.
Residue inv_mod(Residue a, Residue p);

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols, Residue p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue prime() const { return p_; }

  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Residue> values);

  std::vector<Residue> apply(std::span<const Residue> v) const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix transposed() const;

  bool operator==(const FpMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Residue p_ = 2;
  std::vector<Residue> data_;
};

struct RowEchelon {
  FpMatrix reduced;                  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each remaining row
};

/// Gauss-Jordan elimination. Row order of the input does not affect the result.
RowEchelon rref(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Basis of {v : m v = 0}, returned as the rows of a matrix in reduced echelon form.
FpMatrix nullspace(const FpMatrix& m);

/// Some solution of m v = b (free variables set to zero), or nullopt if inconsistent.
std::optional<std::vector<Residue>> solve_linear(const FpMatrix& m, std::span<const Residue> b);

std::optional<FpMatrix> inverse(const FpMatrix& m);

/// True iff v lies in the row space of `basis`.
bool in_row_space(const FpMatrix& basis, std::span<const Residue> v);

}  // namespace gpi

#include "gpi/fp.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "gpi/error.hpp"

namespace gpi {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

Residue reduce(std::int64_t v, Residue p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

Residue add_mod(Residue a, Residue b, Residue p) {
  auto s = static_cast<std::uint64_t>(a) + b;
  return static_cast<Residue>(s >= p ? s - p : s);
}

Residue sub_mod(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }

Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p);
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<Residue>(result);
}

Residue inv_mod(Residue a, Residue p) {
  // extended Euclid on signed values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  if (new_r == 0) throw Error("inverse of zero residue");
  while (new_r != 0) {
    auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Residue p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

void FpMatrix::append_row(std::span<const Residue> values) {
  assert(values.size() == cols_);
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<Residue> FpMatrix::apply(std::span<const Residue> v) const {
  assert(v.size() == cols_);
  std::vector<Residue> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto row_values = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc += static_cast<std::uint64_t>(row_values[c]) * v[c];
    out[r] = static_cast<Residue>(acc % p_);
  }
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  assert(cols_ == rhs.rows_);
  FpMatrix out(rows_, rhs.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += static_cast<std::uint64_t>(at(i, k)) * rhs.at(k, j);
      out.at(i, j) = static_cast<Residue>(acc % p_);
    }
  }
  return out;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix out(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

RowEchelon rref(const FpMatrix& m) {
  FpMatrix a = m;
  const Residue p = m.prime();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != lead) {
      auto r1 = a.row(sel);
      auto r2 = a.row(lead);
      std::swap_ranges(r1.begin(), r1.end(), r2.begin());
    }
    auto pivot_row = a.row(lead);
    const Residue scale = inv_mod(pivot_row[col], p);
    for (auto& v : pivot_row) v = mul_mod(v, scale, p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      const Residue factor = a.at(r, col);
      if (factor == 0) continue;
      auto target = a.row(r);
      for (std::size_t c = col; c < a.cols(); ++c) {
        target[c] = sub_mod(target[c], mul_mod(factor, pivot_row[c], p), p);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  FpMatrix reduced(0, m.cols(), p);
  for (std::size_t r = 0; r < lead; ++r) reduced.append_row(a.row(r));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivots.size(); }

FpMatrix nullspace(const FpMatrix& m) {
  const Residue p = m.prime();
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  FpMatrix basis(0, m.cols(), p);
  std::vector<Residue> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = sub_mod(0, reduced.at(r, free), p);
    }
    basis.append_row(v);
  }
  return rref(basis).reduced;
}

std::optional<std::vector<Residue>> solve_linear(const FpMatrix& m, std::span<const Residue> b) {
  assert(b.size() == m.rows());
  FpMatrix aug(m.rows(), m.cols() + 1, m.prime());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Residue> x(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced.at(r, m.cols());
  return x;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  FpMatrix aug(n, 2 * n, m.prime());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  auto [reduced, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  FpMatrix out(n, n, m.prime());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = reduced.at(r, n + c);
  return out;
}

bool in_row_space(const FpMatrix& basis, std::span<const Residue> v) {
  FpMatrix extended = basis;
  extended.append_row(v);
  return rank(extended) == rank(basis);
}

}  // namespace gpi

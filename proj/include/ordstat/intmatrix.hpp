#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ordstat/arith.hpp"

namespace ordstat {

// Dense matrix with unbounded integer entries; all arithmetic is exact.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(size_t rows, size_t cols, std::vector<BigInt> entries);

  static IntMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  BigInt& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const BigInt& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
  std::strong_ordering operator<=>(const IntMatrix& o) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  IntMatrix transpose() const;
  IntMatrix pow(uint64_t k) const;

  // Bareiss fraction-free elimination; square matrices only.
  BigInt determinant() const;
  // Adjugate via cofactors: (*this) * adjugate() == determinant() * I.
  IntMatrix adjugate() const;

  std::vector<BigInt> row(size_t i) const;
  // Matrix times column vector.
  std::vector<BigInt> apply(std::span<const BigInt> v) const;

  std::string to_string() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

// Row-style Hermite normal form of the lattice spanned by the rows of m:
// zero rows dropped, row echelon with positive pivots, and every entry above
// a pivot reduced into [0, pivot). Canonical for a given row span.
IntMatrix hermite_normal_form(const IntMatrix& m);

// Expresses v as an integer combination of the rows of an HNF basis.
// Returns the coordinates, or nullopt when v is outside the lattice.
std::optional<std::vector<BigInt>> hnf_coordinates(const IntMatrix& basis,
                                                   std::vector<BigInt> v);

}  // namespace ordstat

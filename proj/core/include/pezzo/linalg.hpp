#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pezzo/rational.hpp"

namespace pezzo {

using RatVector = std::vector<Rational>;

/// Dense exact-rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVector row(std::size_t r) const;
  RatVector col(std::size_t c) const;

  RatMatrix transpose() const;
  RatMatrix mul(const RatMatrix& other) const;
  RatVector apply(const RatVector& v) const;

  /// Deletes one row and one column (used for restricting forms).
  RatMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const;

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RatMatrix& m);

Rational det(const RatMatrix& m);

/// Row-reduced echelon form: leading 1 pivots, pivot columns cleared,
/// rows sorted by pivot column, zero rows removed.
RatMatrix rref(const RatMatrix& m);

/// Basis of the right null space {x : Mx = 0}, returned as the rows of
/// the reduced echelon normal form of the kernel; canonical, so equal
/// subspaces compare equal entrywise.  Empty when M is injective.
std::vector<RatVector> kernel(const RatMatrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Standard cross product on 3-vectors; throws on length mismatch.
RatVector cross3(const RatVector& u, const RatVector& v);

Rational dot(const RatVector& u, const RatVector& v);

/// Canonical (RREF-row) basis for the sum of two row spaces.
std::vector<RatVector> subspace_sum(const std::vector<RatVector>& a,
                                    const std::vector<RatVector>& b);

/// Canonical basis for the intersection of two row spaces.
std::vector<RatVector> subspace_intersection(const std::vector<RatVector>& a,
                                             const std::vector<RatVector>& b);

bool in_rowspace(const RatVector& v, const std::vector<RatVector>& basis);

}  // namespace pezzo

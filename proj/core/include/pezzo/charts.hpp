#pragma once

#include <array>
#include <string>

#include "pezzo/pluecker.hpp"

namespace pezzo {

/// Standard affine chart of Gr(4,5), keyed by the non-pivot column; the
/// chart matrix has the identity on the pivot columns and the free
/// variables a,b,c,d down the non-pivot column.
struct LambdaChart {
  int non_pivot = 4;

  explicit LambdaChart(int col);
  std::array<int, 4> pivot_cols() const;
  std::string key() const { return std::to_string(non_pivot); }
};

/// Standard affine chart of the fiber Gr(3, wedge^2 Lambda), keyed by the
/// sorted triple of pivot Pluecker indices.
struct FChart {
  std::array<int, 3> cols;  // positions into fiber_pairs(), strictly increasing

  static FChart from_cols(std::array<int, 3> cols);
  /// Key format "01,03,13" using the fiber Pluecker labels.
  static FChart from_key(const std::string& key);
  std::string key() const;

  bool operator==(const FChart& other) const = default;
};

/// All 5 Lambda charts and all 20 F charts, in deterministic order.
std::vector<LambdaChart> all_lambda_charts();
std::vector<FChart> all_fcharts();

/// Chart matrix with rows spanning the 4-space; entries are 0/1 and the
/// chart variables a..d of the supplied ring.
PolyMat lambda_matrix(const LambdaChart& chart, const Ring& ring);

/// 3x6 fiber chart matrix: identity on the pivot columns, free variables
/// e..m row-wise in increasing free-column order.
PolyMat f_matrix(const FChart& chart, const Ring& ring);

/// Linear form in the ambient Pluecker coordinates p_ij.
class Hyperplane {
 public:
  explicit Hyperplane(std::vector<Rational> coefficients);

  /// Parses e.g. "p12 - p03"; the form must be linear and nonzero.
  static Hyperplane parse(const std::string& text);

  const std::vector<Rational>& coefficients() const { return coef_; }

  Polynomial eval(const ExteriorVector& v) const;
  Rational eval(const RatVector& u, const RatVector& v) const;

  std::string to_string() const;

  bool operator==(const Hyperplane& other) const = default;

 private:
  std::vector<Rational> coef_;  // length 10, ambient pair order
};

Hyperplane hyperplane_h1();  // p12 - p03
Hyperplane hyperplane_h2();  // p13 - p24

/// Wedges u_i ^ u_j of the chart rows, in fiber pair order, written in
/// ambient Pluecker coordinates.
std::array<ExteriorVector, 6> basis_wedges(const PolyMat& lambda);

/// Linear form in the fiber coordinates q_ij with coefficients polynomial
/// in the base chart variables a..d.
struct QLinearForm {
  std::array<Polynomial, 6> coef;

  Polynomial apply(const std::vector<Polynomial>& q_row) const;
  Polynomial apply_rats(const Ring& ring, const RatVector& q_row) const;
};

/// Coefficient at q_ij is the hyperplane evaluated on basis_wedges[ij].
QLinearForm pullback(const Hyperplane& h, const LambdaChart& chart,
                     const Ring& ring);

}  // namespace pezzo

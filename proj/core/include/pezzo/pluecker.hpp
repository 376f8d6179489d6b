#pragma once

#include <array>
#include <utility>
#include <vector>

#include "pezzo/linalg.hpp"
#include "pezzo/poly.hpp"

namespace pezzo {

using PolyMat = std::vector<std::vector<Polynomial>>;

/// Index pairs (i,j), i<j, in lexicographic order: the ambient set has 10
/// entries over {0..4}, the fiber set 6 entries over {0..3}.
const std::vector<std::pair<int, int>>& ambient_pairs();
const std::vector<std::pair<int, int>>& fiber_pairs();

int ambient_pair_index(int i, int j);
int fiber_pair_index(int i, int j);

/// Element of a second exterior power in the Pluecker basis e_i ^ e_j;
/// 10 coordinates over the ambient space, 6 over a chart fiber.
struct ExteriorVector {
  std::vector<Polynomial> c;

  bool is_fiber() const { return c.size() == 6; }
  bool is_ambient() const { return c.size() == 10; }
  bool is_zero() const;
};

/// Wedge of two 5-vectors: coordinate at (i,j) is u_i v_j - u_j v_i.
ExteriorVector wedge2(const std::vector<Polynomial>& u,
                      const std::vector<Polynomial>& v);

ExteriorVector wedge2(const Ring& ring, const RatVector& u,
                      const RatVector& v);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k);

Polynomial poly_det(const PolyMat& m);

PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b);

PolyMat poly_mat_from_rat(const Ring& ring, const RatMatrix& m);

RatMatrix poly_mat_eval(const PolyMat& m, const std::vector<Rational>& point);

/// Ordered maximal minors of a k x n matrix (k <= n), columns taken in
/// increasing order, subsets in lexicographic order.  For k=2, n=5 this
/// is the ambient Pluecker vector of the row space.
std::vector<Polynomial> plucker_of_rowspace(const PolyMat& m);

/// det(AB) for 2x3 A and 3x2 B via the cross-product form
/// (rowA0 x rowA1) . (colB0 x colB1); throws on any other shape.
Rational cauchy_binet_det(const RatMatrix& a, const RatMatrix& b);

/// Gr(2,4) relation q01*q23 - q02*q13 + q03*q12 = 0 on a fiber vector.
bool plucker_relation_ok(const ExteriorVector& v);

/// The five 3-term Gr(2,5) relations evaluated on an ambient vector.
std::vector<Polynomial> gr25_relations(const ExteriorVector& v);

}  // namespace pezzo

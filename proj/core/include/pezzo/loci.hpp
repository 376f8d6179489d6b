#pragma once

#include <optional>

#include "pezzo/charts.hpp"
#include "pezzo/groebner.hpp"

namespace pezzo {

/// The two Schubert families of planes in Gr(2,5): lines through a fixed
/// point inside a fixed P^3, and lines inside a fixed P^2.
enum class PlaneType { Sigma31, Sigma22 };

std::string plane_type_key(PlaneType t);              // "s31" / "s22"
PlaneType plane_type_from_key(const std::string& k);

/// Linear section data: Gr(2,5) cut by zero or more hyperplanes.
class VarietySpec {
 public:
  static VarietySpec y5();
  static VarietySpec y4();
  static VarietySpec g();
  static VarietySpec custom(std::vector<Hyperplane> hyperplanes);

  const std::string& name() const { return name_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  int dim() const { return 6 - static_cast<int>(hyperplanes_.size()); }

 private:
  VarietySpec(std::string name, std::vector<Hyperplane> hyperplanes);

  std::string name_;
  std::vector<Hyperplane> hyperplanes_;
};

/// Echelon parameterization of one family chart: for sigma22 the 3x4 row
/// matrix R with parameters al,be,ga down the free column; for sigma31 a
/// vertex of P(Lambda) with a 1 at the pivot position.
PolyMat sigma22_r_matrix(int free_col, const Ring& ring);
std::vector<Polynomial> sigma31_vertex(int pivot, const Ring& ring);

/// Wedge of two rows of Lambda-coordinates, in fiber Pluecker order.
std::vector<Polynomial> fiber_wedge(const std::vector<Polynomial>& u,
                                    const std::vector<Polynomial>& v);

/// 3x6 span of the plane family in fiber coordinates, rows the wedges of
/// parameterization rows (sigma22) or of the vertex with the complementary
/// chart rows (sigma31), scaled so every pivot entry is +1.
PolyMat sigma22_span(int free_col, const Ring& ring);
PolyMat sigma31_span(const std::vector<Polynomial>& vertex, int pivot,
                     const Ring& ring);

/// Span of the family chart indexed like the parameterizations above.
PolyMat plane_span(PlaneType t, int shape, const Ring& ring);

/// The unique parameterization chart whose span is literally in the given
/// F-chart echelon form, if any.
std::optional<int> shape_for_fchart(PlaneType t, const FChart& fchart);
FChart fchart_for_shape(PlaneType t, int shape);

/// One generator per (F-row, hyperplane): the row's fiber coordinates
/// substituted into the pulled-back form.
Ideal ideal_SY(const LambdaChart& lchart, const FChart& fchart,
               const VarietySpec& spec, const Ring& ring);

/// Graph-plus-containment system behind ideal_TG / ideal_TY, exposed for
/// property tests; empty when no parameterization chart fits the F-chart.
struct TYSystem {
  int shape = -1;
  PolyMat span;
  std::vector<Polynomial> graph;        // chart free var - span entry
  std::vector<Polynomial> containment;  // span rows under pulled-back forms
};

std::optional<TYSystem> ty_system(const LambdaChart& lchart,
                                  const FChart& fchart, PlaneType t,
                                  const VarietySpec& spec, const Ring& ring);

/// Chart ideal of the undefined-locus component: eliminate the plane
/// parameters from the graph system; unit ideal when the family has no
/// canonical presentation in this chart.
Ideal ideal_TG(const LambdaChart& lchart, const FChart& fchart, PlaneType t,
               const Ring& ring);

struct TYResult {
  Ideal ideal;
  bool graph_form = true;   // parameters solved or absent in the block basis
  bool shape_chart = false; // the family's canonical chart matches fchart
};

/// Chart ideal of the intersection locus: graph system plus the
/// containment of every span row in every pulled-back hyperplane form,
/// parameters eliminated.
TYResult ideal_TY(const LambdaChart& lchart, const FChart& fchart, PlaneType t,
                  const VarietySpec& spec, const Ring& ring);

struct KernelFreeness {
  int generic_rank = 0;
  bool minors_unit = false;
};

/// Rank data for the coefficient matrix of the pulled-back forms on a
/// chart: generic rank at random rational points and the unit-ideal test
/// on the maximal minors, certifying the rank never drops on the chart.
KernelFreeness kernel_freeness(const VarietySpec& spec,
                               const LambdaChart& lchart, const Ring& ring);

/// Restriction of a hyperplane 2-form to the row space of V4 (4x5, rank 4):
/// entry (i,j) is the form on row_i ^ row_j.
RatMatrix restricted_form(const Hyperplane& h, const RatMatrix& v4);

struct FiberT {
  bool nonempty = false;
  /// sigma31 datum: the vertex locus (2-dim kernel for a 5-fold section,
  /// 1-dim kernel intersection for a 4-fold), ambient coordinates.
  std::vector<RatVector> vertex_space;
  /// sigma22 datum: kernel for a 5-fold, 3-dim kernel sum for a 4-fold.
  std::vector<RatVector> plane_space;
};

FiberT fiber_T(const VarietySpec& spec, const RatMatrix& v4);

/// True when every hyperplane of the variety vanishes identically on all
/// three (independent) spanning exterior vectors.
bool plane_in_variety(const std::vector<ExteriorVector>& span3,
                      const VarietySpec& spec);

/// Parameter variable indices {al, be, ga, s} of the chart ring.
std::vector<int> plane_parameter_vars(const Ring& ring);

}  // namespace pezzo

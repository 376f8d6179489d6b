#include "pezzo/loci.hpp"

#include <algorithm>
#include <stdexcept>

namespace pezzo {

std::string plane_type_key(PlaneType t) {
  return t == PlaneType::Sigma31 ? "s31" : "s22";
}

PlaneType plane_type_from_key(const std::string& k) {
  if (k == "s31") return PlaneType::Sigma31;
  if (k == "s22") return PlaneType::Sigma22;
  throw std::invalid_argument("plane type: expected s31 or s22, got " + k);
}

VarietySpec::VarietySpec(std::string name, std::vector<Hyperplane> hyperplanes)
    : name_(std::move(name)), hyperplanes_(std::move(hyperplanes)) {
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
    for (std::size_t j = i + 1; j < hyperplanes_.size(); ++j) {
      RatMatrix pair(2, 10);
      for (std::size_t k = 0; k < 10; ++k) {
        pair.at(0, k) = hyperplanes_[i].coefficients()[k];
        pair.at(1, k) = hyperplanes_[j].coefficients()[k];
      }
      if (rank(pair) != 2)
        throw std::invalid_argument(
            "variety spec: hyperplanes must be pairwise independent");
    }
}

VarietySpec VarietySpec::y5() { return VarietySpec("y5", {hyperplane_h1()}); }

VarietySpec VarietySpec::y4() {
  return VarietySpec("y4", {hyperplane_h1(), hyperplane_h2()});
}

VarietySpec VarietySpec::g() { return VarietySpec("g", {}); }

VarietySpec VarietySpec::custom(std::vector<Hyperplane> hyperplanes) {
  return VarietySpec("custom", std::move(hyperplanes));
}

namespace {

int chart_var(const Ring& ring, const char* name) {
  int idx = ring->find(name);
  if (idx < 0)
    throw std::invalid_argument(std::string("chart ring lacks variable ") +
                                name);
  return idx;
}

const char* kFiberVars[9] = {"e", "f", "g", "h", "i", "j", "k", "l", "m"};
const char* kParamVars[3] = {"al", "be", "ga"};

std::vector<int> free_cols_of(const FChart& fchart) {
  std::vector<int> out;
  for (int c = 0; c < 6; ++c)
    if (std::find(fchart.cols.begin(), fchart.cols.end(), c) ==
        fchart.cols.end())
      out.push_back(c);
  return out;
}

}  // namespace

std::vector<int> plane_parameter_vars(const Ring& ring) {
  return {chart_var(ring, "al"), chart_var(ring, "be"), chart_var(ring, "ga"),
          chart_var(ring, "s")};
}

PolyMat sigma22_r_matrix(int free_col, const Ring& ring) {
  if (free_col < 0 || free_col > 3)
    throw std::invalid_argument("sigma22 shape: free column must be 0..3");
  PolyMat r(3, std::vector<Polynomial>(4, Polynomial::zero(ring)));
  std::vector<int> pivots;
  for (int c = 0; c < 4; ++c)
    if (c != free_col) pivots.push_back(c);
  for (int row = 0; row < 3; ++row) {
    r[row][pivots[row]] = Polynomial::constant(ring, Rational(1));
    r[row][free_col] = Polynomial::variable(ring, kParamVars[row]);
  }
  return r;
}

std::vector<Polynomial> sigma31_vertex(int pivot, const Ring& ring) {
  if (pivot < 0 || pivot > 3)
    throw std::invalid_argument("sigma31 shape: pivot must be 0..3");
  std::vector<Polynomial> x(4, Polynomial::zero(ring));
  int p = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == pivot)
      x[i] = Polynomial::constant(ring, Rational(1));
    else
      x[i] = Polynomial::variable(ring, kParamVars[p++]);
  }
  return x;
}

std::vector<Polynomial> fiber_wedge(const std::vector<Polynomial>& u,
                                    const std::vector<Polynomial>& v) {
  if (u.size() != 4 || v.size() != 4)
    throw std::invalid_argument("fiber_wedge: 4-vectors expected");
  std::vector<Polynomial> out;
  out.reserve(6);
  for (auto [i, j] : fiber_pairs()) out.push_back(u[i] * v[j] - u[j] * v[i]);
  return out;
}

PolyMat sigma22_span(int free_col, const Ring& ring) {
  PolyMat r = sigma22_r_matrix(free_col, ring);
  return {fiber_wedge(r[0], r[1]), fiber_wedge(r[0], r[2]),
          fiber_wedge(r[1], r[2])};
}

PolyMat sigma31_span(const std::vector<Polynomial>& vertex, int pivot,
                     const Ring& ring) {
  if (vertex.size() != 4)
    throw std::invalid_argument("sigma31_span: vertex must have 4 entries");
  PolyMat span;
  for (int j = 0; j < 4; ++j) {
    if (j == pivot) continue;
    std::vector<Polynomial> row(6, Polynomial::zero(ring));
    for (int k = 0; k < 6; ++k) {
      auto [r, s] = fiber_pairs()[k];
      if (s == j)
        row[k] = vertex[r];
      else if (r == j)
        row[k] = -vertex[s];
    }
    if (j < pivot)
      for (auto& p : row) p = -p;
    span.push_back(std::move(row));
  }
  return span;
}

PolyMat plane_span(PlaneType t, int shape, const Ring& ring) {
  if (t == PlaneType::Sigma22) return sigma22_span(shape, ring);
  return sigma31_span(sigma31_vertex(shape, ring), shape, ring);
}

namespace {

bool span_matches_fchart(const PolyMat& span, const FChart& fchart,
                         const Ring& ring) {
  Polynomial one = Polynomial::constant(ring, Rational(1));
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      const Polynomial& entry = span[r][fchart.cols[s]];
      if (r == s ? entry != one : !entry.is_zero()) return false;
    }
  return true;
}

}  // namespace

std::optional<int> shape_for_fchart(PlaneType t, const FChart& fchart) {
  Ring ring = chart_ring();
  for (int shape = 0; shape < 4; ++shape)
    if (span_matches_fchart(plane_span(t, shape, ring), fchart, ring))
      return shape;
  return std::nullopt;
}

FChart fchart_for_shape(PlaneType t, int shape) {
  Ring ring = chart_ring();
  PolyMat span = plane_span(t, shape, ring);
  for (const auto& fchart : all_fcharts())
    if (span_matches_fchart(span, fchart, ring)) return fchart;
  throw std::logic_error("plane span matches no fiber chart");
}

Ideal ideal_SY(const LambdaChart& lchart, const FChart& fchart,
               const VarietySpec& spec, const Ring& ring) {
  PolyMat f = f_matrix(fchart, ring);
  std::vector<Polynomial> gens;
  for (const auto& h : spec.hyperplanes()) {
    QLinearForm form = pullback(h, lchart, ring);
    for (int r = 0; r < 3; ++r) gens.push_back(form.apply(f[r]));
  }
  return Ideal(ring, std::move(gens));
}

std::optional<TYSystem> ty_system(const LambdaChart& lchart,
                                  const FChart& fchart, PlaneType t,
                                  const VarietySpec& spec, const Ring& ring) {
  auto shape = shape_for_fchart(t, fchart);
  if (!shape) return std::nullopt;
  TYSystem sys;
  sys.shape = *shape;
  sys.span = plane_span(t, *shape, ring);
  auto free_cols = free_cols_of(fchart);
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      sys.graph.push_back(
          Polynomial::variable(ring, kFiberVars[3 * r + s]) -
          sys.span[r][free_cols[s]]);
  for (const auto& h : spec.hyperplanes()) {
    QLinearForm form = pullback(h, lchart, ring);
    for (int r = 0; r < 3; ++r) sys.containment.push_back(form.apply(sys.span[r]));
  }
  return sys;
}

Ideal ideal_TG(const LambdaChart& lchart, const FChart& fchart, PlaneType t,
               const Ring& ring) {
  auto sys = ty_system(lchart, fchart, t, VarietySpec::g(), ring);
  if (!sys) return Ideal::unit(ring);
  Ideal graph(ring, sys->graph);
  return eliminate(graph, plane_parameter_vars(ring));
}

TYResult ideal_TY(const LambdaChart& lchart, const FChart& fchart, PlaneType t,
                  const VarietySpec& spec, const Ring& ring) {
  TYResult out;
  auto sys = ty_system(lchart, fchart, t, spec, ring);
  if (!sys) {
    out.ideal = Ideal::unit(ring);
    out.graph_form = true;
    out.shape_chart = false;
    return out;
  }
  std::vector<Polynomial> gens = sys->graph;
  gens.insert(gens.end(), sys->containment.begin(), sys->containment.end());
  auto elim = eliminate_with_gb(Ideal(ring, std::move(gens)),
                                plane_parameter_vars(ring));
  out.ideal = std::move(elim.ideal);
  out.graph_form = elim.solved_form;
  out.shape_chart = true;
  return out;
}

KernelFreeness kernel_freeness(const VarietySpec& spec,
                               const LambdaChart& lchart, const Ring& ring) {
  int h = static_cast<int>(spec.hyperplanes().size());
  if (h < 1)
    throw std::invalid_argument("kernel_freeness: spec needs a hyperplane");

  PolyMat coeff;
  for (const auto& hp : spec.hyperplanes()) {
    QLinearForm form = pullback(hp, lchart, ring);
    coeff.emplace_back(form.coef.begin(), form.coef.end());
  }

  KernelFreeness out;
  std::vector<Polynomial> minors;
  int k = std::min(h, 6);
  for (const auto& cols : combinations(6, k)) {
    for (const auto& rows : combinations(h, k)) {
      PolyMat sub(k, std::vector<Polynomial>(k, Polynomial::zero(ring)));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub[r][c] = coeff[rows[r]][cols[c]];
      minors.push_back(poly_det(sub));
    }
  }
  out.minors_unit = is_unit(Ideal(ring, std::move(minors)));

  // Generic rank via a deterministic sample sweep; degenerate points only
  // lower the rank, so the maximum over samples is the generic value.
  uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next_small = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<long long>((state >> 33) % 19) - 9;
  };
  std::size_t best = 0;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Rational> point(ring->size(), Rational(0));
    for (const char* v : {"a", "b", "c", "d"})
      point[chart_var(ring, v)] = Rational(next_small());
    best = std::max(best, rank(poly_mat_eval(coeff, point)));
  }
  out.generic_rank = static_cast<int>(best);
  return out;
}

RatMatrix restricted_form(const Hyperplane& h, const RatMatrix& v4) {
  if (v4.rows() != 4 || v4.cols() != 5)
    throw std::invalid_argument("restricted_form: 4x5 matrix expected");
  if (rank(v4) != 4)
    throw std::invalid_argument("restricted_form: rows must be independent");
  RatMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Rational val = h.eval(v4.row(i), v4.row(j));
      out.at(i, j) = val;
      out.at(j, i) = -val;
    }
  return out;
}

namespace {

// Lifts kernel vectors from V4-row coordinates to ambient coordinates and
// canonicalizes the resulting subspace basis.
std::vector<RatVector> lift_rows(const std::vector<RatVector>& coords,
                                 const RatMatrix& v4) {
  std::vector<RatVector> ambient;
  for (const auto& c : coords) {
    RatVector x(v4.cols(), Rational(0));
    for (std::size_t r = 0; r < v4.rows(); ++r)
      for (std::size_t j = 0; j < v4.cols(); ++j) x[j] += c[r] * v4.at(r, j);
    ambient.push_back(std::move(x));
  }
  if (ambient.empty()) return ambient;
  RatMatrix can = rref(RatMatrix::from_rows(ambient));
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < can.rows(); ++r) out.push_back(can.row(r));
  return out;
}

RatVector unit_vec(std::size_t n, std::size_t i) {
  RatVector v(n, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace

FiberT fiber_T(const VarietySpec& spec, const RatMatrix& v4) {
  if (v4.rows() != 4 || v4.cols() != 5 || rank(v4) != 4)
    throw std::invalid_argument("fiber_T: rank-4 4x5 matrix expected");
  FiberT out;
  if (spec.hyperplanes().size() == 1) {
    RatMatrix omega = restricted_form(spec.hyperplanes()[0], v4);
    if (rank(omega) != 2) return out;
    auto ker = lift_rows(kernel(omega), v4);
    out.nonempty = true;
    out.vertex_space = ker;
    out.plane_space = std::move(ker);
    return out;
  }
  if (spec.hyperplanes().size() == 2) {
    std::vector<RatVector> rows;
    for (std::size_t r = 0; r < 4; ++r) rows.push_back(v4.row(r));
    for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{4}})
      if (!in_rowspace(unit_vec(5, i), rows)) return out;
    RatMatrix o1 = restricted_form(spec.hyperplanes()[0], v4);
    RatMatrix o2 = restricted_form(spec.hyperplanes()[1], v4);
    if (rank(o1) != 2 || rank(o2) != 2) return out;
    auto k1 = lift_rows(kernel(o1), v4);
    auto k2 = lift_rows(kernel(o2), v4);
    out.vertex_space = subspace_intersection(k1, k2);
    out.plane_space = subspace_sum(k1, k2);
    out.nonempty = out.vertex_space.size() == 1 && out.plane_space.size() == 3;
    if (!out.nonempty) {
      out.vertex_space.clear();
      out.plane_space.clear();
    }
    return out;
  }
  throw std::invalid_argument("fiber_T: spec must have 1 or 2 hyperplanes");
}

bool plane_in_variety(const std::vector<ExteriorVector>& span3,
                      const VarietySpec& spec) {
  if (span3.size() != 3)
    throw std::invalid_argument("plane_in_variety: three vectors expected");
  for (const auto& v : span3)
    if (!v.is_ambient())
      throw std::invalid_argument("plane_in_variety: ambient vectors expected");

  PolyMat m{span3[0].c, span3[1].c, span3[2].c};
  bool independent = false;
  for (const auto& cols : combinations(10, 3)) {
    PolyMat sub(3, std::vector<Polynomial>(3, Polynomial::zero(m[0][0].ring())));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) sub[r][c] = m[r][cols[c]];
    if (!poly_det(sub).is_zero()) {
      independent = true;
      break;
    }
  }
  if (!independent)
    throw std::invalid_argument("plane_in_variety: vectors are dependent");

  for (const auto& h : spec.hyperplanes())
    for (const auto& v : span3)
      if (!h.eval(v).is_zero()) return false;
  return true;
}

}  // namespace pezzo

#include <map>

#include "pezzo/rng.hpp"
#include "pezzo/verify.hpp"

namespace pezzo {

namespace {

RatVector unit5(int i) {
  RatVector v(5, Rational(0));
  v[i] = 1;
  return v;
}

RatMatrix sample_v4_containing(SampleRng& rng,
                               const std::vector<RatVector>& required) {
  while (true) {
    std::vector<RatVector> rows = required;
    while (rows.size() < 4) rows.push_back(rng.vec(5, 4));
    RatMatrix m = RatMatrix::from_rows(rows);
    if (rank(m) == 4) return m;
  }
}

RatMatrix sample_v4_avoiding(SampleRng& rng, const RatVector& avoided) {
  while (true) {
    RatMatrix m = rng.mat(4, 5, 4);
    if (rank(m) != 4) continue;
    std::vector<RatVector> rows;
    for (std::size_t r = 0; r < 4; ++r) rows.push_back(m.row(r));
    rows.push_back(avoided);
    if (rank(RatMatrix::from_rows(rows)) == 5) return m;
  }
}

bool vanishes_on_pairs(const Hyperplane& h, const std::vector<RatVector>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (h.eval(basis[i], basis[j]) != 0) return false;
  return true;
}

SuiteResult suite_restricted_form_dichotomy(uint64_t seed, int trials) {
  SuiteResult res{"restricted-form-dichotomy", 0, trials, {}};
  SampleRng rng(seed);
  VarietySpec y5 = VarietySpec::y5();
  Hyperplane h1 = hyperplane_h1();
  for (int t = 0; t < trials; ++t) {
    bool ok = true;
    RatMatrix with = sample_v4_containing(rng, {unit5(4)});
    ok = ok && rank(restricted_form(h1, with)) == 2;
    FiberT ft = fiber_T(y5, with);
    ok = ok && ft.nonempty && ft.vertex_space.size() == 2 &&
         ft.plane_space.size() == 2;
    if (ok) {
      for (const auto& v : ft.vertex_space)
        for (std::size_t r = 0; r < 4; ++r)
          ok = ok && h1.eval(v, with.row(r)) == 0;
      ok = ok && in_rowspace(unit5(4), ft.vertex_space);
    }
    RatMatrix without = sample_v4_avoiding(rng, unit5(4));
    ok = ok && rank(restricted_form(h1, without)) == 4;
    ok = ok && !fiber_T(y5, without).nonempty;
    if (ok)
      ++res.passed;
    else if (res.failures.size() < 5)
      res.failures.push_back("trial " + std::to_string(t));
  }
  return res;
}

SuiteResult suite_fourfold_fiber_structure(uint64_t seed, int trials) {
  SuiteResult res{"fourfold-fiber-structure", 0, trials, {}};
  SampleRng rng(seed);
  VarietySpec y4 = VarietySpec::y4();
  for (int t = 0; t < trials; ++t) {
    bool ok = true;
    RatMatrix v4 = sample_v4_containing(rng, {unit5(0), unit5(1), unit5(4)});
    FiberT ft = fiber_T(y4, v4);
    ok = ok && ft.nonempty && ft.vertex_space.size() == 1 &&
         ft.plane_space.size() == 3;
    if (ok) {
      for (const auto& h : y4.hyperplanes())
        ok = ok && vanishes_on_pairs(h, ft.plane_space);
      ok = ok && in_rowspace(ft.vertex_space[0], ft.plane_space);
    }
    RatMatrix off = sample_v4_avoiding(rng, unit5(4));
    ok = ok && !fiber_T(y4, off).nonempty;
    if (ok)
      ++res.passed;
    else if (res.failures.size() < 5)
      res.failures.push_back("trial " + std::to_string(t));
  }
  return res;
}

SuiteResult suite_cauchy_binet(uint64_t seed, int trials) {
  SuiteResult res{"cauchy-binet", 0, trials, {}};
  SampleRng rng(seed);
  for (int t = 0; t < trials; ++t) {
    RatMatrix a = rng.mat(2, 3);
    RatMatrix b = rng.mat(3, 2);
    if (cauchy_binet_det(a, b) == det(a.mul(b)))
      ++res.passed;
    else if (res.failures.size() < 5)
      res.failures.push_back("trial " + std::to_string(t));
  }
  return res;
}

SuiteResult suite_pluecker_relations(uint64_t seed, int trials) {
  SuiteResult res{"pluecker-relations", 0, trials + 2, {}};
  SampleRng rng(seed);
  Ring ring = chart_ring();
  for (int t = 0; t < trials; ++t) {
    bool ok = true;

    RatMatrix two_by_five = rng.mat(2, 5);
    ExteriorVector w = wedge2(ring, two_by_five.row(0), two_by_five.row(1));
    for (const auto& rel : gr25_relations(w)) ok = ok && rel.is_zero();

    RatVector u4 = rng.vec(4), v4 = rng.vec(4);
    ExteriorVector fib;
    for (auto [i, j] : fiber_pairs())
      fib.c.push_back(
          Polynomial::constant(ring, u4[i] * v4[j] - u4[j] * v4[i]));
    ok = ok && plucker_relation_ok(fib);

    RatMatrix two_by_three = rng.mat(2, 3);
    PolyMat lifted = poly_mat_from_rat(ring, two_by_three);
    auto minors = plucker_of_rowspace(lifted);
    RatVector cp = cross3(two_by_three.row(0), two_by_three.row(1));
    ok = ok && minors[0].as_constant() == cp[2] &&
         minors[1].as_constant() == -cp[1] && minors[2].as_constant() == cp[0];

    if (ok)
      ++res.passed;
    else if (res.failures.size() < 5)
      res.failures.push_back("trial " + std::to_string(t));
  }
  {
    ExteriorVector bad;
    for (int i = 0; i < 6; ++i)
      bad.c.push_back(Polynomial::constant(
          ring, (i == 0 || i == 5) ? Rational(1) : Rational(0)));
    if (!plucker_relation_ok(bad))
      ++res.passed;
    else
      res.failures.push_back("non-decomposable vector accepted");
  }
  {
    ExteriorVector zero;
    for (int i = 0; i < 6; ++i) zero.c.push_back(Polynomial::zero(ring));
    if (plucker_relation_ok(zero))
      ++res.passed;
    else
      res.failures.push_back("zero vector rejected");
  }
  return res;
}

// Skew 4x4 coefficient matrix of a fiber linear form, as polynomials.
PolyMat skew_of_form(const QLinearForm& form, const Ring& ring) {
  PolyMat m(4, std::vector<Polynomial>(4, Polynomial::zero(ring)));
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = fiber_pairs()[k];
    m[i][j] = form.coef[k];
    m[j][i] = -form.coef[k];
  }
  return m;
}

std::vector<Polynomial> row_times_mat(const std::vector<Polynomial>& x,
                                      const PolyMat& m, const Ring& ring) {
  std::vector<Polynomial> out(m[0].size(), Polynomial::zero(ring));
  for (std::size_t j = 0; j < m[0].size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) out[j] += x[i] * m[i][j];
  return out;
}

bool all_minors_vanish(const PolyMat& m, int k, const Ring& ring) {
  auto row_sets = combinations(static_cast<int>(m.size()), k);
  auto col_sets = combinations(static_cast<int>(m[0].size()), k);
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      PolyMat sub(k, std::vector<Polynomial>(k, Polynomial::zero(ring)));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub[r][c] = m[rs[r]][cs[c]];
      if (!poly_det(sub).is_zero()) return false;
    }
  return true;
}

bool some_minor_nonzero(const PolyMat& m, int k, const Ring& ring) {
  return !all_minors_vanish(m, k, ring);
}

SuiteResult suite_plane_witnesses() {
  SuiteResult res{"plane-witnesses", 0, 6, {}};
  Ring ring = chart_ring();
  auto note = [&res](const char* what, bool ok) {
    if (ok)
      ++res.passed;
    else
      res.failures.push_back(what);
  };

  VarietySpec y4 = VarietySpec::y4();
  VarietySpec y5 = VarietySpec::y5();

  // Fixed plane spanned by wedges of e0, e1, e4.
  {
    std::vector<ExteriorVector> span = {wedge2(ring, unit5(0), unit5(1)),
                                        wedge2(ring, unit5(0), unit5(4)),
                                        wedge2(ring, unit5(1), unit5(4))};
    note("fixed plane inside the 4-fold section", plane_in_variety(span, y4));
  }

  // Pencil of planes (e0 + t e1 - t^2 e4) ^ V4(t), identically in t.
  {
    Polynomial tvar = Polynomial::variable(ring, "t");
    auto lift = [&](const RatVector& v) {
      std::vector<Polynomial> out;
      for (const auto& r : v) out.push_back(Polynomial::constant(ring, r));
      return out;
    };
    std::vector<Polynomial> x = lift(unit5(0));
    std::vector<Polynomial> e1 = lift(unit5(1));
    std::vector<Polynomial> e4 = lift(unit5(4));
    for (int i = 0; i < 5; ++i)
      x[i] = x[i] + tvar * e1[i] - tvar * tvar * e4[i];
    std::vector<Polynomial> mid = lift(unit5(2));
    std::vector<Polynomial> e3 = lift(unit5(3));
    for (int i = 0; i < 5; ++i) mid[i] = mid[i] + tvar * e3[i];
    std::vector<ExteriorVector> span = {wedge2(x, lift(unit5(0))),
                                        wedge2(x, mid),
                                        wedge2(x, lift(unit5(4)))};
    note("plane pencil inside the 4-fold section", plane_in_variety(span, y4));
  }

  // Conic relation on the pencil's vertex direction (1, t, 0, 0, -t^2).
  {
    Polynomial tvar = Polynomial::variable(ring, "t");
    Polynomial a0 = Polynomial::constant(ring, Rational(1));
    Polynomial a1 = tvar;
    Polynomial a4 = -(tvar * tvar);
    note("conic relation on the vertex pencil", (a0 * a4 + a1 * a1).is_zero());
  }

  // A plane not contained in the 5-fold section.
  {
    std::vector<ExteriorVector> span = {wedge2(ring, unit5(0), unit5(1)),
                                        wedge2(ring, unit5(0), unit5(2)),
                                        wedge2(ring, unit5(1), unit5(2))};
    note("plane outside the 5-fold section rejected",
         !plane_in_variety(span, y5));
  }

  // Vertex family of the sigma31 locus over the column-2 chart: kernel of
  // the pulled-back form at d=0 is spanned by (c,1,-a,0) and (0,0,0,1).
  {
    int d_idx = ring->find("d");
    QLinearForm q = pullback(hyperplane_h1(), LambdaChart(2), ring);
    PolyMat m = skew_of_form(q, ring);
    std::map<int, Polynomial> kill_d{{d_idx, Polynomial::zero(ring)}};
    for (auto& row : m)
      for (auto& p : row) p = p.substitute(kill_d);
    std::vector<Polynomial> k1 = {Polynomial::variable(ring, "c"),
                                  Polynomial::constant(ring, Rational(1)),
                                  -Polynomial::variable(ring, "a"),
                                  Polynomial::zero(ring)};
    std::vector<Polynomial> k2 = {Polynomial::zero(ring),
                                  Polynomial::zero(ring),
                                  Polynomial::zero(ring),
                                  Polynomial::constant(ring, Rational(1))};
    bool ok = true;
    for (const auto& p : row_times_mat(k1, m, ring)) ok = ok && p.is_zero();
    for (const auto& p : row_times_mat(k2, m, ring)) ok = ok && p.is_zero();
    ok = ok && all_minors_vanish(m, 3, ring) && some_minor_nonzero(m, 2, ring);
    note("sigma31 vertex family kernel", ok);
  }

  // Unique sigma31 vertex of the 4-fold locus over the column-2 chart.
  {
    int a_idx = ring->find("a"), b_idx = ring->find("b"),
        d_idx = ring->find("d");
    std::map<int, Polynomial> on_locus{{a_idx, Polynomial::zero(ring)},
                                       {b_idx, Polynomial::zero(ring)},
                                       {d_idx, Polynomial::zero(ring)}};
    PolyMat m1 =
        skew_of_form(pullback(hyperplane_h1(), LambdaChart(2), ring), ring);
    PolyMat m2 =
        skew_of_form(pullback(hyperplane_h2(), LambdaChart(2), ring), ring);
    for (auto* m : {&m1, &m2})
      for (auto& row : *m)
        for (auto& p : row) p = p.substitute(on_locus);
    Polynomial c = Polynomial::variable(ring, "c");
    std::vector<Polynomial> x = {-(c * c), -c, Polynomial::zero(ring),
                                 Polynomial::constant(ring, Rational(1))};
    bool ok = true;
    for (const auto& p : row_times_mat(x, m1, ring)) ok = ok && p.is_zero();
    for (const auto& p : row_times_mat(x, m2, ring)) ok = ok && p.is_zero();
    PolyMat stacked(8, std::vector<Polynomial>(4, Polynomial::zero(ring)));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        stacked[i][j] = m1[j][i];
        stacked[4 + i][j] = m2[j][i];
      }
    ok = ok && all_minors_vanish(stacked, 4, ring) &&
         some_minor_nonzero(stacked, 3, ring);
    note("unique 4-fold sigma31 vertex", ok);
  }
  return res;
}

SuiteResult suite_kernel_freeness() {
  SuiteResult res{"kernel-freeness", 0, 10, {}};
  Ring ring = chart_ring();
  for (const auto& spec : {VarietySpec::y5(), VarietySpec::y4()}) {
    int expected = static_cast<int>(spec.hyperplanes().size());
    for (const auto& l : all_lambda_charts()) {
      KernelFreeness kf = kernel_freeness(spec, l, ring);
      if (kf.minors_unit && kf.generic_rank == expected)
        ++res.passed;
      else
        res.failures.push_back(spec.name() + " lambda " + l.key());
    }
  }
  return res;
}

SuiteResult suite_low_rank_sections(uint64_t seed) {
  SuiteResult res{"low-rank-sections", 0, 30, {}};
  SampleRng rng(seed);
  Ring ring = chart_ring();
  for (int m : {1, 2}) {
    int count = 6 - m;
    for (int set = 0; set < 3; ++set) {
      VarietySpec spec = [&] {
        while (true) {
          std::vector<Hyperplane> hs;
          bool bad = false;
          for (int i = 0; i < count && !bad; ++i) {
            RatVector coef = rng.vec(10, 4);
            bool zero = std::all_of(coef.begin(), coef.end(),
                                    [](const Rational& c) { return c == 0; });
            if (zero) coef[0] = 1;
            hs.emplace_back(std::vector<Rational>(coef.begin(), coef.end()));
          }
          try {
            return VarietySpec::custom(std::move(hs));
          } catch (const std::invalid_argument&) {
          }
        }
      }();
      for (const auto& l : all_lambda_charts()) {
        KernelFreeness kf = kernel_freeness(spec, l, ring);
        if (kf.generic_rank == count)
          ++res.passed;
        else
          res.failures.push_back("m=" + std::to_string(m) + " lambda " +
                                 l.key());
      }
    }
  }
  return res;
}

RatVector fiber_wedge_rat(const RatVector& u, const RatVector& v) {
  RatVector out;
  out.reserve(6);
  for (auto [i, j] : fiber_pairs()) out.push_back(u[i] * v[j] - u[j] * v[i]);
  return out;
}

struct ChartIdeals {
  std::vector<Polynomial> gens;  // SY + TG + TY generators together
};

SuiteResult suite_locus_point_soundness(uint64_t seed, int trials) {
  SuiteResult res{"locus-point-soundness", 0, trials, {}};
  SampleRng rng(seed);
  Ring ring = chart_ring();
  VarietySpec y5 = VarietySpec::y5();
  VarietySpec y4 = VarietySpec::y4();

  std::map<std::string, ChartIdeals> cache;
  auto ideals_for = [&](const VarietySpec& spec, const LambdaChart& l,
                        const FChart& f, PlaneType t) -> const ChartIdeals& {
    std::string key = spec.name() + "|" + l.key() + "|" + f.key() + "|" +
                      plane_type_key(t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ChartIdeals ci;
    for (const auto& g : ideal_SY(l, f, spec, ring).generators)
      ci.gens.push_back(g);
    for (const auto& g : ideal_TG(l, f, t, ring).generators)
      ci.gens.push_back(g);
    for (const auto& g : ideal_TY(l, f, t, spec, ring).ideal.generators)
      ci.gens.push_back(g);
    return cache.emplace(key, std::move(ci)).first->second;
  };

  for (int trial = 0; trial < trials; ++trial) {
    bool y5_case = trial % 2 == 0;
    PlaneType ptype =
        (trial / 2) % 2 == 0 ? PlaneType::Sigma31 : PlaneType::Sigma22;
    const VarietySpec& spec = y5_case ? y5 : y4;

    RatMatrix v4 =
        y5_case ? sample_v4_containing(rng, {unit5(4)})
                : sample_v4_containing(rng, {unit5(0), unit5(1), unit5(4)});

    // Normalize into the first Lambda chart that contains the point.
    std::optional<LambdaChart> lchart;
    RatMatrix norm;
    for (const auto& l : all_lambda_charts()) {
      auto pc = l.pivot_cols();
      RatMatrix sub(4, 4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) sub.at(r, c) = v4.at(r, pc[c]);
      auto inv = inverse(sub);
      if (!inv) continue;
      lchart = l;
      norm = inv->mul(v4);
      break;
    }
    if (!lchart) continue;

    // Kernel data of the restricted forms, in chart row coordinates.
    std::vector<std::vector<RatVector>> kernels;
    for (const auto& h : spec.hyperplanes())
      kernels.push_back(kernel(restricted_form(h, norm)));

    RatVector x;               // sigma31 vertex, row coordinates
    std::vector<RatVector> w;  // sigma22 plane rows, row coordinates
    if (y5_case) {
      const auto& ker = kernels[0];
      if (ker.size() != 2) continue;
      while (true) {
        Rational l1 = rng.small_int(3), l2 = rng.small_int(3);
        if (l1 == 0 && l2 == 0) continue;
        x.assign(4, Rational(0));
        for (int i = 0; i < 4; ++i) x[i] = l1 * ker[0][i] + l2 * ker[1][i];
        break;
      }
      while (true) {
        w = kernels[0];
        w.push_back(rng.vec(4, 3));
        if (rank(RatMatrix::from_rows(w)) == 3) break;
      }
    } else {
      auto meet = subspace_intersection(kernels[0], kernels[1]);
      auto join = subspace_sum(kernels[0], kernels[1]);
      if (meet.size() != 1 || join.size() != 3) {
        if (res.failures.size() < 5)
          res.failures.push_back("trial " + std::to_string(trial) +
                                 ": kernel structure");
        continue;
      }
      x = meet[0];
      w = join;
    }

    // Fiber-space basis of the plane, in q coordinates.
    std::vector<RatVector> urows;
    if (ptype == PlaneType::Sigma31) {
      std::vector<RatVector> raw;
      for (int j = 0; j < 4; ++j) {
        RatVector ej(4, Rational(0));
        ej[j] = 1;
        raw.push_back(fiber_wedge_rat(x, ej));
      }
      RatMatrix can = rref(RatMatrix::from_rows(raw));
      for (std::size_t r = 0; r < can.rows(); ++r) urows.push_back(can.row(r));
    } else {
      urows = {fiber_wedge_rat(w[0], w[1]), fiber_wedge_rat(w[0], w[2]),
               fiber_wedge_rat(w[1], w[2])};
    }
    if (urows.size() != 3 || rank(RatMatrix::from_rows(urows)) != 3) {
      if (res.failures.size() < 5)
        res.failures.push_back("trial " + std::to_string(trial) +
                               ": span rank");
      continue;
    }
    RatMatrix u3 = RatMatrix::from_rows(urows);

    bool placed = false;
    bool all_zero = true;
    for (int shape = 0; shape < 4 && all_zero; ++shape) {
      FChart fchart = fchart_for_shape(ptype, shape);
      RatMatrix sub(3, 3);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) sub.at(r, c) = u3.at(r, fchart.cols[c]);
      auto inv = inverse(sub);
      if (!inv) continue;
      placed = true;
      RatMatrix coords = inv->mul(u3);

      std::vector<Rational> point(ring->size(), Rational(0));
      static const char* base_vars[4] = {"a", "b", "c", "d"};
      for (int r = 0; r < 4; ++r)
        point[ring->find(base_vars[r])] = norm.at(r, lchart->non_pivot);
      static const char* fiber_vars[9] = {"e", "f", "g", "h", "i",
                                          "j", "k", "l", "m"};
      std::vector<int> free_cols;
      for (int c = 0; c < 6; ++c)
        if (std::find(fchart.cols.begin(), fchart.cols.end(), c) ==
            fchart.cols.end())
          free_cols.push_back(c);
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s)
          point[ring->find(fiber_vars[3 * r + s])] = coords.at(r, free_cols[s]);

      const ChartIdeals& ci = ideals_for(spec, *lchart, fchart, ptype);
      for (const auto& g : ci.gens)
        if (g.eval(point) != 0) {
          all_zero = false;
          break;
        }
    }

    if (placed && all_zero)
      ++res.passed;
    else if (res.failures.size() < 5)
      res.failures.push_back("trial " + std::to_string(trial) +
                             (placed ? ": nonzero generator" : ": no chart"));
  }
  return res;
}

}  // namespace

PropsSummary props(uint64_t seed, int trials) {
  PropsSummary summary;
  summary.seed = seed;
  summary.trials = trials;
  summary.suites.push_back(suite_restricted_form_dichotomy(seed, trials));
  summary.suites.push_back(suite_fourfold_fiber_structure(seed + 1, trials));
  summary.suites.push_back(suite_cauchy_binet(seed + 2, trials));
  summary.suites.push_back(suite_pluecker_relations(seed + 3, trials));
  summary.suites.push_back(suite_plane_witnesses());
  summary.suites.push_back(suite_kernel_freeness());
  summary.suites.push_back(suite_low_rank_sections(seed + 4));
  summary.suites.push_back(suite_locus_point_soundness(seed + 5, trials));
  return summary;
}

}  // namespace pezzo

#include "pezzo/charts.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pezzo {

LambdaChart::LambdaChart(int col) : non_pivot(col) {
  if (col < 0 || col > 4)
    throw std::invalid_argument("lambda chart: column must be 0..4");
}

std::array<int, 4> LambdaChart::pivot_cols() const {
  std::array<int, 4> out{};
  int k = 0;
  for (int c = 0; c < 5; ++c)
    if (c != non_pivot) out[k++] = c;
  return out;
}

FChart FChart::from_cols(std::array<int, 3> cols) {
  std::sort(cols.begin(), cols.end());
  if (cols[0] < 0 || cols[2] > 5 || cols[0] == cols[1] || cols[1] == cols[2])
    throw std::invalid_argument("f chart: pivot triple must be 3 of 0..5");
  return FChart{cols};
}

FChart FChart::from_key(const std::string& key) {
  std::array<int, 3> cols{};
  std::stringstream ss(key);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 3) throw std::invalid_argument("f chart key: too many pivots");
    if (item.size() != 2 || !isdigit(static_cast<unsigned char>(item[0])) ||
        !isdigit(static_cast<unsigned char>(item[1])))
      throw std::invalid_argument("f chart key: bad pivot label " + item);
    cols[n++] = fiber_pair_index(item[0] - '0', item[1] - '0');
  }
  if (n != 3) throw std::invalid_argument("f chart key: need 3 pivots");
  return from_cols(cols);
}

std::string FChart::key() const {
  std::ostringstream os;
  for (int k = 0; k < 3; ++k) {
    auto [i, j] = fiber_pairs()[cols[k]];
    if (k) os << ",";
    os << i << j;
  }
  return os.str();
}

std::vector<LambdaChart> all_lambda_charts() {
  std::vector<LambdaChart> out;
  for (int c = 0; c < 5; ++c) out.push_back(LambdaChart(c));
  return out;
}

std::vector<FChart> all_fcharts() {
  std::vector<FChart> out;
  for (const auto& combo : combinations(6, 3))
    out.push_back(FChart::from_cols({combo[0], combo[1], combo[2]}));
  return out;
}

PolyMat lambda_matrix(const LambdaChart& chart, const Ring& ring) {
  static const char* vars[4] = {"a", "b", "c", "d"};
  PolyMat m(4, std::vector<Polynomial>(5, Polynomial::zero(ring)));
  auto pivots = chart.pivot_cols();
  for (int r = 0; r < 4; ++r) {
    m[r][pivots[r]] = Polynomial::constant(ring, Rational(1));
    m[r][chart.non_pivot] = Polynomial::variable(ring, vars[r]);
  }
  return m;
}

PolyMat f_matrix(const FChart& chart, const Ring& ring) {
  static const char* vars[9] = {"e", "f", "g", "h", "i", "j", "k", "l", "m"};
  PolyMat m(3, std::vector<Polynomial>(6, Polynomial::zero(ring)));
  std::vector<int> free_cols;
  for (int c = 0; c < 6; ++c)
    if (std::find(chart.cols.begin(), chart.cols.end(), c) == chart.cols.end())
      free_cols.push_back(c);
  for (int r = 0; r < 3; ++r) {
    m[r][chart.cols[r]] = Polynomial::constant(ring, Rational(1));
    for (int s = 0; s < 3; ++s)
      m[r][free_cols[s]] = Polynomial::variable(ring, vars[3 * r + s]);
  }
  return m;
}

Hyperplane::Hyperplane(std::vector<Rational> coefficients)
    : coef_(std::move(coefficients)) {
  if (coef_.size() != 10)
    throw std::invalid_argument("hyperplane: need 10 coefficients");
  if (std::all_of(coef_.begin(), coef_.end(),
                  [](const Rational& c) { return c == 0; }))
    throw std::invalid_argument("hyperplane: form is zero");
}

Hyperplane Hyperplane::parse(const std::string& text) {
  Polynomial p = Polynomial::parse(text, pluecker_ring());
  std::vector<Rational> coef(10, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1)
      throw std::invalid_argument("hyperplane: form must be linear: " + text);
    for (std::size_t v = 0; v < 10; ++v)
      if (m.e[v] == 1) coef[v] = c;
  }
  return Hyperplane(std::move(coef));
}

Polynomial Hyperplane::eval(const ExteriorVector& v) const {
  if (!v.is_ambient())
    throw std::invalid_argument("hyperplane eval: ambient vector expected");
  Polynomial acc = Polynomial::zero(v.c[0].ring());
  for (std::size_t i = 0; i < 10; ++i)
    if (coef_[i] != 0) acc += v.c[i].scaled(coef_[i]);
  return acc;
}

Rational Hyperplane::eval(const RatVector& u, const RatVector& v) const {
  if (u.size() != 5 || v.size() != 5)
    throw std::invalid_argument("hyperplane eval: 5-vectors expected");
  Rational acc = 0;
  for (std::size_t k = 0; k < 10; ++k) {
    if (coef_[k] == 0) continue;
    auto [i, j] = ambient_pairs()[k];
    acc += coef_[k] * (u[i] * v[j] - u[j] * v[i]);
  }
  return acc;
}

std::string Hyperplane::to_string() const {
  std::vector<Polynomial::Term> terms;
  Ring ring = pluecker_ring();
  Polynomial acc = Polynomial::zero(ring);
  for (std::size_t i = 0; i < 10; ++i)
    if (coef_[i] != 0)
      acc += Polynomial::variable(ring, static_cast<int>(i)).scaled(coef_[i]);
  return acc.to_string();
}

Hyperplane hyperplane_h1() { return Hyperplane::parse("p12-p03"); }
Hyperplane hyperplane_h2() { return Hyperplane::parse("p13-p24"); }

std::array<ExteriorVector, 6> basis_wedges(const PolyMat& lambda) {
  if (lambda.size() != 4 || lambda[0].size() != 5)
    throw std::invalid_argument("basis_wedges: 4x5 matrix expected");
  std::array<ExteriorVector, 6> out;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = fiber_pairs()[k];
    out[k] = wedge2(lambda[i], lambda[j]);
  }
  return out;
}

Polynomial QLinearForm::apply(const std::vector<Polynomial>& q_row) const {
  if (q_row.size() != 6)
    throw std::invalid_argument("q-form apply: 6 coordinates expected");
  Polynomial acc = Polynomial::zero(coef[0].ring());
  for (std::size_t i = 0; i < 6; ++i) acc += coef[i] * q_row[i];
  return acc;
}

Polynomial QLinearForm::apply_rats(const Ring& ring,
                                   const RatVector& q_row) const {
  std::vector<Polynomial> lifted;
  lifted.reserve(6);
  for (const auto& r : q_row) lifted.push_back(Polynomial::constant(ring, r));
  return apply(lifted);
}

QLinearForm pullback(const Hyperplane& h, const LambdaChart& chart,
                     const Ring& ring) {
  PolyMat lambda = lambda_matrix(chart, ring);
  auto wedges = basis_wedges(lambda);
  QLinearForm out;
  for (std::size_t i = 0; i < 6; ++i) out.coef[i] = h.eval(wedges[i]);
  return out;
}

}  // namespace pezzo

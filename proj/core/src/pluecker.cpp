#include "pezzo/pluecker.hpp"

#include <algorithm>
#include <stdexcept>

namespace pezzo {

const std::vector<std::pair<int, int>>& ambient_pairs() {
  static const std::vector<std::pair<int, int>> pairs = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
      {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  return pairs;
}

const std::vector<std::pair<int, int>>& fiber_pairs() {
  static const std::vector<std::pair<int, int>> pairs = {
      {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return pairs;
}

namespace {

int pair_index(const std::vector<std::pair<int, int>>& table, int i, int j) {
  for (std::size_t k = 0; k < table.size(); ++k)
    if (table[k].first == i && table[k].second == j) return static_cast<int>(k);
  throw std::invalid_argument("pair index: bad pair");
}

}  // namespace

int ambient_pair_index(int i, int j) { return pair_index(ambient_pairs(), i, j); }
int fiber_pair_index(int i, int j) { return pair_index(fiber_pairs(), i, j); }

bool ExteriorVector::is_zero() const {
  return std::all_of(c.begin(), c.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

ExteriorVector wedge2(const std::vector<Polynomial>& u,
                      const std::vector<Polynomial>& v) {
  if (u.size() != 5 || v.size() != 5)
    throw std::invalid_argument("wedge2: vectors must have length 5");
  ExteriorVector w;
  w.c.reserve(10);
  for (auto [i, j] : ambient_pairs()) w.c.push_back(u[i] * v[j] - u[j] * v[i]);
  return w;
}

ExteriorVector wedge2(const Ring& ring, const RatVector& u,
                      const RatVector& v) {
  auto lift = [&](const RatVector& x) {
    std::vector<Polynomial> out;
    out.reserve(x.size());
    for (const auto& r : x) out.push_back(Polynomial::constant(ring, r));
    return out;
  };
  return wedge2(lift(u), lift(v));
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Polynomial poly_det(const PolyMat& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("poly_det: not square");
  if (n == 0) throw std::invalid_argument("poly_det: empty matrix");
  if (n == 1) return m[0][0];
  const Ring& ring = m[0][0].ring();
  Polynomial acc = Polynomial::zero(ring);
  // Laplace expansion along the first row; fine for the small sizes here.
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMat sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial contrib = m[0][j] * poly_det(sub);
    if (j % 2 == 0)
      acc += contrib;
    else
      acc -= contrib;
  }
  return acc;
}

PolyMat poly_mat_mul(const PolyMat& a, const PolyMat& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw std::invalid_argument("poly_mat_mul: dimension mismatch");
  const Ring& ring = a[0][0].ring();
  PolyMat out(a.size(), std::vector<Polynomial>(b[0].size(),
                                                Polynomial::zero(ring)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

PolyMat poly_mat_from_rat(const Ring& ring, const RatMatrix& m) {
  PolyMat out(m.rows(), std::vector<Polynomial>(m.cols(),
                                                Polynomial::zero(ring)));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out[r][c] = Polynomial::constant(ring, m.at(r, c));
  return out;
}

RatMatrix poly_mat_eval(const PolyMat& m, const std::vector<Rational>& point) {
  RatMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m[r].size(); ++c)
      out.at(r, c) = m[r][c].eval(point);
  return out;
}

std::vector<Polynomial> plucker_of_rowspace(const PolyMat& m) {
  if (m.empty()) throw std::invalid_argument("plucker_of_rowspace: empty");
  int k = static_cast<int>(m.size());
  int n = static_cast<int>(m[0].size());
  if (k > n)
    throw std::invalid_argument("plucker_of_rowspace: more rows than columns");
  std::vector<Polynomial> out;
  for (const auto& cols : combinations(n, k)) {
    PolyMat sub(k, std::vector<Polynomial>(k, Polynomial::zero(m[0][0].ring())));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sub[r][c] = m[r][cols[c]];
    out.push_back(poly_det(sub));
  }
  return out;
}

Rational cauchy_binet_det(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != 2 || a.cols() != 3 || b.rows() != 3 || b.cols() != 2)
    throw std::invalid_argument("cauchy_binet_det: shapes must be 2x3 and 3x2");
  return dot(cross3(a.row(0), a.row(1)), cross3(b.col(0), b.col(1)));
}

bool plucker_relation_ok(const ExteriorVector& v) {
  if (!v.is_fiber())
    throw std::invalid_argument("plucker_relation_ok: fiber vector expected");
  Polynomial rel = v.c[0] * v.c[5] - v.c[1] * v.c[4] + v.c[2] * v.c[3];
  return rel.is_zero();
}

std::vector<Polynomial> gr25_relations(const ExteriorVector& v) {
  if (!v.is_ambient())
    throw std::invalid_argument("gr25_relations: ambient vector expected");
  std::vector<Polynomial> rels;
  for (const auto& q : combinations(5, 4)) {
    int i = q[0], j = q[1], k = q[2], l = q[3];
    rels.push_back(v.c[ambient_pair_index(i, j)] * v.c[ambient_pair_index(k, l)] -
                   v.c[ambient_pair_index(i, k)] * v.c[ambient_pair_index(j, l)] +
                   v.c[ambient_pair_index(i, l)] * v.c[ambient_pair_index(j, k)]);
  }
  return rels;
}

}  // namespace pezzo

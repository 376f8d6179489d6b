#include "pezzo/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace pezzo {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw std::invalid_argument("matrix: entry count != rows*cols");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return RatMatrix();
  RatMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  RatVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

RatVector RatMatrix::col(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::mul(const RatMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  RatMatrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        p.at(r, c) += at(r, k) * other.at(k, c);
    }
  return p;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix apply: dimension mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  return out;
}

RatMatrix RatMatrix::minor_matrix(std::size_t drop_row,
                                  std::size_t drop_col) const {
  RatMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
    if (r == drop_row) continue;
    for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
      if (c == drop_col) continue;
      m.at(rr, cc) = at(r, c);
      ++cc;
    }
    ++rr;
  }
  return m;
}

namespace {

// In-place forward elimination; returns pivot (row, col) pairs.
std::vector<std::pair<std::size_t, std::size_t>> eliminate_in_place(
    RatMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(sel, j), m.at(pr, j));
    Rational inv = Rational(1) / m.at(pr, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(pr, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pr || m.at(r, c) == 0) continue;
      Rational f = m.at(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(r, j) -= f * m.at(pr, j);
    }
    pivots.emplace_back(pr, c);
    ++pr;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  return eliminate_in_place(w).size();
}

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det: matrix not square");
  RatMatrix w = m;
  Rational d = 1;
  for (std::size_t c = 0; c < w.cols(); ++c) {
    std::size_t sel = c;
    while (sel < w.rows() && w.at(sel, c) == 0) ++sel;
    if (sel == w.rows()) return Rational(0);
    if (sel != c) {
      for (std::size_t j = 0; j < w.cols(); ++j)
        std::swap(w.at(sel, j), w.at(c, j));
      d = -d;
    }
    d *= w.at(c, c);
    Rational inv = Rational(1) / w.at(c, c);
    for (std::size_t r = c + 1; r < w.rows(); ++r) {
      if (w.at(r, c) == 0) continue;
      Rational f = w.at(r, c) * inv;
      for (std::size_t j = c; j < w.cols(); ++j)
        w.at(r, j) -= f * w.at(c, j);
    }
  }
  return d;
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix w = m;
  auto pivots = eliminate_in_place(w);
  RatMatrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = w.at(pivots[i].first, j);
  return out;
}

std::vector<RatVector> kernel(const RatMatrix& m) {
  RatMatrix w = m;
  auto pivots = eliminate_in_place(w);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto& [r, c] : pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    RatVector v(m.cols());
    v[j] = 1;
    for (auto& [r, c] : pivots) v[c] = -w.at(r, j);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  RatMatrix can = rref(RatMatrix::from_rows(basis));
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < can.rows(); ++r) out.push_back(can.row(r));
  return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  auto pivots = eliminate_in_place(aug);
  if (pivots.size() != n || pivots.back().second >= n) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

RatVector cross3(const RatVector& u, const RatVector& v) {
  if (u.size() != 3 || v.size() != 3)
    throw std::invalid_argument("cross3: vectors must have length 3");
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

Rational dot(const RatVector& u, const RatVector& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

std::vector<RatVector> subspace_sum(const std::vector<RatVector>& a,
                                    const std::vector<RatVector>& b) {
  std::vector<RatVector> all = a;
  all.insert(all.end(), b.begin(), b.end());
  if (all.empty()) return {};
  RatMatrix can = rref(RatMatrix::from_rows(all));
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < can.rows(); ++r) out.push_back(can.row(r));
  return out;
}

std::vector<RatVector> subspace_intersection(const std::vector<RatVector>& a,
                                             const std::vector<RatVector>& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a[0].size();
  // Solutions (lambda, mu) of lambda*A - mu*B = 0 give points lambda*A.
  RatMatrix sys(n, a.size() + b.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) sys.at(i, j) = a[j][i];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) sys.at(i, a.size() + j) = -b[j][i];
  auto null_basis = kernel(sys);
  std::vector<RatVector> pts;
  for (const auto& nb : null_basis) {
    RatVector p(n);
    for (std::size_t j = 0; j < a.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) p[i] += nb[j] * a[j][i];
    bool zero = std::all_of(p.begin(), p.end(),
                            [](const Rational& x) { return x == 0; });
    if (!zero) pts.push_back(std::move(p));
  }
  if (pts.empty()) return {};
  RatMatrix can = rref(RatMatrix::from_rows(pts));
  std::vector<RatVector> out;
  for (std::size_t r = 0; r < can.rows(); ++r) out.push_back(can.row(r));
  return out;
}

bool in_rowspace(const RatVector& v, const std::vector<RatVector>& basis) {
  if (basis.empty())
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& x) { return x == 0; });
  std::vector<RatVector> with = basis;
  with.push_back(v);
  return rank(RatMatrix::from_rows(with)) ==
         rank(RatMatrix::from_rows(basis));
}

}  // namespace pezzo

#pragma once

#include <string>
#include <vector>

#include "pezzo/groebner.hpp"

namespace pezzo::testutil {

inline Polynomial P(const std::string& text, const Ring& ring = chart_ring()) {
  return Polynomial::parse(text, ring);
}

inline Ideal ideal_of(const std::vector<std::string>& gens,
                      const Ring& ring = chart_ring()) {
  std::vector<Polynomial> ps;
  ps.reserve(gens.size());
  for (const auto& g : gens) ps.push_back(P(g, ring));
  return Ideal(ring, std::move(ps));
}

inline RatMatrix rat_mat(std::size_t rows, std::size_t cols,
                         std::vector<long long> entries) {
  std::vector<Rational> rs;
  rs.reserve(entries.size());
  for (long long v : entries) rs.emplace_back(BigInt(v));
  return RatMatrix(rows, cols, std::move(rs));
}

inline RatVector rat_vec(std::vector<long long> entries) {
  RatVector v;
  v.reserve(entries.size());
  for (long long x : entries) v.emplace_back(BigInt(x));
  return v;
}

}  // namespace pezzo::testutil

#include "pezzo/ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pezzo {

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      throw std::invalid_argument("ring: empty variable name");
    auto [it, inserted] = index_.emplace(names_[i], static_cast<int>(i));
    if (!inserted)
      throw std::invalid_argument("ring: duplicate variable " + names_[i]);
  }
}

int VarTable::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

Ring chart_ring() {
  static Ring ring = make_ring({"a", "b", "c", "d", "e", "f", "g", "h", "i",
                                "j", "k", "l", "m", "al", "be", "ga", "s",
                                "t"});
  return ring;
}

Ring pluecker_ring() {
  static Ring ring = make_ring({"p01", "p02", "p03", "p04", "p12", "p13",
                                "p14", "p23", "p24", "p34"});
  return ring;
}

Monomial Monomial::var(std::size_t nvars, std::size_t i, uint32_t pow) {
  Monomial m = one(nvars);
  m.e[i] = pow;
  return m;
}

uint32_t Monomial::degree() const {
  return std::accumulate(e.begin(), e.end(), uint32_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (b.e[i] > m.e[i]) throw std::invalid_argument("monomial division");
    m.e[i] -= b.e[i];
  }
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
  return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

MonomialOrder MonomialOrder::block(std::vector<int> eliminated_first,
                                   std::size_t nvars) {
  std::vector<bool> mask(nvars, false);
  for (int v : eliminated_first) {
    if (v < 0 || static_cast<std::size_t>(v) >= nvars)
      throw std::invalid_argument("block order: variable out of range");
    mask[v] = true;
  }
  return MonomialOrder(Kind::Block, std::move(mask));
}

namespace {

int cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
  }
  return 0;
}

int cmp_grevlex(const Monomial& a, const Monomial& b) {
  uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

// grevlex restricted to the variables selected by the mask value.
int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                       const std::vector<bool>& mask, bool want) {
  uint32_t da = 0, db = 0;
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (mask[i] == want) {
      da += a.e[i];
      db += b.e[i];
    }
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (mask[i] != want) continue;
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.e.size() != b.e.size())
    throw std::invalid_argument("monomial compare: different rings");
  switch (kind_) {
    case Kind::Lex:
      return cmp_lex(a, b);
    case Kind::Grevlex:
      return cmp_grevlex(a, b);
    case Kind::Block: {
      int c = cmp_grevlex_masked(a, b, elim_, true);
      if (c != 0) return c;
      return cmp_grevlex_masked(a, b, elim_, false);
    }
  }
  return 0;
}

}  // namespace pezzo

#include "pezzo/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace pezzo {

Ideal::Ideal(Ring r, std::vector<Polynomial> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    generators.push_back(std::move(g));
  }
}

Ideal Ideal::unit(Ring r) {
  Polynomial one = Polynomial::constant(r, Rational(1));
  return Ideal(std::move(r), {one});
}

namespace {

// Term list sorted descending under the active order.
using Term = Polynomial::Term;

struct OPoly {
  std::vector<Term> t;

  bool zero() const { return t.empty(); }
  const Term& lt() const { return t.front(); }
};

OPoly to_opoly(const Polynomial& p, const MonomialOrder& ord) {
  OPoly o;
  o.t = p.terms();
  std::stable_sort(o.t.begin(), o.t.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.first, b.first) > 0;
  });
  return o;
}

Polynomial to_poly(const OPoly& o, const Ring& ring) {
  return Polynomial::from_terms(ring, o.t);
}

// r -= c * x^shift * g, merging the descending term lists.
OPoly subtract_scaled(const OPoly& r, const Rational& c, const Monomial& shift,
                      const OPoly& g, const MonomialOrder& ord) {
  OPoly out;
  out.t.reserve(r.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < r.t.size() && j < g.t.size()) {
    Monomial gm = mono_mul(g.t[j].first, shift);
    int cmp = ord.compare(r.t[i].first, gm);
    if (cmp > 0) {
      out.t.push_back(r.t[i++]);
    } else if (cmp < 0) {
      out.t.emplace_back(gm, -c * g.t[j].second);
      ++j;
    } else {
      Rational coef = r.t[i].second - c * g.t[j].second;
      if (coef != 0) out.t.emplace_back(gm, coef);
      ++i;
      ++j;
    }
  }
  while (i < r.t.size()) out.t.push_back(r.t[i++]);
  while (j < g.t.size()) {
    out.t.emplace_back(mono_mul(g.t[j].first, shift), -c * g.t[j].second);
    ++j;
  }
  return out;
}

// Full division remainder against the basis, first-divisor strategy.
OPoly reduce_full(OPoly f, const std::vector<OPoly>& basis,
                  const MonomialOrder& ord) {
  OPoly rem;
  std::size_t pos = 0;  // terms before pos are irreducible, already emitted
  while (pos < f.t.size()) {
    const Term& top = f.t[pos];
    const OPoly* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.zero()) continue;
      if (mono_divides(g.lt().first, top.first)) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) {
      rem.t.push_back(top);
      ++pos;
      continue;
    }
    Rational c = top.second / divisor->lt().second;
    Monomial shift = mono_div(top.first, divisor->lt().first);
    OPoly tail;
    tail.t.assign(f.t.begin() + static_cast<std::ptrdiff_t>(pos), f.t.end());
    f = subtract_scaled(tail, c, shift, *divisor, ord);
    pos = 0;
  }
  return rem;
}

// Clears denominators, divides content, makes the leading coefficient
// positive.  Keeps intermediate arithmetic small.
void make_primitive(OPoly& f) {
  if (f.zero()) return;
  BigInt den_lcm = 1;
  for (const auto& [m, c] : f.t)
    den_lcm = lcm(den_lcm, rat_den(c));
  BigInt num_gcd = 0;
  for (const auto& [m, c] : f.t) {
    BigInt scaled_num = rat_num(c) * (den_lcm / rat_den(c));
    num_gcd = gcd(num_gcd, scaled_num);
  }
  if (num_gcd == 0) num_gcd = 1;
  Rational factor = ratio(den_lcm, num_gcd);
  if (f.lt().second < 0) factor = -factor;
  for (auto& [m, c] : f.t) c *= factor;
}

void make_monic(OPoly& f) {
  if (f.zero()) return;
  Rational inv = Rational(1) / f.lt().second;
  for (auto& [m, c] : f.t) c *= inv;
}

OPoly spoly(const OPoly& f, const OPoly& g, const MonomialOrder& ord) {
  Monomial l = mono_lcm(f.lt().first, g.lt().first);
  OPoly sf;
  sf.t.reserve(f.t.size());
  Monomial shift_f = mono_div(l, f.lt().first);
  Rational cf = Rational(1) / f.lt().second;
  for (const auto& [m, c] : f.t)
    sf.t.emplace_back(mono_mul(m, shift_f), c * cf);
  Monomial shift_g = mono_div(l, g.lt().first);
  Rational cg = Rational(1) / g.lt().second;
  return subtract_scaled(sf, cg, shift_g, g, ord);
}

// Pair queue entry ordered by normal (degree) selection with the
// deterministic lex tie-break on the lcm, then indices.
struct PendingPair {
  uint32_t deg;
  Monomial lcm;
  std::size_t i, j;

  bool operator<(const PendingPair& other) const {
    if (deg != other.deg) return deg < other.deg;
    int c = MonomialOrder::lex().compare(lcm, other.lcm);
    if (c != 0) return c < 0;
    return std::tie(i, j) < std::tie(other.i, other.j);
  }
};

}  // namespace

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  std::vector<OPoly> ob;
  ob.reserve(basis.elements.size());
  for (const auto& g : basis.elements) ob.push_back(to_opoly(g, basis.order));
  OPoly r = reduce_full(to_opoly(p, basis.order), ob, basis.order);
  return to_poly(r, p.ring());
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord) {
  GroebnerBasis out;
  out.order = ord;
  if (ideal.generators.empty()) return out;
  const Ring& ring = ideal.ring;

  std::vector<OPoly> basis;
  for (const auto& g : ideal.generators) {
    OPoly o = to_opoly(g, ord);
    make_primitive(o);
    basis.push_back(std::move(o));
  }

  std::set<PendingPair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    Monomial l = mono_lcm(basis[i].lt().first, basis[j].lt().first);
    queue.insert(PendingPair{l.degree(), std::move(l), i, j});
    pending.insert({i, j});
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) enqueue(i, j);

  while (!queue.empty()) {
    PendingPair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    std::size_t i = pr.i, j = pr.j;

    const Monomial& li = basis[i].lt().first;
    const Monomial& lj = basis[j].lt().first;
    if (mono_coprime(li, lj)) continue;  // Buchberger's first criterion
    const Monomial& l = pr.lcm;
    bool chain_skip = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || k == j) continue;
      if (!mono_divides(basis[k].lt().first, l)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (!pending.count({p1.first, p1.second}) &&
          !pending.count({p2.first, p2.second})) {
        chain_skip = true;
        break;
      }
    }
    if (chain_skip) continue;

    OPoly s = spoly(basis[i], basis[j], ord);
    OPoly r = reduce_full(std::move(s), basis, ord);
    if (r.zero()) continue;
    make_primitive(r);
    std::size_t idx = basis.size();
    basis.push_back(std::move(r));
    for (std::size_t k = 0; k < idx; ++k) enqueue(k, idx);
  }

  // Minimalize: drop elements whose leading term another divides.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      const Monomial& li = basis[i].lt().first;
      const Monomial& lj = basis[j].lt().first;
      if (mono_divides(lj, li) && !(li == lj && j > i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis[i]));

  // Inter-reduce tails until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      OPoly self = std::move(minimal[i]);
      minimal[i] = OPoly{};
      OPoly r = reduce_full(self, minimal, ord);
      make_primitive(r);
      if (!(r.t == self.t)) changed = true;
      minimal[i] = std::move(r);
    }
    minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                                 [](const OPoly& p) { return p.zero(); }),
                  minimal.end());
  }

  for (auto& g : minimal) make_monic(g);
  std::sort(minimal.begin(), minimal.end(), [&](const OPoly& a, const OPoly& b) {
    return ord.compare(a.lt().first, b.lt().first) < 0;
  });
  for (const auto& g : minimal) out.elements.push_back(to_poly(g, ring));
  return out;
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& basis) {
  if (p.is_zero()) return true;
  if (basis.elements.empty()) return false;
  return normal_form(p, basis).is_zero();
}

bool ideal_member(const Polynomial& p, const Ideal& ideal) {
  return ideal_member(p, buchberger(ideal, MonomialOrder::grevlex()));
}

bool ideal_equal(const Ideal& lhs, const Ideal& rhs) {
  return buchberger(lhs, MonomialOrder::grevlex()) ==
         buchberger(rhs, MonomialOrder::grevlex());
}

Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs) {
  std::vector<Polynomial> gens = lhs.generators;
  gens.insert(gens.end(), rhs.generators.begin(), rhs.generators.end());
  Ring ring = lhs.ring ? lhs.ring : rhs.ring;
  return Ideal(ring, std::move(gens));
}

EliminationResult eliminate_with_gb(const Ideal& ideal,
                                    const std::vector<int>& drop_vars) {
  EliminationResult res;
  if (drop_vars.empty()) {
    res.block_gb = buchberger(ideal, MonomialOrder::grevlex());
    res.ideal = Ideal(ideal.ring, res.block_gb.elements);
    res.solved_form = true;
    return res;
  }
  std::size_t nvars = ideal.ring->size();
  MonomialOrder ord = MonomialOrder::block(drop_vars, nvars);
  res.block_gb = buchberger(ideal, ord);

  std::vector<bool> dropped(nvars, false);
  for (int v : drop_vars) dropped[v] = true;

  // The system is in solved form when every basis element touching a
  // dropped variable has a bare dropped variable as its leading term, so
  // that variable equals a polynomial in strictly smaller ones.  In the
  // block order a dropped variable in the support forces one into the
  // leading term, so this check is complete.
  std::vector<Polynomial> kept;
  res.solved_form = true;
  for (const auto& g : res.block_gb.elements) {
    if (!g.uses_any(dropped)) {
      kept.push_back(g);
      continue;
    }
    const auto& lt = g.leading_term(ord);
    bool bare_dropped = lt.first.degree() == 1;
    if (bare_dropped) {
      for (std::size_t v = 0; v < nvars; ++v)
        if (lt.first.e[v] == 1) bare_dropped = dropped[v];
    }
    if (!bare_dropped) res.solved_form = false;
  }

  res.ideal = Ideal(ideal.ring, std::move(kept));
  return res;
}

Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop_vars) {
  return eliminate_with_gb(ideal, drop_vars).ideal;
}

bool is_unit(const Ideal& ideal) {
  return buchberger(ideal, MonomialOrder::grevlex()).is_unit();
}

}  // namespace pezzo

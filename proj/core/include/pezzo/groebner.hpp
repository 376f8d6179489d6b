#pragma once

#include <string>
#include <vector>

#include "pezzo/poly.hpp"

namespace pezzo {

/// Finitely generated ideal; zero generators are dropped on construction
/// and generator order carries no meaning.
struct Ideal {
  Ring ring;
  std::vector<Polynomial> generators;

  Ideal() = default;
  Ideal(Ring r, std::vector<Polynomial> gens);

  static Ideal zero(Ring r) { return Ideal(std::move(r), {}); }
  static Ideal unit(Ring r);

  bool is_zero() const { return generators.empty(); }
};

/// Reduced Groebner basis: monic elements, no term of any element
/// divisible by the leading term of another, sorted ascending by leading
/// monomial.  Canonical for the ideal and order.
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> elements;

  bool is_unit() const {
    return elements.size() == 1 && elements[0].is_constant() &&
           !elements[0].is_zero();
  }
  bool operator==(const GroebnerBasis& other) const {
    return order == other.order && elements == other.elements;
  }
};

/// Full multivariate division remainder of p against the basis elements;
/// zero exactly when p lies in the generated ideal (for Groebner inputs).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

/// Buchberger with normal (degree) pair selection, coprime and chain
/// criteria, and primitive-part coefficient control; output reduced and
/// deterministic for a fixed generator list and order.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& ord);

bool ideal_member(const Polynomial& p, const Ideal& ideal);
bool ideal_member(const Polynomial& p, const GroebnerBasis& basis);

/// Equality via identical reduced grevlex bases.
bool ideal_equal(const Ideal& lhs, const Ideal& rhs);

Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs);

/// Elimination ideal: block-order basis with the dropped variables first,
/// restricted to elements free of them.
Ideal eliminate(const Ideal& ideal, const std::vector<int>& drop_vars);

struct EliminationResult {
  Ideal ideal;              // elements free of the dropped variables
  GroebnerBasis block_gb;   // full reduced basis under the block order
  bool solved_form = false; // every dropped variable either absent or the
                            // leading term of a basis element
};

EliminationResult eliminate_with_gb(const Ideal& ideal,
                                    const std::vector<int>& drop_vars);

bool is_unit(const Ideal& ideal);

}  // namespace pezzo

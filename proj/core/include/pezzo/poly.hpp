#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pezzo/rational.hpp"
#include "pezzo/ring.hpp"

namespace pezzo {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Sparse multivariate polynomial over the rationals.  Terms are kept
/// sorted descending under grevlex on the full ring, which doubles as the
/// canonical text form; other orders are applied on demand.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, int var_index);
  static Polynomial variable(Ring ring, const std::string& name);
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }
  std::optional<Rational> as_constant() const;
  uint32_t total_degree() const;

  /// Largest term under the given order; polynomial must be nonzero.
  const Term& leading_term(const MonomialOrder& ord) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(uint32_t n) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// Exact substitution var -> polynomial (unmentioned variables stay).
  Polynomial substitute(const std::map<int, Polynomial>& assignment) const;

  /// Full-point evaluation; values indexed by ring variable.
  Rational eval(const std::vector<Rational>& values) const;

  /// Variables actually occurring.
  std::vector<int> support() const;
  bool uses_any(const std::vector<bool>& vars) const;

  std::string to_string() const;
  std::string to_string(const MonomialOrder& ord) const;

  /// Parses the polynomial grammar: rational literals, ring variables,
  /// + - * ^ and parentheses; implicit multiplication is rejected.
  static Polynomial parse(const std::string& text, const Ring& ring);

 private:
  void check_same_ring(const Polynomial& other) const;

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

}  // namespace pezzo

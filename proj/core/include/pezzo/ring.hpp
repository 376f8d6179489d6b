#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace pezzo {

/// Ordered variable table of a polynomial ring.  Earlier names are larger
/// in every monomial order built on the ring.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a variable, or -1 when absent.
  int find(const std::string& name) const;

  bool operator==(const VarTable& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using Ring = std::shared_ptr<const VarTable>;

Ring make_ring(std::vector<std::string> names);

/// The canonical chart ring: base chart a..d, fiber chart e..m, then
/// plane parameters al, be, ga, s and the pencil parameter t.
Ring chart_ring();

/// Ambient Pluecker coordinate ring p01..p34 (10 variables) used to parse
/// and manipulate hyperplane forms.
Ring pluecker_ring();

/// Exponent vector; length always equals the ring size.
struct Monomial {
  std::vector<uint32_t> e;

  static Monomial one(std::size_t nvars) { return Monomial{std::vector<uint32_t>(nvars, 0)}; }
  static Monomial var(std::size_t nvars, std::size_t i, uint32_t pow = 1);

  uint32_t degree() const;
  bool is_one() const;
  bool operator==(const Monomial& other) const = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

/// Total monomial order: lex, graded reverse lex, or a block elimination
/// order that ranks any monomial containing one of the eliminated
/// variables above all monomials free of them (grevlex within blocks).
class MonomialOrder {
 public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  static MonomialOrder block(std::vector<int> eliminated_first,
                             std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<bool>& eliminated_mask() const { return elim_; }

  /// -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  bool operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && elim_ == other.elim_;
  }

 private:
  MonomialOrder(Kind k, std::vector<bool> elim)
      : kind_(k), elim_(std::move(elim)) {}

  Kind kind_;
  std::vector<bool> elim_;  // only for Block
};

}  // namespace pezzo

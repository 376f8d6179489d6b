#include "pezzo/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pezzo {

namespace {

const MonomialOrder& canonical_order() {
  static MonomialOrder ord = MonomialOrder::grevlex();
  return ord;
}

struct TermGreater {
  bool operator()(const Polynomial::Term& a, const Polynomial::Term& b) const {
    return canonical_order().compare(a.first, b.first) > 0;
  }
};

}  // namespace

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.emplace_back(Monomial::one(ring->size()), c);
  return p;
}

Polynomial Polynomial::variable(Ring ring, int var_index) {
  if (var_index < 0 || static_cast<std::size_t>(var_index) >= ring->size())
    throw std::invalid_argument("polynomial: variable index out of range");
  Polynomial p(ring);
  p.terms_.emplace_back(Monomial::var(ring->size(), var_index), Rational(1));
  return p;
}

Polynomial Polynomial::variable(Ring ring, const std::string& name) {
  int idx = ring->find(name);
  if (idx < 0)
    throw std::invalid_argument("polynomial: unknown variable " + name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  std::map<Monomial, Rational, decltype([](const Monomial& a,
                                           const Monomial& b) {
    return canonical_order().compare(a, b) < 0;
  })> acc;
  for (auto& [m, c] : terms) {
    if (m.e.size() != ring->size())
      throw std::invalid_argument("polynomial: monomial arity mismatch");
    acc[m] += c;
  }
  Polynomial p(std::move(ring));
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) p.terms_.emplace_back(it->first, it->second);
  return p;
}

std::optional<Rational> Polynomial::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].first.is_one()) return terms_[0].second;
  return std::nullopt;
}

uint32_t Polynomial::total_degree() const {
  uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

const Polynomial::Term& Polynomial::leading_term(
    const MonomialOrder& ord) const {
  if (terms_.empty())
    throw std::invalid_argument("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (ord.compare(t.first, best->first) > 0) best = &t;
  return *best;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (ring_ && other.ring_ && *ring_ == *other.ring_) return;
  throw std::invalid_argument("polynomial: mixed rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial out(ring_ ? ring_ : other.ring_);
  const auto& a = terms_;
  const auto& b = other.terms_;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = canonical_order().compare(a[i].first, b[j].first);
    if (cmp > 0) {
      out.terms_.push_back(a[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(b[j++]);
    } else {
      Rational c = a[i].second + b[j].second;
      if (c != 0) out.terms_.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.terms_.push_back(a[i++]);
  while (j < b.size()) out.terms_.push_back(b[j++]);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  Ring ring = ring_ ? ring_ : other.ring_;
  std::map<Monomial, Rational, decltype([](const Monomial& a,
                                           const Monomial& b) {
    return canonical_order().compare(a, b) < 0;
  })> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) acc[mono_mul(ma, mb)] += ca * cb;
  Polynomial out(ring);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second != 0) out.terms_.emplace_back(it->first, it->second);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = *this + other;
  return *this;
}
Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = *this - other;
  return *this;
}
Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& [m, coef] : p.terms_) coef *= c;
  return p;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& [mm, cc] : terms_)
    p.terms_.emplace_back(mono_mul(mm, m), cc * c);
  // multiplying every monomial by a fixed monomial preserves grevlex order
  return p;
}

Polynomial Polynomial::pow(uint32_t n) const {
  Polynomial acc = Polynomial::constant(ring_, Rational(1));
  for (uint32_t i = 0; i < n; ++i) acc = acc * *this;
  return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ring_ || !other.ring_) return terms_.empty() && other.terms_.empty();
  if (!(ring_ == other.ring_ || *ring_ == *other.ring_)) return false;
  return terms_ == other.terms_;
}

Polynomial Polynomial::substitute(
    const std::map<int, Polynomial>& assignment) const {
  for (const auto& [v, p] : assignment) {
    if (v < 0 || static_cast<std::size_t>(v) >= ring_->size())
      throw std::invalid_argument("substitute: variable index out of range");
    check_same_ring(p);
  }
  Polynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = Monomial::one(ring_->size());
    Polynomial factor = Polynomial::constant(ring_, c);
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      auto it = assignment.find(static_cast<int>(i));
      if (it == assignment.end()) {
        rest.e[i] = m.e[i];
      } else {
        factor *= it->second.pow(m.e[i]);
      }
    }
    out += factor.times_term(rest, Rational(1));
  }
  return out;
}

Rational Polynomial::eval(const std::vector<Rational>& values) const {
  if (values.size() != ring_->size())
    throw std::invalid_argument("eval: value count != ring size");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.e.size(); ++i)
      for (uint32_t k = 0; k < m.e[i]; ++k) t *= values[i];
    sum += t;
  }
  return sum;
}

std::vector<int> Polynomial::support() const {
  std::vector<bool> seen(ring_ ? ring_->size() : 0, false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0) seen[i] = true;
  std::vector<int> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool Polynomial::uses_any(const std::vector<bool>& vars) const {
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] > 0 && vars[i]) return true;
  return false;
}

std::string Polynomial::to_string() const {
  return to_string(canonical_order());
}

std::string Polynomial::to_string(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<Term> sorted = terms_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Term& a, const Term& b) {
                     return ord.compare(a.first, b.first) > 0;
                   });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (m.is_one()) {
      os << rat_to_string(mag);
      continue;
    }
    bool printed = false;
    if (mag != 1) {
      os << rat_to_string(mag);
      printed = true;
    }
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->name(i);
      if (m.e[i] > 1) os << "^" << m.e[i];
      printed = true;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& text;
  const Ring& ring;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Polynomial parse_expression() {
    Polynomial acc = Polynomial::zero(ring);
    bool want_term = true;
    bool any = false;
    int sign = 1;
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] == ')') break;
      char c = text[pos];
      if (c == '+' || c == '-') {
        if (want_term) {
          // unary sign (possibly repeated)
          if (c == '-') sign = -sign;
        } else {
          sign = (c == '-') ? -1 : 1;
          want_term = true;
        }
        ++pos;
        continue;
      }
      if (!want_term) fail("expected '+' or '-' between terms");
      Polynomial term = parse_product();
      acc += sign < 0 ? -term : term;
      sign = 1;
      want_term = false;
      any = true;
    }
    if (want_term && any) fail("dangling operator");
    if (!any) fail("expected term");
    return acc;
  }

  Polynomial parse_product() {
    Polynomial acc = parse_power();
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        acc *= parse_power();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      std::size_t at = pos;
      uint64_t expo = parse_uint();
      if (expo > 64) throw ParseError("exponent too large", at);
      return base.pow(static_cast<uint32_t>(expo));
    }
    return base;
  }

  uint64_t parse_uint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
      if (v > (uint64_t{1} << 62)) fail("integer literal too large");
      ++pos;
    }
    return v;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Polynomial inner = parse_expression();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num = parse_bigint();
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip_ws();
        std::size_t at = pos;
        BigInt den = parse_bigint();
        if (den == 0) throw ParseError("zero denominator", at);
        return Polynomial::constant(ring, ratio(num, den));
      }
      return Polynomial::constant(ring, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      int idx = ring->find(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  BigInt parse_bigint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return BigInt(text.substr(start, pos - start));
  }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text, const Ring& ring) {
  Parser p{text, ring};
  p.skip_ws();
  if (p.pos >= text.size()) throw ParseError("empty input", 0);
  Polynomial out = p.parse_expression();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input", p.pos);
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  return p.scaled(c);
}

}  // namespace pezzo

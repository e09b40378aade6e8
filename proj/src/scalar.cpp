#include "subres/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "subres/errors.hpp"

namespace subres {

// ---------------------------------------------------------------------------
// ParamMonomial

ParamMonomial ParamMonomial::variable(std::string name, unsigned exponent) {
  ParamMonomial m;
  if (exponent > 0) m.powers_.emplace_back(std::move(name), exponent);
  return m;
}

unsigned ParamMonomial::exponent(std::string_view name) const {
  for (const auto& [var, e] : powers_)
    if (var == name) return e;
  return 0;
}

unsigned ParamMonomial::total_degree() const {
  unsigned total = 0;
  for (const auto& p : powers_) total += p.second;
  return total;
}

ParamMonomial ParamMonomial::operator*(const ParamMonomial& other) const {
  ParamMonomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      out.powers_.push_back(*b++);
    } else {
      out.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool ParamMonomial::divide(const ParamMonomial& other, ParamMonomial& out) const {
  out.powers_.clear();
  auto a = powers_.begin();
  auto b = other.powers_.begin();
  while (a != powers_.end() || b != other.powers_.end()) {
    if (b == other.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      out.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      return false;
    } else {
      if (a->second < b->second) return false;
      if (a->second > b->second) out.powers_.emplace_back(a->first, a->second - b->second);
      ++a;
      ++b;
    }
  }
  return true;
}

ParamMonomial ParamMonomial::without(std::string_view name) const {
  ParamMonomial out;
  for (const auto& p : powers_)
    if (p.first != name) out.powers_.push_back(p);
  return out;
}

int compare(const ParamMonomial& a, const ParamMonomial& b) {
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() && j != b.powers_.end()) {
    if (i->first != j->first) return i->first < j->first ? 1 : -1;
    if (i->second != j->second) return i->second > j->second ? 1 : -1;
    ++i;
    ++j;
  }
  if (i != a.powers_.end()) return 1;
  if (j != b.powers_.end()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long value) {
  if (value != 0) terms_.push_back({ParamMonomial{}, Rational(value)});
}

Scalar::Scalar(const Rational& value) {
  if (value != 0) {
    Rational q = value;
    q.canonicalize();
    terms_.push_back({ParamMonomial{}, q});
  }
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  if (q != 0) terms_.push_back({ParamMonomial{}, q});
}

Scalar Scalar::parameter(const std::string& name) {
  Scalar s;
  s.terms_.push_back({ParamMonomial::variable(name), Rational(1)});
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1;
}

bool Scalar::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

Rational Scalar::rational() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw DomainError("scalar '" + to_string() + "' is not a rational number");
  return terms_[0].coeff;
}

std::set<std::string> Scalar::parameters() const {
  std::set<std::string> out;
  for (const auto& t : terms_)
    for (const auto& p : t.monomial.powers()) out.insert(p.first);
  return out;
}

Scalar Scalar::substitute(const Substitution& values) const {
  Scalar out;
  for (const auto& t : terms_) {
    Scalar term(t.coeff);
    for (const auto& [name, e] : t.monomial.powers()) {
      auto it = values.find(name);
      if (it == values.end()) throw DomainError("substitution does not cover parameter '" + name + "'");
      term *= it->second.pow(e);
    }
    out += term;
  }
  return out;
}

std::vector<Scalar> Scalar::coefficients_in(const std::string& name) const {
  std::vector<Scalar> out(degree_in(name) + 1);
  for (const auto& t : terms_) {
    Scalar piece;
    piece.terms_.push_back({t.monomial.without(name), t.coeff});
    out[t.monomial.exponent(name)] += piece;
  }
  if (terms_.empty()) out.clear();
  return out;
}

unsigned Scalar::degree_in(std::string_view name) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(name));
  return d;
}

void Scalar::add_scaled(const Scalar& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int c = 0;
    if (a == terms_.end()) c = -1;
    else if (b == other.terms_.end()) c = 1;
    else c = compare(a->monomial, b->monomial);
    if (c > 0) {
      merged.push_back(std::move(*a++));
    } else if (c < 0) {
      merged.push_back({b->monomial, sign > 0 ? Rational(b->coeff) : Rational(-b->coeff)});
      ++b;
    } else {
      Rational sum = sign > 0 ? Rational(a->coeff + b->coeff) : Rational(a->coeff - b->coeff);
      if (sum != 0) merged.push_back({std::move(a->monomial), sum});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Scalar& Scalar::operator+=(const Scalar& other) {
  add_scaled(other, 1);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  add_scaled(other, -1);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.is_rational() && b.is_rational()) {
    out.terms_.push_back({ParamMonomial{}, a.terms_[0].coeff * b.terms_[0].coeff});
    return out;
  }
  if (a.is_rational() || b.is_rational()) {
    const Scalar& poly = a.is_rational() ? b : a;
    const Rational& c = a.is_rational() ? a.terms_[0].coeff : b.terms_[0].coeff;
    out.terms_ = poly.terms_;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
  }
  std::map<ParamMonomial, Rational, MonomialGreater> acc;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc[x.monomial * y.monomial] += x.coeff * y.coeff;
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.push_back({m, c});
  return out;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.terms_.empty()) throw DomainError("division by zero");
  if (other.is_rational()) {
    for (auto& t : terms_) t.coeff /= other.terms_[0].coeff;
    return *this;
  }
  // Multivariate division by the leading term; exact or bust.
  const Term& lead = other.terms_.front();
  Scalar remainder = *this;
  Scalar quotient;
  while (!remainder.is_zero()) {
    const Term& top = remainder.terms_.front();
    ParamMonomial m;
    if (!top.monomial.divide(lead.monomial, m))
      throw InexactDivision("'" + to_string() + "' is not divisible by '" + other.to_string() + "'");
    Scalar step;
    step.terms_.push_back({m, top.coeff / lead.coeff});
    quotient += step;
    remainder -= step * other;
  }
  *this = std::move(quotient);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
  return true;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result(1L);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    std::string mono;
    for (const auto& [name, e] : t.monomial.powers()) {
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += subres::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += subres::to_string(c) + "*" + mono;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

// ---------------------------------------------------------------------------
// Parser: expr := term (('+'|'-') term)* ; term := power (('*'|'/') power)* ;
// power := unary ('^' integer)? ; unary := '-' unary | atom

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Scalar parse_all() {
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar value = term();
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  Scalar term() {
    Scalar value = power();
    for (;;) {
      if (accept('*')) {
        value *= power();
      } else if (accept('/')) {
        Scalar divisor = power();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Scalar power() {
    Scalar base = unary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  Scalar atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        fail("floating-point literals are not accepted");
      return Scalar(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return Scalar::parameter(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ExpressionParser(text).parse_all(); }

}  // namespace subres

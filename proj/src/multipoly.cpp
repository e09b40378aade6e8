#include "subres/multipoly.hpp"

#include <numeric>

#include "subres/errors.hpp"

namespace subres {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool canonical_before(const Exponents& a, const Exponents& b) {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return a > b;  // lexicographic, larger x1 exponent first
}

std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned j) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (j == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  auto recurse = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == n) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, j);
  return out;
}

MultiPoly::MultiPoly(std::size_t nvars, Terms terms) : nvars_(nvars) {
  for (auto& [e, c] : terms) add_term(e, c);
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionError("variable index out of range");
  Exponents e(nvars, 0);
  e[i] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Scalar& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::parse(std::string_view text, std::size_t nvars) {
  const Scalar flat = Scalar::parse(text);
  MultiPoly p(nvars);
  for (const auto& term : flat.terms()) {
    Exponents e(nvars, 0);
    ParamMonomial rest;
    for (const auto& [name, power] : term.monomial.powers()) {
      std::size_t index = 0;
      bool is_var = name.size() > 1 && name[0] == 'x' && name.find_first_not_of("0123456789", 1) == std::string::npos;
      if (is_var) {
        index = std::stoul(name.substr(1));
        if (index == 0 || index > nvars) throw ParseError("variable " + name + " outside x1..x" + std::to_string(nvars));
        e[index - 1] = power;
      } else {
        rest = rest * ParamMonomial::variable(name, power);
      }
    }
    Scalar coeff = Scalar(term.coeff);
    for (const auto& [name, power] : rest.powers()) coeff *= Scalar::parameter(name).pow(power);
    p.add_term(e, coeff);
  }
  return p;
}

void MultiPoly::check_arity(const Exponents& e) const {
  if (e.size() != nvars_)
    throw DimensionError("exponent vector of length " + std::to_string(e.size()) + " in a polynomial of " +
                         std::to_string(nvars_) + " variables");
}

void MultiPoly::add_term(const Exponents& e, const Scalar& c) {
  check_arity(e);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<unsigned> MultiPoly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, subres::total_degree(t.first));
  return d;
}

const Scalar& MultiPoly::coeff(const Exponents& e) const {
  static const Scalar zero;
  auto it = terms_.find(e);
  return it == terms_.end() ? zero : it->second;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = subres::total_degree(terms_.begin()->first);
  for (const auto& t : terms_)
    if (subres::total_degree(t.first) != d) return false;
  return true;
}

MultiPoly MultiPoly::homogeneous_part(unsigned degree) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_)
    if (subres::total_degree(e) == degree) out.terms_.emplace(e, c);
  return out;
}

MultiPoly MultiPoly::times_monomial(const Exponents& e) const {
  check_arity(e);
  MultiPoly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Exponents sum = m;
    for (std::size_t i = 0; i < nvars_; ++i) sum[i] += e[i];
    out.terms_.emplace(std::move(sum), c);
  }
  return out;
}

Scalar MultiPoly::operator()(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw DimensionError("point dimension does not match polynomial arity");
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) term *= point[i].pow(e[i]);
    total += term;
  }
  return total;
}

MultiPoly MultiPoly::substitute(const Scalar::Substitution& values) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c.substitute(values));
  return out;
}

MultiPoly MultiPoly::translated(const std::vector<Scalar>& xi) const {
  if (xi.size() != nvars_) throw DimensionError("point dimension does not match polynomial arity");
  MultiPoly out(nvars_);
  for (const auto& [gamma, c] : terms_) {
    // Expand ∏ ((y_i + ξ_i)^{γ_i}) and accumulate.
    Exponents alpha(nvars_, 0);
    auto recurse = [&](auto&& self, std::size_t i, Scalar weight) -> void {
      if (i == nvars_) {
        out.add_term(alpha, weight);
        return;
      }
      for (unsigned a = 0; a <= gamma[i]; ++a) {
        alpha[i] = a;
        Scalar w = weight * Scalar(binomial(gamma[i], a));
        if (gamma[i] > a) w *= xi[i].pow(gamma[i] - a);
        if (!w.is_zero()) self(self, i + 1, std::move(w));
      }
      alpha[i] = 0;
    };
    recurse(recurse, 0, c);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw DimensionError("adding polynomials with different arity");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) throw DimensionError("subtracting polynomials with different arity");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw DimensionError("multiplying polynomials with different arity");
  MultiPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly operator*(MultiPoly a, const Scalar& c) {
  MultiPoly out(a.nvars_);
  for (const auto& [e, v] : a.terms_) out.add_term(e, v * c);
  return out;
}

std::string MultiPoly::to_string() const {
  Scalar flat;
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) term *= Scalar::parameter("x" + std::to_string(i + 1)).pow(e[i]);
    flat += term;
  }
  return flat.to_string();
}

}  // namespace subres

#include "linkhom/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

std::string exponent_text(int doubled) {
  if (doubled % 2 == 0) {
    int e = doubled / 2;
    if (e == 1) return "";
    if (e < 0) return "^(" + std::to_string(e) + ")";
    return "^" + std::to_string(e);
  }
  return "^(" + std::to_string(doubled) + "/2)";
}

}  // namespace

LaurentPoly::LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty() || vars_.size() > 2)
    throw DomainError("LaurentPoly supports one or two variables");
  if (vars_.size() == 2 && vars_[0] == vars_[1])
    throw DomainError("duplicate variable name " + vars_[0]);
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars, const Integer& constant)
    : LaurentPoly(std::move(vars)) {
  if (constant != 0) terms_[Exp{0, 0}] = constant;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exp doubled, const Integer& c) {
  LaurentPoly p(std::move(vars));
  if (p.arity() == 1 && doubled[1] != 0)
    throw DomainError("exponent for a missing second variable");
  if (c != 0) p.terms_[doubled] = c;
  return p;
}

LaurentPoly LaurentPoly::term(std::vector<std::string> vars, int e0, int e1, const Integer& c) {
  return monomial(std::move(vars), ex(e0, e1), c);
}

LaurentPoly LaurentPoly::var(std::vector<std::string> vars, const std::string& name) {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw DomainError("unknown variable " + name);
  Exp e{0, 0};
  e[static_cast<std::size_t>(it - vars.begin())] = 2;
  return monomial(std::move(vars), e, 1);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exp{0, 0});
}

Integer LaurentPoly::coefficient(Exp doubled) const {
  auto it = terms_.find(doubled);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::add_term(Exp doubled, const Integer& c) {
  if (c == 0) return;
  if (arity() == 1 && doubled[1] != 0)
    throw DomainError("exponent for a missing second variable");
  auto [it, inserted] = terms_.try_emplace(doubled, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::promote_to(const std::vector<std::string>& target) {
  if (target == vars_) return;
  *this = with_vars(target);
}

LaurentPoly LaurentPoly::with_vars(const std::vector<std::string>& target) const {
  LaurentPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exp ne{0, 0};
    for (std::size_t k = 0; k < arity(); ++k) {
      if (e[k] == 0) continue;
      auto it = std::find(target.begin(), target.end(), vars_[k]);
      if (it == target.end())
        throw DomainError("variable " + vars_[k] + " missing from target variables");
      ne[static_cast<std::size_t>(it - target.begin())] = e[k];
    }
    out.add_term(ne, c);
  }
  return out;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const { merged_vars(*this, o); }

std::vector<std::string> merged_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() == b.vars()) return a.vars();
  std::vector<std::string> u = a.vars();
  for (const auto& v : b.vars())
    if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
  if (u.size() <= 2) return u;
  if (b.is_constant()) return a.vars();
  if (a.is_constant()) return b.vars();
  throw DomainError("variable mismatch between polynomials");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_compatible(o);
  auto target = merged_vars(*this, o);
  promote_to(target);
  const LaurentPoly& rhs = (o.vars_ == target) ? o : o.with_vars(target);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_compatible(b);
  auto target = merged_vars(a, b);
  LaurentPoly x = a.with_vars(target);
  LaurentPoly y = b.with_vars(target);
  LaurentPoly out(target);
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) out.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  if (is_zero() && o.is_zero()) return true;
  try {
    auto target = merged_vars(*this, o);
    return with_vars(target).terms_ == o.with_vars(target).terms_;
  } catch (const DomainError&) {
    return false;
  }
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(vars_, 1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(Exp doubled) const {
  if (arity() == 1 && doubled[1] != 0) throw DomainError("shift in a missing variable");
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exp{e[0] + doubled[0], e[1] + doubled[1]}, c);
  return out;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw DomainError("only monomials are invertible");
  const auto& [e, c] = *terms_.begin();
  if (c != 1 && c != -1) throw DomainError("monomial coefficient is not a unit");
  return monomial(vars_, {-e[0], -e[1]}, c);
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exp{-e[0], -e[1]}, c);
  return out;
}

LaurentPoly LaurentPoly::div_exact(const Integer& c) const {
  if (c == 0) throw DomainError("division by zero");
  LaurentPoly out(vars_);
  for (const auto& [e, v] : terms_) {
    if (v % c != 0) throw DomainError("inexact integer division");
    out.terms_.emplace(e, v / c);
  }
  return out;
}

int LaurentPoly::min_exp(std::size_t k) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) m = std::min(m, e[k]);
  return m;
}

int LaurentPoly::max_exp(std::size_t k) const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first[k];
  for (const auto& [e, c] : terms_) m = std::max(m, e[k]);
  return m;
}

bool LaurentPoly::integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    return t.first[0] % 2 == 0 && t.first[1] % 2 == 0;
  });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t k = 0; k < arity(); ++k)
      if (e[k] != 0) factors.push_back(vars_[k] + exponent_text(e[k]));
    if (factors.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

namespace {

nlohmann::json integer_json(const Integer& z) {
  if (auto v = as_int64(z)) return *v;
  return z.str();
}

Integer json_integer(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

}  // namespace

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    nlohmann::json t;
    for (std::size_t k = 0; k < arity(); ++k) t[vars_[k]] = it->first[k];
    t["c"] = integer_json(it->second);
    terms.push_back(std::move(t));
  }
  return {{"vars", vars_}, {"doubled", true}, {"terms", std::move(terms)}};
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  try {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    bool doubled = j.value("doubled", true);
    LaurentPoly p(vars);
    for (const auto& t : j.at("terms")) {
      Exp e{0, 0};
      for (std::size_t k = 0; k < vars.size(); ++k) {
        int v = t.value(vars[k], 0);
        e[k] = doubled ? v : 2 * v;
      }
      p.add_term(e, json_integer(t.at("c")));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed polynomial JSON: ") + e.what());
  }
}

LaurentPoly quantum_integer(int k, const std::string& var) {
  if (k < 0) throw InvalidInput("quantum integer index must be nonnegative");
  LaurentPoly p({var});
  for (int e = k - 1; e >= 1 - k; e -= 2) p.add_term(ex(e), 1);
  return p;
}

LaurentPoly geometric_sum(int n, const std::string& var, int step) {
  LaurentPoly p({var});
  for (int i = 0; i <= n; ++i) p.add_term(ex(i * step), 1);
  return p;
}

}  // namespace linkhom

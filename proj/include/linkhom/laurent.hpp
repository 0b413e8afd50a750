#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "linkhom/integer.hpp"

namespace linkhom {

/// Exponent vector for up to two variables. Entries count half-steps, so the
/// exponent 3/2 is stored as 3 and q^2 is stored as 4.
using Exp = std::array<int, 2>;

/// Laurent polynomial in one or two named variables with exact integer
/// coefficients and half-integer exponents.
class LaurentPoly {
 public:
  using Terms = std::map<Exp, Integer>;

  LaurentPoly() : vars_{"q"} {}
  explicit LaurentPoly(std::vector<std::string> vars);
  LaurentPoly(std::vector<std::string> vars, const Integer& constant);

  /// c * x0^(e0/2) * x1^(e1/2), exponents given in half-steps.
  static LaurentPoly monomial(
      std::vector<std::string> vars, Exp doubled, const Integer& c = 1);
  /// Integral-exponent convenience: c * x0^e0 * x1^e1.
  static LaurentPoly term(
      std::vector<std::string> vars, int e0, int e1 = 0, const Integer& c = 1);
  /// The variable named `name` (must be one of vars) raised to the power 1.
  static LaurentPoly var(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient at a doubled exponent tuple, zero if absent.
  Integer coefficient(Exp doubled) const;
  /// Coefficient of x0^e0 x1^e1 for integral exponents.
  Integer coeff(int e0, int e1 = 0) const { return coefficient({2 * e0, 2 * e1}); }

  void add_term(Exp doubled, const Integer& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly pow(unsigned k) const;
  /// Multiplies by the monomial with the given doubled exponents.
  LaurentPoly shifted(Exp doubled) const;
  /// Inverse of a monomial with unit coefficient; DomainError otherwise.
  LaurentPoly monomial_inverse() const;
  /// Replaces every variable by its inverse.
  LaurentPoly inverted() const;
  /// Exact division by an integer; DomainError if not exact.
  LaurentPoly div_exact(const Integer& c) const;

  /// Same polynomial viewed in another variable list. Every variable that
  /// carries a nonzero exponent must be present in `target`.
  LaurentPoly with_vars(const std::vector<std::string>& target) const;

  /// Minimum and maximum doubled exponent of variable k over all terms.
  int min_exp(std::size_t k) const;
  int max_exp(std::size_t k) const;
  /// True when every stored exponent is even (no half steps).
  bool integral() const;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void check_compatible(const LaurentPoly& o) const;
  void promote_to(const std::vector<std::string>& vars);

  std::vector<std::string> vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Variable list able to hold both operands (union of names, at most two).
/// DomainError when the union needs three or more variables.
std::vector<std::string> merged_vars(const LaurentPoly& a, const LaurentPoly& b);

/// Quantum integer [k] = q^(k-1) + q^(k-3) + ... + q^(1-k); [0] = 0.
LaurentPoly quantum_integer(int k, const std::string& var = "q");

/// 1 + x + ... + x^n in the variable `var` (zero when n < 0).
LaurentPoly geometric_sum(int n, const std::string& var = "q", int step = 1);

/// Doubled-exponent helper: the tuple for integral exponents (e0, e1).
constexpr Exp ex(int e0, int e1 = 0) { return {2 * e0, 2 * e1}; }

}  // namespace linkhom

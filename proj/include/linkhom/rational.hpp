#pragma once

#include <string>
#include <vector>

#include "linkhom/laurent.hpp"

namespace linkhom {

/// Quotient of two Laurent polynomials kept in a canonical reduced form:
/// the denominator is a polynomial with no monomial factor, numerator and
/// denominator share no common factor (integer content included), and the
/// lexicographically greatest term of the denominator is positive. Equal
/// values therefore have identical representations.
class RationalFn {
 public:
  RationalFn() : num_({"q"}), den_({"q"}, 1) {}
  explicit RationalFn(std::vector<std::string> vars);
  RationalFn(const LaurentPoly& num);  // NOLINT: implicit promotion is intended
  RationalFn(const LaurentPoly& num, const LaurentPoly& den);

  const std::vector<std::string>& vars() const { return num_.vars(); }
  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant() && den_.coefficient({0, 0}) == 1; }
  /// The value as a Laurent polynomial; DomainError when it is not one.
  LaurentPoly as_laurent() const;

  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  RationalFn operator-() const;

  bool operator==(const RationalFn& o) const;
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  RationalFn inverse() const;
  RationalFn pow(int k) const;

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFn& f);

/// Greatest common divisor of two Laurent polynomials in the same variables,
/// computed on the monomial-free polynomial parts. The result has no
/// monomial factor and a positive lexicographically greatest term.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b; DomainError when b does not divide a.
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Simultaneous substitution of every variable of f. images[k] is the value
/// of f.vars()[k], expressed in `target_vars`. Half-integer exponents are
/// allowed only for variables whose image is a monomial with coefficient 1.
RationalFn compose(const RationalFn& f, const std::vector<std::string>& target_vars,
                   const std::vector<RationalFn>& images);

/// Replaces the variable `which` by `value`; all other variables map to
/// themselves. The result lives in the remaining variables plus those of
/// `value`. DomainError if a denominator vanishes.
RationalFn substitute(const RationalFn& f, const std::string& which, const RationalFn& value);

}  // namespace linkhom

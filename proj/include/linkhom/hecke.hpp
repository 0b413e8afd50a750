#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/laurent.hpp"
#include "linkhom/rational.hpp"

namespace linkhom {

/// Permutation in one-line notation on {0, ..., n-1}.
using Perm = std::vector<std::uint8_t>;

/// Element of the Hecke algebra H_n with basis T_w, w in S_n, and relation
/// T_i^2 = q^2 + (1 - q^2) T_i. Coefficients are Laurent polynomials in q.
class HeckeElement {
 public:
  explicit HeckeElement(int strands = 1);

  static HeckeElement identity(int strands);
  /// T_i for letter i > 0, T_i^{-1} = q^-2 T_i + 1 - q^-2 for letter -i.
  static HeckeElement generator(int strands, int letter);
  static HeckeElement basis(const Perm& w, const LaurentPoly& coef);

  int strands() const { return strands_; }
  const std::map<Perm, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const Perm& w) const;

  /// Right multiplication by T_i (1 <= i < strands).
  HeckeElement times_generator(int i) const;
  /// Right multiplication by the image of a braid letter.
  HeckeElement times_letter(int letter) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a);
  bool operator==(const HeckeElement& o) const { return strands_ == o.strands_ && terms_ == o.terms_; }

  /// The same element in H_m for m >= strands (extra strands fixed).
  HeckeElement embedded(int m) const;

  std::string to_string() const;

 private:
  void add(const Perm& w, const LaurentPoly& c);

  int strands_;
  std::map<Perm, LaurentPoly> terms_;
};

/// A reduced word i_1 ... i_k (1-based) with w = s_{i_1} ... s_{i_k}.
std::vector<int> reduced_word(const Perm& w);
int perm_length(const Perm& w);

/// Image of the braid word in H_p.
HeckeElement hecke_normal_form(const BraidWord& b);

/// A word over sigma_i^{+-1} and the wide edges E_i.
struct WideLetter {
  enum Kind { Positive, Negative, Wide } kind = Positive;
  int index = 1;
};
struct WideWord {
  int strands = 1;
  std::vector<WideLetter> letters;
};

/// Parses "<p>: 1 -2 E1 ..." where "E<i>" is the wide edge at position i.
WideWord parse_wide_word(const std::string& text);

/// Image in H_p with E_i = T_i + q^2.
HeckeElement wide_edge_expand(const WideWord& w);

/// The trace as a polynomial in d = (1 + t^-1 q)/(1 - q^2): entry k is the
/// coefficient of d^k.
using TracePoly = std::vector<LaurentPoly>;

/// Markov trace with tr(1 in H_1) = 1, tr(x T_n) = tr(x) and
/// tr(x in H_n as element of H_{n+1}) = d tr(x), as a polynomial in d.
TracePoly markov_trace_poly(const HeckeElement& h);
/// The same value as a rational function in (q, t).
RationalFn markov_trace(const HeckeElement& h);
RationalFn trace_to_rational(const TracePoly& p);

}  // namespace linkhom

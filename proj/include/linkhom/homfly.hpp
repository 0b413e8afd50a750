#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "linkhom/braid.hpp"
#include "linkhom/hecke.hpp"
#include "linkhom/rational.hpp"

namespace linkhom {

/// F and G of a braid closure.
///
/// F is a rational function in (q, t). G = sqrt(alpha)^omega F with
/// alpha = -t^-1 q^-1 is kept in two forms:
///   g_aq: the variable a = q sqrt(alpha), so G is rational in (a, q) and
///         t = -q a^-2;
///   g_qt: sqrt(alpha)^omega = i^omega t^(-omega/2) q^(-omega/2); the real
///         factor is stored here and `g_qt_imaginary` records a leftover i
///         when omega is odd.
struct HomflyValue {
  RationalFn f;
  int omega = 0;  ///< n_+ - n_- - strands + 1
  RationalFn g_aq;
  RationalFn g_qt;
  bool g_qt_imaginary = false;

  nlohmann::json to_json() const;
};

/// F(closure of b) = Markov trace of the Hecke image.
RationalFn homfly_F(const BraidWord& b);
/// F together with both forms of G.
HomflyValue homfly_G(const BraidWord& b);

/// G in the (a, q) form from F and omega.
RationalFn g_from_f(const RationalFn& f, int omega);

/// G_n: the (a, q) form at a = q^n. ComputationDefect if the result is not a
/// Laurent polynomial or a denominator vanishes.
LaurentPoly specialize_Gn(const HomflyValue& g, int n);

/// G(mirror) from G in the (a, q) form: a -> a^-1, q -> q^-1.
RationalFn mirror_g(const RationalFn& g_aq);

/// a^-1 G(L+) - a G(L-) - (q^-1 - q) G(L0); zero for a skein triple.
RationalFn g_skein_defect(const RationalFn& plus, const RationalFn& minus, const RationalFn& zero);

/// True iff the denominator of a reduced F-value divides a power of 1 - q^2.
bool denominator_is_power_of_one_minus_q2(const RationalFn& f);

/// Fixed-model checks of the bracket solutions with q beta c = q^{+-n}.
struct FixedBracketModel {
  int n = 0;
  int sign = 1;            ///< +1 for q beta c = q^n, -1 for q^-n
  LaurentPoly U, B, b, d;  ///< a = c = 1
  bool d_is_q2b = false;   ///< d = q^2 b
  bool loop_identity = false;   ///< U + bB = q^{+-2n-2}(U + b q^2 B)
  bool bracket_identity = false;///< the second defining identity of the model
  bool qbc_squared = false;     ///< q^2 (U + bB)/(U + dB) = q^{+-2n}
  bool ok() const { return d_is_q2b && loop_identity && bracket_identity && qbc_squared; }
  nlohmann::json to_json() const;
};

FixedBracketModel fixed_bracket_model(int n, int sign);

}  // namespace linkhom

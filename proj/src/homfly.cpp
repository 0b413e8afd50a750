#include "linkhom/homfly.hpp"

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

const std::vector<std::string> kAQ{"a", "q"};
const std::vector<std::string> kQT{"q", "t"};
const std::vector<std::string> kQ{"q"};

RationalFn aq(int ea, int eq, const Integer& c = 1) { return LaurentPoly::term(kAQ, ea, eq, c); }

// Images of f's variables, looked up by name.
std::vector<RationalFn> images_for(const RationalFn& f, const std::string& context,
                                   const std::map<std::string, RationalFn>& by_name) {
  std::vector<RationalFn> out;
  for (const auto& v : f.vars()) {
    auto it = by_name.find(v);
    if (it == by_name.end()) throw InvalidInput(context + ": unexpected variable '" + v + "'");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

RationalFn homfly_F(const BraidWord& b) {
  return markov_trace(hecke_normal_form(b));
}

RationalFn g_from_f(const RationalFn& f, int omega) {
  auto img = images_for(f, "F-value", {{"q", aq(0, 1)}, {"t", aq(-2, 1, -1)}});
  return compose(f, kAQ, img) * aq(omega, -omega);
}

HomflyValue homfly_G(const BraidWord& b) {
  HomflyValue v;
  v.f = homfly_F(b);
  v.omega = b.writhe() - b.strands + 1;
  v.g_aq = g_from_f(v.f, v.omega);
  // i^omega = (-1)^floor(omega/2) * (i if omega is odd)
  int w = v.omega;
  int half = w >= 0 ? w / 2 : -((-w + 1) / 2);
  v.g_qt_imaginary = (w % 2) != 0;
  Integer sign = (half % 2 == 0) ? 1 : -1;
  v.g_qt = v.f * RationalFn(LaurentPoly::monomial(kQT, {-w, -w}, sign));
  return v;
}

LaurentPoly specialize_Gn(const HomflyValue& g, int n) {
  if (n < 1) throw InvalidInput("specialization index must be positive");
  RationalFn r;
  try {
    auto img = images_for(g.g_aq, "G-value",
                          {{"a", LaurentPoly::term(kQ, n)}, {"q", LaurentPoly::term(kQ, 1)}});
    r = compose(g.g_aq, kQ, img);
  } catch (const DomainError& e) {
    throw ComputationDefect(std::string("G_n specialization hit a vanishing denominator: ") + e.what());
  }
  if (!r.is_laurent())
    throw ComputationDefect("G_" + std::to_string(n) + " is not a Laurent polynomial: " + r.to_string());
  return r.as_laurent().with_vars(kQ);
}

RationalFn mirror_g(const RationalFn& g_aq) {
  auto img = images_for(g_aq, "G-value", {{"a", aq(-1, 0)}, {"q", aq(0, -1)}});
  return compose(g_aq, kAQ, img);
}

RationalFn g_skein_defect(const RationalFn& plus, const RationalFn& minus, const RationalFn& zero) {
  return aq(-1, 0) * plus - aq(1, 0) * minus - (aq(0, -1) - aq(0, 1)) * zero;
}

bool denominator_is_power_of_one_minus_q2(const RationalFn& f) {
  LaurentPoly den = f.denominator();
  const auto& vars = den.vars();
  std::size_t qi = 0;
  while (qi < vars.size() && vars[qi] != "q") ++qi;
  if (qi == vars.size()) return den.is_monomial();
  Exp two{0, 0};
  two[qi] = 4;
  LaurentPoly factor = LaurentPoly(vars, 1) - LaurentPoly::monomial(vars, two);
  while (!den.is_monomial()) {
    try {
      den = poly_div_exact(den, factor);
    } catch (const DomainError&) {
      return false;
    }
  }
  return true;
}

nlohmann::json HomflyValue::to_json() const {
  return {{"F", f.to_json()},
          {"omega", omega},
          {"G_aq", g_aq.to_json()},
          {"G_qt", g_qt.to_json()},
          {"G_qt_times_i", g_qt_imaginary}};
}

FixedBracketModel fixed_bracket_model(int n, int sign) {
  if (n < 1) throw InvalidInput("fixed bracket models need n >= 1");
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  auto q = [](int e, const Integer& c = 1) { return LaurentPoly::term(kQ, e, 0, c); };
  FixedBracketModel m;
  m.n = n;
  m.sign = sign;
  LaurentPoly second_lhs(kQ), second_rhs(kQ);
  if (sign == 1) {
    m.U = quantum_integer(n);
    m.B = quantum_integer(n - 1);
    m.b = q(-1, -1);
    m.d = q(1, -1);
    second_lhs = q(-1, -1) * quantum_integer(n - 1) * m.U;
    second_rhs = quantum_integer(n) * m.b * m.B;
  } else {
    m.U = geometric_sum(n - 1, "q", 2);
    m.B = geometric_sum(n, "q", 2);
    m.b = q(-2, -1);
    m.d = q(0, -1);
    second_lhs = m.U * geometric_sum(n, "q", 2);
    second_rhs = -(m.b * q(2) * m.B * geometric_sum(n - 1, "q", 2));
  }
  m.d_is_q2b = m.d == q(2) * m.b;
  int loop_shift = sign == 1 ? 2 * n - 2 : -2 * n - 2;
  m.loop_identity = m.U + m.b * m.B == q(loop_shift) * (m.U + m.b * q(2) * m.B);
  m.bracket_identity = second_lhs == second_rhs;
  RationalFn ratio = RationalFn(q(2) * (m.U + m.b * m.B)) / RationalFn(m.U + m.d * m.B);
  m.qbc_squared = ratio == RationalFn(q(2 * sign * n));
  return m;
}

nlohmann::json FixedBracketModel::to_json() const {
  return {{"n", n},
          {"sign", sign},
          {"U", U.to_string()},
          {"B", B.to_string()},
          {"b", b.to_string()},
          {"d", d.to_string()},
          {"d_is_q2b", d_is_q2b},
          {"loop_identity", loop_identity},
          {"bracket_identity", bracket_identity},
          {"qbc_squared", qbc_squared},
          {"ok", ok()}};
}

}  // namespace linkhom

#include "linkhom/rational.hpp"

#include <algorithm>
#include <ostream>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

// Dense polynomials used for gcd work. UPoly is Z[x0] (index = exponent),
// BPoly is Z[x0][x1] (index = exponent of x1).
using UPoly = std::vector<Integer>;
using BPoly = std::vector<UPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(BPoly& p) {
  for (auto& c : p) trim(c);
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }
int deg(const BPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly u_scale(const UPoly& a, const Integer& c) {
  UPoly r = a;
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

Integer u_content(const UPoly& a) {
  Integer g = 0;
  for (const auto& x : a) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

UPoly u_divexact_int(const UPoly& a, const Integer& c) {
  UPoly r = a;
  for (auto& x : r) x /= c;
  return r;
}

// Exact division; returns false when b does not divide a.
bool u_divide(const UPoly& a, const UPoly& b, UPoly& q) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  q.clear();
  if (a.empty()) return true;
  if (deg(a) < deg(b)) return false;
  UPoly r = a;
  q.assign(static_cast<std::size_t>(deg(a) - deg(b) + 1), 0);
  const Integer& lb = b.back();
  while (!r.empty() && deg(r) >= deg(b)) {
    if (r.back() % lb != 0) return false;
    Integer c = r.back() / lb;
    std::size_t shift = static_cast<std::size_t>(deg(r) - deg(b));
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    trim(r);
  }
  trim(q);
  return r.empty();
}

UPoly u_prem(UPoly a, const UPoly& b) {
  const Integer& lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    Integer la = a.back();
    std::size_t shift = static_cast<std::size_t>(deg(a) - deg(b));
    for (auto& x : a) x *= lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

UPoly u_primpart(const UPoly& a) {
  if (a.empty()) return a;
  Integer c = u_content(a);
  if (a.back() < 0) c = -c;
  return u_divexact_int(a, c);
}

UPoly u_gcd(const UPoly& a0, const UPoly& b0) {
  if (a0.empty()) return u_primpart(b0).empty() ? UPoly{} : u_scale(u_primpart(b0), u_content(b0));
  if (b0.empty()) return u_scale(u_primpart(a0), u_content(a0));
  Integer c = gcd(u_content(a0), u_content(b0));
  UPoly a = u_primpart(a0), b = u_primpart(b0);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = u_prem(a, b);
    a = std::move(b);
    b = u_primpart(r);
  }
  return u_scale(u_primpart(a), c);
}

// ---- bivariate ----

UPoly b_content(const BPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? u_scale(u_primpart(c), u_content(c)) : u_gcd(g, c);
    if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) return UPoly{1};
  }
  return g;
}

BPoly b_div_by_upoly(const BPoly& a, const UPoly& c) {
  BPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].empty()) continue;
    if (!u_divide(a[i], c, r[i])) throw ComputationDefect("inexact content division");
  }
  return r;
}

BPoly b_primpart(const BPoly& a) {
  if (a.empty()) return a;
  UPoly c = b_content(a);
  if (a.back().back() < 0) c = u_scale(c, -1);
  return b_div_by_upoly(a, c);
}

BPoly b_prem(BPoly a, const BPoly& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    UPoly la = a.back();
    std::size_t shift = static_cast<std::size_t>(deg(a) - deg(b));
    for (auto& x : a) x = u_mul(x, lb);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = u_sub(a[i + shift], u_mul(la, b[i]));
    trim(a);
  }
  return a;
}

BPoly b_scale(const BPoly& a, const UPoly& c) {
  BPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = u_mul(a[i], c);
  trim(r);
  return r;
}

BPoly b_gcd(const BPoly& a0, const BPoly& b0) {
  if (a0.empty()) return b0;
  if (b0.empty()) return a0;
  UPoly c = u_gcd(b_content(a0), b_content(b0));
  BPoly a = b_primpart(a0), b = b_primpart(b0);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    BPoly r = b_prem(a, b);
    a = std::move(b);
    b = b_primpart(r);
    if (!b.empty() && deg(b) == 0) {
      // Coprime up to content in Z[x0].
      a = BPoly{UPoly{1}};
      break;
    }
  }
  return b_scale(b_primpart(a), c);
}

bool b_divide(const BPoly& a, const BPoly& b, BPoly& q) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  q.clear();
  if (a.empty()) return true;
  if (deg(a) < deg(b)) return false;
  BPoly r = a;
  q.assign(static_cast<std::size_t>(deg(a) - deg(b) + 1), UPoly{});
  while (!r.empty() && deg(r) >= deg(b)) {
    UPoly c;
    if (!u_divide(r.back(), b.back(), c)) return false;
    std::size_t shift = static_cast<std::size_t>(deg(r) - deg(b));
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] = u_sub(r[i + shift], u_mul(c, b[i]));
    trim(r);
  }
  trim(q);
  return r.empty();
}

// Conversion between Laurent polynomials and dense polynomials. The shift
// records the doubled exponents removed to make every exponent nonnegative.
struct Dense {
  BPoly p;
  Exp shift{0, 0};
};

Dense to_dense(const LaurentPoly& f) {
  Dense d;
  if (f.is_zero()) return d;
  d.shift = {f.min_exp(0), f.arity() > 1 ? f.min_exp(1) : 0};
  int d0 = f.max_exp(0) - d.shift[0];
  int d1 = (f.arity() > 1 ? f.max_exp(1) : 0) - d.shift[1];
  d.p.assign(static_cast<std::size_t>(d1 + 1), UPoly(static_cast<std::size_t>(d0 + 1)));
  for (const auto& [e, c] : f.terms())
    d.p[static_cast<std::size_t>(e[1] - d.shift[1])][static_cast<std::size_t>(e[0] - d.shift[0])] = c;
  trim(d.p);
  return d;
}

LaurentPoly from_dense(const BPoly& p, Exp shift, const std::vector<std::string>& vars) {
  LaurentPoly f(vars);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      f.add_term({static_cast<int>(j) + shift[0], static_cast<int>(i) + shift[1]}, p[i][j]);
  return f;
}

// Sign of the lexicographically greatest term.
int leading_sign(const LaurentPoly& f) {
  if (f.is_zero()) return 0;
  return f.terms().rbegin()->second < 0 ? -1 : 1;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto vars = merged_vars(a, b);
  Dense da = to_dense(a.with_vars(vars)), db = to_dense(b.with_vars(vars));
  BPoly g = b_gcd(da.p, db.p);
  LaurentPoly out = from_dense(g, {0, 0}, vars);
  // Strip any monomial factor so the gcd is canonical up to sign.
  if (!out.is_zero()) out = out.shifted({-out.min_exp(0), vars.size() > 1 ? -out.min_exp(1) : 0});
  if (leading_sign(out) < 0) out = -out;
  return out;
}

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  auto vars = merged_vars(a, b);
  Dense da = to_dense(a.with_vars(vars)), db = to_dense(b.with_vars(vars));
  BPoly q;
  if (!b_divide(da.p, db.p, q)) throw DomainError("polynomial division is not exact");
  return from_dense(q, {da.shift[0] - db.shift[0], da.shift[1] - db.shift[1]}, vars);
}

RationalFn::RationalFn(std::vector<std::string> vars) : num_(vars), den_(vars, 1) {}

RationalFn::RationalFn(const LaurentPoly& num) : num_(num), den_(num.vars(), 1) {}

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  normalize();
}

void RationalFn::normalize() {
  auto vars = merged_vars(num_, den_);
  num_ = num_.with_vars(vars);
  den_ = den_.with_vars(vars);
  if (num_.is_zero()) {
    den_ = LaurentPoly(vars, 1);
    return;
  }
  Dense dn = to_dense(num_), dd = to_dense(den_);
  BPoly g = b_gcd(dn.p, dd.p);
  BPoly n, d;
  if (!b_divide(dn.p, g, n) || !b_divide(dd.p, g, d))
    throw ComputationDefect("gcd does not divide its arguments");
  num_ = from_dense(n, {dn.shift[0] - dd.shift[0], dn.shift[1] - dd.shift[1]}, vars);
  den_ = from_dense(d, {0, 0}, vars);
  if (leading_sign(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

LaurentPoly RationalFn::as_laurent() const {
  if (!is_laurent()) throw DomainError("rational function is not a Laurent polynomial: " + to_string());
  return num_;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!is_laurent()) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  if (!is_laurent()) normalize();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::operator-() const {
  RationalFn out = *this;
  out.num_ = -out.num_;
  return out;
}

bool RationalFn::operator==(const RationalFn& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RationalFn RationalFn::inverse() const {
  if (num_.is_zero()) throw DomainError("inverse of zero");
  return RationalFn(den_, num_);
}

RationalFn RationalFn::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFn out(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
  return out;
}

std::string RationalFn::to_string() const {
  if (is_laurent()) return num_.to_string();
  auto wrap = [](const LaurentPoly& p) {
    return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
  };
  return wrap(num_) + "/" + wrap(den_);
}

nlohmann::json RationalFn::to_json() const {
  return {{"num", num_.to_json()}, {"den", den_.to_json()}};
}

std::ostream& operator<<(std::ostream& os, const RationalFn& f) { return os << f.to_string(); }

namespace {

// Value of a monomial image raised to a half-step exponent; the image must be
// c * x^e with c = 1 (or c = -1 and an integral power).
LaurentPoly monomial_power(const LaurentPoly& image, int doubled) {
  const auto& [e, c] = *image.terms().begin();
  Exp out{0, 0};
  for (int k = 0; k < 2; ++k) {
    long prod = static_cast<long>(e[static_cast<std::size_t>(k)]) * doubled;
    if (prod % 2 != 0) throw DomainError("half-integer power of a half-integer exponent");
    out[static_cast<std::size_t>(k)] = static_cast<int>(prod / 2);
  }
  Integer coef = 1;
  if (c == -1) {
    if (doubled % 2 != 0) throw DomainError("square root of a negative coefficient");
    if ((doubled / 2) % 2 != 0) coef = -1;
  } else if (c != 1) {
    throw DomainError("half-integer power of a non-unit monomial");
  }
  return LaurentPoly::monomial(image.vars(), out, coef);
}

bool is_unit_monomial(const RationalFn& f) {
  if (!f.is_laurent() || !f.numerator().is_monomial()) return false;
  const Integer& c = f.numerator().terms().begin()->second;
  return c == 1 || c == -1;
}

// Evaluates a Laurent polynomial at the given images.
RationalFn compose_poly(const LaurentPoly& p, const std::vector<std::string>& target,
                        const std::vector<RationalFn>& images) {
  if (p.is_zero()) return RationalFn(LaurentPoly(target));
  std::size_t n = p.arity();
  bool monomial_path = true;
  for (std::size_t k = 0; k < n; ++k) monomial_path = monomial_path && is_unit_monomial(images[k]);
  if (monomial_path) {
    LaurentPoly out(target);
    for (const auto& [e, c] : p.terms()) {
      LaurentPoly t(target, c);
      for (std::size_t k = 0; k < n; ++k)
        t *= monomial_power(images[k].numerator().with_vars(target), e[k]);
      out += t;
    }
    return RationalFn(out);
  }
  if (!p.integral()) throw DomainError("half-integer exponent under a non-monomial substitution");
  std::vector<int> lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = p.min_exp(k) / 2;
    hi[k] = p.max_exp(k) / 2;
  }
  // (N/D)^e = N^(e-lo) D^(hi-e) / (N^(-lo) D^hi)
  // (N/D)^e = N^(e-lo) D^(hi-e) * N^lo / D^hi
  std::vector<std::vector<LaurentPoly>> npow(n), dpow(n);
  LaurentPoly num(target), den(target, 1), common(target, 1);
  for (std::size_t k = 0; k < n; ++k) {
    LaurentPoly N = images[k].numerator().with_vars(target);
    LaurentPoly D = images[k].denominator().with_vars(target);
    npow[k].push_back(LaurentPoly(target, 1));
    dpow[k].push_back(LaurentPoly(target, 1));
    for (int i = 1; i <= hi[k] - lo[k]; ++i) {
      npow[k].push_back(npow[k].back() * N);
      dpow[k].push_back(dpow[k].back() * D);
    }
    if (lo[k] >= 0)
      common *= N.pow(static_cast<unsigned>(lo[k]));
    else
      den *= N.pow(static_cast<unsigned>(-lo[k]));
    if (hi[k] >= 0)
      den *= D.pow(static_cast<unsigned>(hi[k]));
    else
      common *= D.pow(static_cast<unsigned>(-hi[k]));
  }
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly t(target, c);
    for (std::size_t k = 0; k < n; ++k) {
      int ek = e[k] / 2;
      t *= npow[k][static_cast<std::size_t>(ek - lo[k])];
      t *= dpow[k][static_cast<std::size_t>(hi[k] - ek)];
    }
    num += t;
  }
  num *= common;
  if (den.is_zero()) throw DomainError("substitution makes a denominator vanish");
  return RationalFn(num, den);
}

}  // namespace

RationalFn compose(const RationalFn& f, const std::vector<std::string>& target_vars,
                   const std::vector<RationalFn>& images) {
  if (images.size() != f.vars().size())
    throw DomainError("compose: one image per variable is required");
  RationalFn n = compose_poly(f.numerator(), target_vars, images);
  RationalFn d = compose_poly(f.denominator(), target_vars, images);
  if (d.is_zero()) throw DomainError("substitution makes a denominator vanish");
  return n / d;
}

RationalFn substitute(const RationalFn& f, const std::string& which, const RationalFn& value) {
  const auto& vars = f.vars();
  auto it = std::find(vars.begin(), vars.end(), which);
  if (it == vars.end()) throw DomainError("substitute: unknown variable " + which);
  std::vector<std::string> target;
  for (const auto& v : vars)
    if (v != which) target.push_back(v);
  for (const auto& v : value.vars())
    if (std::find(target.begin(), target.end(), v) == target.end() && !value.numerator().is_constant())
      target.push_back(v);
  if (target.empty()) target.push_back(value.vars().front());
  if (target.size() > 2) throw DomainError("substitution would need more than two variables");
  std::vector<RationalFn> images;
  for (const auto& v : vars) {
    if (v == which)
      images.push_back(value);
    else
      images.emplace_back(LaurentPoly::var(target, v));
  }
  return compose(f, target, images);
}

}  // namespace linkhom

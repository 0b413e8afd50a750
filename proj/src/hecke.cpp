#include "linkhom/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

const std::vector<std::string> kQ{"q"};

LaurentPoly qp(int e, int c = 1) { return LaurentPoly::term(kQ, e, 0, c); }

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

HeckeElement::HeckeElement(int strands) : strands_(strands) {
  if (strands < 1 || strands > 255) throw InvalidInput("Hecke algebra needs 1..255 strands");
}

HeckeElement HeckeElement::identity(int strands) {
  HeckeElement h(strands);
  h.add(identity_perm(strands), qp(0));
  return h;
}

HeckeElement HeckeElement::basis(const Perm& w, const LaurentPoly& coef) {
  HeckeElement h(static_cast<int>(w.size()));
  h.add(w, coef);
  return h;
}

HeckeElement HeckeElement::generator(int strands, int letter) {
  return identity(strands).times_letter(letter);
}

LaurentPoly HeckeElement::coefficient(const Perm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly(kQ) : it->second;
}

void HeckeElement::add(const Perm& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement HeckeElement::times_generator(int i) const {
  if (i < 1 || i >= strands_) throw InvalidInput("Hecke generator index out of range");
  HeckeElement out(strands_);
  std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
  const LaurentPoly q2 = qp(2), one_minus_q2 = qp(0) - qp(2);
  for (const auto& [w, c] : terms_) {
    Perm ws = w;
    std::swap(ws[a], ws[b]);
    if (w[a] < w[b]) {
      out.add(ws, c);
    } else {
      out.add(ws, q2 * c);
      out.add(w, one_minus_q2 * c);
    }
  }
  return out;
}

HeckeElement HeckeElement::times_letter(int letter) const {
  int i = std::abs(letter);
  HeckeElement t = times_generator(i);
  if (letter > 0) return t;
  // T_i^{-1} = q^-2 T_i + (1 - q^-2)
  return qp(-2) * t + (qp(0) - qp(-2)) * *this;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.strands_ != strands_) throw InvalidInput("Hecke elements on different strand counts");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.strands_ != strands_) throw InvalidInput("Hecke elements on different strand counts");
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& a) {
  HeckeElement out(a.strands_);
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (a.strands_ != b.strands_) throw InvalidInput("Hecke elements on different strand counts");
  HeckeElement out(a.strands_);
  for (const auto& [w, c] : b.terms_) {
    HeckeElement part = a;
    for (int i : reduced_word(w)) part = part.times_generator(i);
    out += c * part;
  }
  return out;
}

HeckeElement HeckeElement::embedded(int m) const {
  if (m < strands_) throw InvalidInput("cannot embed into fewer strands");
  HeckeElement out(m);
  for (const auto& [w, c] : terms_) {
    Perm big = identity_perm(m);
    std::copy(w.begin(), w.end(), big.begin());
    out.add(big, c);
  }
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*T[";
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? " " : "") << static_cast<int>(w[k]) + 1;
    os << "]";
  }
  return os.str();
}

std::vector<int> reduced_word(const Perm& w) {
  // Bubble w down to the identity; each swap of an inversion shortens it.
  Perm v = w;
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
      if (v[k] > v[k + 1]) {
        std::swap(v[k], v[k + 1]);
        word.push_back(static_cast<int>(k) + 1);
        changed = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

int perm_length(const Perm& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return inv;
}

HeckeElement hecke_normal_form(const BraidWord& b) {
  validate(b);
  HeckeElement h = HeckeElement::identity(b.strands);
  for (int l : b.letters) h = h.times_letter(l);
  return h;
}

WideWord parse_wide_word(const std::string& text) {
  static const std::regex head(R"(^\s*(\d+)\s*:(.*)$)");
  std::smatch m;
  if (!std::regex_match(text, m, head)) throw InvalidInput("wide word must look like '<p>: 1 E2 -1'");
  WideWord w;
  w.strands = std::stoi(m[1].str());
  if (w.strands < 1) throw InvalidInput("strand count must be positive");
  std::istringstream rest(m[2].str());
  std::string tok;
  static const std::regex letter(R"(^([Ee])?(-?\d+)$)");
  while (rest >> tok) {
    std::smatch lm;
    if (!std::regex_match(tok, lm, letter)) throw InvalidInput("bad wide-word token '" + tok + "'");
    int v = std::stoi(lm[2].str());
    WideLetter l;
    if (lm[1].matched) {
      if (v <= 0) throw InvalidInput("wide edge index must be positive");
      l.kind = WideLetter::Wide;
    } else {
      l.kind = v > 0 ? WideLetter::Positive : WideLetter::Negative;
    }
    l.index = std::abs(v);
    if (l.index < 1 || l.index >= w.strands) throw InvalidInput("letter index out of range in '" + tok + "'");
    w.letters.push_back(l);
  }
  return w;
}

HeckeElement wide_edge_expand(const WideWord& w) {
  HeckeElement h = HeckeElement::identity(w.strands);
  for (const auto& l : w.letters) {
    switch (l.kind) {
      case WideLetter::Positive: h = h.times_letter(l.index); break;
      case WideLetter::Negative: h = h.times_letter(-l.index); break;
      case WideLetter::Wide: h = h.times_generator(l.index) + qp(2) * h; break;
    }
  }
  return h;
}

namespace {

void add_into(TracePoly& acc, const TracePoly& x, const LaurentPoly& c, std::size_t shift) {
  if (acc.size() < x.size() + shift) acc.resize(x.size() + shift, LaurentPoly(kQ));
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) acc[k + shift] += c * x[k];
}

class Tracer {
 public:
  TracePoly trace(const HeckeElement& h) {
    TracePoly acc;
    for (const auto& [w, c] : h.terms()) add_into(acc, basis_trace(w), c, 0);
    while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    return acc;
  }

 private:
  const TracePoly& basis_trace(const Perm& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    TracePoly result;
    std::size_t p = w.size();
    if (p == 1) {
      result = {qp(0)};
    } else {
      auto top = static_cast<std::uint8_t>(p - 1);
      std::size_t k = static_cast<std::size_t>(std::find(w.begin(), w.end(), top) - w.begin());
      Perm rest;
      for (auto x : w)
        if (x != top) rest.push_back(x);
      if (k == p - 1) {
        // w fixes the last strand: closing it off contributes a factor d.
        add_into(result, basis_trace(rest), qp(0), 1);
      } else {
        // w = w' s_{p-1} s_{p-2} ... s_{k+1} (1-based), and the trace drops
        // the single s_{p-1}: tr(w' T_{p-2} ... T_{k+1}) in H_{p-1}.
        HeckeElement e = HeckeElement::basis(rest, qp(0));
        for (int i = static_cast<int>(p) - 2; i >= static_cast<int>(k) + 1; --i) e = e.times_generator(i);
        for (const auto& [u, c] : e.terms()) add_into(result, basis_trace(u), c, 0);
      }
    }
    return memo_.emplace(w, std::move(result)).first->second;
  }

  std::map<Perm, TracePoly> memo_;
};

}  // namespace

TracePoly markov_trace_poly(const HeckeElement& h) {
  Tracer t;
  return t.trace(h);
}

RationalFn trace_to_rational(const TracePoly& p) {
  const std::vector<std::string> qt{"q", "t"};
  LaurentPoly one = LaurentPoly::term(qt, 0, 0);
  LaurentPoly top = one + LaurentPoly::term(qt, 1, -1);      // 1 + t^-1 q
  LaurentPoly bottom = one - LaurentPoly::term(qt, 2, 0);    // 1 - q^2
  if (p.empty()) return RationalFn(LaurentPoly(qt));
  std::size_t K = p.size() - 1;
  LaurentPoly num(qt);
  for (std::size_t k = 0; k <= K; ++k) {
    if (p[k].is_zero()) continue;
    num += p[k].with_vars(qt) * top.pow(static_cast<unsigned>(k)) * bottom.pow(static_cast<unsigned>(K - k));
  }
  return RationalFn(num, bottom.pow(static_cast<unsigned>(K)));
}

RationalFn markov_trace(const HeckeElement& h) { return trace_to_rational(markov_trace_poly(h)); }

}  // namespace linkhom

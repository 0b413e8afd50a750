#include "linkhom/diagram.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <regex>

#include "linkhom/errors.hpp"

namespace linkhom {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[static_cast<std::size_t>(b)] = a;
    else
      parent_[static_cast<std::size_t>(a)] = b;
  }

 private:
  std::vector<int> parent_;
};

// Slot pairs joined by each smoothing.
constexpr std::array<std::array<std::pair<int, int>, 2>, 2> kJoins{{
    {{{kA, kB}, {kC, kD}}},
    {{{kA, kD}, {kB, kC}}},
}};

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::BraidClosure: return "braid-closure";
    case Provenance::PdCode: return "pd-code";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

Provenance provenance_from(const std::string& s) {
  if (s == "braid-closure") return Provenance::BraidClosure;
  if (s == "pd-code") return Provenance::PdCode;
  if (s == "derived") return Provenance::Derived;
  throw InvalidInput("unknown provenance '" + s + "'");
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int num_arcs, Provenance prov)
    : crossings_(std::move(crossings)), num_arcs_(num_arcs), provenance_(prov) {
  validate();
  for (const auto& c : crossings_) (c.sign > 0 ? n_plus_ : n_minus_)++;
}

void Diagram::validate() const {
  if (crossings_.size() > 63) throw InvalidInput("diagrams are limited to 63 crossings");
  std::vector<int> uses(static_cast<std::size_t>(std::max(num_arcs_, 0)), 0);
  for (const auto& c : crossings_) {
    if (c.sign != 1 && c.sign != -1) throw InvalidInput("crossing sign must be +1 or -1");
    for (int a : c.slots) {
      if (a < 0 || a >= num_arcs_) throw InvalidInput("arc id out of range");
      ++uses[static_cast<std::size_t>(a)];
    }
  }
  for (int u : uses)
    if (u != 0 && u != 2) throw InvalidInput("every arc must have exactly two ends");
}

int Diagram::free_loops() const {
  std::vector<bool> used(static_cast<std::size_t>(num_arcs_), false);
  for (const auto& c : crossings_)
    for (int a : c.slots) used[static_cast<std::size_t>(a)] = true;
  return static_cast<int>(std::count(used.begin(), used.end(), false));
}

std::size_t Diagram::find_crossing(int generator, int occurrence) const {
  for (std::size_t k = 0; k < crossings_.size(); ++k)
    if (crossings_[k].generator == generator && crossings_[k].occurrence == occurrence) return k;
  throw InvalidInput("no crossing (" + std::to_string(generator) + "," +
                     std::to_string(occurrence) + ")");
}

nlohmann::json Diagram::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (std::size_t k = 0; k < crossings_.size(); ++k) {
    const auto& c = crossings_[k];
    cs.push_back({{"id", k},
                  {"sign", c.sign},
                  {"slots", c.slots},
                  {"generator", c.generator},
                  {"occurrence", c.occurrence}});
  }
  return {{"provenance", provenance_name(provenance_)},
          {"arcs", num_arcs_},
          {"n_plus", n_plus_},
          {"n_minus", n_minus_},
          {"crossings", cs}};
}

Diagram Diagram::from_json(const nlohmann::json& j) {
  try {
    std::vector<Crossing> cs;
    for (const auto& c : j.at("crossings")) {
      Crossing x;
      x.sign = c.at("sign").get<int>();
      x.slots = c.at("slots").get<std::array<int, 4>>();
      x.generator = c.value("generator", 0);
      x.occurrence = c.value("occurrence", 0);
      cs.push_back(x);
    }
    return Diagram(std::move(cs), j.at("arcs").get<int>(),
                   provenance_from(j.value("provenance", "derived")));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed diagram JSON: ") + e.what());
  }
}

Diagram braid_closure(const BraidWord& b) {
  validate(b);
  const int p = b.strands;
  // Arcs 0..p-1 start at the bottom of each strand position.
  std::vector<int> cur(static_cast<std::size_t>(p));
  std::iota(cur.begin(), cur.end(), 0);
  int next_arc = p;
  struct Raw {
    Crossing c;
    std::size_t word_pos;
  };
  std::vector<Raw> raw;
  std::map<int, int> seen_per_generator;
  for (std::size_t pos = 0; pos < b.letters.size(); ++pos) {
    int w = b.letters[pos];
    int i = std::abs(w);
    int left = cur[static_cast<std::size_t>(i - 1)], right = cur[static_cast<std::size_t>(i)];
    int top_left = next_arc++, top_right = next_arc++;
    Crossing c;
    c.generator = i;
    c.occurrence = ++seen_per_generator[i];
    if (w > 0) {
      // Under strand runs bottom-right to top-left, over strand bottom-left to top-right.
      c.sign = 1;
      c.slots = {right, top_right, top_left, left};
    } else {
      c.sign = -1;
      c.slots = {left, right, top_right, top_left};
    }
    raw.push_back({c, pos});
    cur[static_cast<std::size_t>(i - 1)] = top_left;
    cur[static_cast<std::size_t>(i)] = top_right;
  }
  // Closing the braid identifies the top arc of each position with its bottom arc.
  std::vector<int> alias(static_cast<std::size_t>(next_arc));
  std::iota(alias.begin(), alias.end(), 0);
  for (int k = 0; k < p; ++k) alias[static_cast<std::size_t>(cur[static_cast<std::size_t>(k)])] = k;
  std::vector<int> compact(static_cast<std::size_t>(next_arc), -1);
  int arcs = 0;
  for (int a = 0; a < next_arc; ++a)
    if (alias[static_cast<std::size_t>(a)] == a) compact[static_cast<std::size_t>(a)] = arcs++;
  std::stable_sort(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
    return x.c.generator != y.c.generator ? x.c.generator < y.c.generator : x.word_pos < y.word_pos;
  });
  std::vector<Crossing> cs;
  for (auto& r : raw) {
    for (int& s : r.c.slots) s = compact[static_cast<std::size_t>(alias[static_cast<std::size_t>(s)])];
    cs.push_back(r.c);
  }
  return Diagram(std::move(cs), arcs, Provenance::BraidClosure);
}

namespace {

struct End {
  int crossing;
  int slot;
};

// Orients every strand and returns the sign of each crossing.
std::vector<int> orient_pd(const std::vector<std::array<int, 4>>& xs, int arcs) {
  std::vector<std::vector<End>> ends(static_cast<std::size_t>(arcs));
  for (std::size_t k = 0; k < xs.size(); ++k)
    for (int s = 0; s < 4; ++s)
      ends[static_cast<std::size_t>(xs[k][static_cast<std::size_t>(s)])].push_back({static_cast<int>(k), s});
  auto other_end = [&](int arc, End here) {
    const auto& e = ends[static_cast<std::size_t>(arc)];
    return (e[0].crossing == here.crossing && e[0].slot == here.slot) ? e[1] : e[0];
  };
  // over_dir[k] = +1 when the over strand runs D -> B, -1 for B -> D, 0 unknown.
  std::vector<int> over_dir(xs.size(), 0);
  std::vector<bool> visited(static_cast<std::size_t>(arcs), false);

  // Follows a strand leaving crossing `start.crossing` through slot `start.slot`.
  auto trace = [&](End start) {
    End out = start;
    while (true) {
      int arc = xs[static_cast<std::size_t>(out.crossing)][static_cast<std::size_t>(out.slot)];
      if (visited[static_cast<std::size_t>(arc)]) return;
      visited[static_cast<std::size_t>(arc)] = true;
      End in = other_end(arc, out);
      switch (in.slot) {
        case kA: out = {in.crossing, kC}; break;
        case kC: throw InvalidInput("inconsistent orientation: strand enters an outgoing under-slot");
        case kB:
        case kD: {
          int dir = in.slot == kD ? 1 : -1;
          int& od = over_dir[static_cast<std::size_t>(in.crossing)];
          if (od != 0 && od != dir) throw InvalidInput("inconsistent orientation at an over-strand");
          od = dir;
          out = {in.crossing, in.slot == kD ? kB : kD};
          break;
        }
      }
    }
  };
  for (std::size_t k = 0; k < xs.size(); ++k) trace({static_cast<int>(k), kC});
  // Components made only of over-passes: orient by consecutive labels.
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (over_dir[k] != 0) continue;
    int b = xs[k][kB], d = xs[k][kD];
    bool d_to_b = (b == d + 1) || (d > b + 1);
    trace({static_cast<int>(k), d_to_b ? kB : kD});
    if (over_dir[k] == 0) over_dir[k] = d_to_b ? 1 : -1;
  }
  return over_dir;
}

}  // namespace

Diagram parse_pd(const std::string& text) {
  static const std::regex record(R"(X\s*\[?\s*(-?\d+)\s*[,\s]\s*(-?\d+)\s*[,\s]\s*(-?\d+)\s*[,\s]\s*(-?\d+)\s*\]?)");
  std::vector<std::array<int, 4>> raw;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), record); it != std::sregex_iterator(); ++it)
    raw.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
  if (raw.empty()) throw InvalidInput("PD code has no crossings");
  std::map<int, int> count;
  for (const auto& x : raw)
    for (int a : x) ++count[a];
  std::map<int, int> label_to_arc;
  for (const auto& [label, n] : count) {
    if (n != 2)
      throw InvalidInput("arc label " + std::to_string(label) + " used " + std::to_string(n) +
                         " times (expected 2)");
    int id = static_cast<int>(label_to_arc.size());
    label_to_arc[label] = id;
  }
  std::vector<std::array<int, 4>> xs;
  for (const auto& x : raw) {
    std::array<int, 4> y{};
    for (int s = 0; s < 4; ++s) y[static_cast<std::size_t>(s)] = label_to_arc[x[static_cast<std::size_t>(s)]];
    xs.push_back(y);
  }
  auto dirs = orient_pd(xs, static_cast<int>(label_to_arc.size()));
  std::vector<Crossing> cs;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Crossing c;
    c.slots = xs[k];
    c.sign = dirs[k];
    cs.push_back(c);
  }
  return Diagram(std::move(cs), static_cast<int>(label_to_arc.size()), Provenance::PdCode);
}

Diagram parse_link(const std::string& text) {
  if (text.find('X') != std::string::npos) return parse_pd(text);
  return braid_closure(parse_braid(text));
}

std::uint64_t eps_from_bits(const std::vector<int>& bits) {
  if (bits.size() > 63) throw InvalidInput("too many crossings");
  std::uint64_t e = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] != 0 && bits[k] != 1) throw InvalidInput("resolution bits must be 0 or 1");
    if (bits[k]) e |= (std::uint64_t{1} << k);
  }
  return e;
}

namespace {

UnionFind smoothing_classes(const Diagram& d, std::uint64_t eps) {
  UnionFind uf(static_cast<std::size_t>(d.num_arcs()));
  const auto& cs = d.crossings();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    int bit = static_cast<int>((eps >> k) & 1U);
    for (auto [s, t] : kJoins[static_cast<std::size_t>(bit)])
      uf.unite(cs[k].slots[static_cast<std::size_t>(s)], cs[k].slots[static_cast<std::size_t>(t)]);
  }
  return uf;
}

void check_eps(const Diagram& d, std::uint64_t eps) {
  if (d.size() < 64 && (eps >> d.size()) != 0) throw InvalidInput("resolution has bits beyond the crossings");
}

}  // namespace

ResolutionState resolve_all(const Diagram& d, std::uint64_t eps) {
  check_eps(d, eps);
  UnionFind uf = smoothing_classes(d, eps);
  ResolutionState st;
  st.eps = eps;
  st.arc_circle.assign(static_cast<std::size_t>(d.num_arcs()), -1);
  // Roots are minimal arcs of their class, so scanning arcs in order sorts
  // the circles by minimal arc id.
  std::vector<int> root_circle(static_cast<std::size_t>(d.num_arcs()), -1);
  for (int a = 0; a < d.num_arcs(); ++a) {
    int r = uf.find(a);
    int& c = root_circle[static_cast<std::size_t>(r)];
    if (c < 0) {
      c = static_cast<int>(st.circles.size());
      st.circles.emplace_back();
    }
    st.circles[static_cast<std::size_t>(c)].push_back(a);
    st.arc_circle[static_cast<std::size_t>(a)] = c;
  }
  return st;
}

ResolutionState resolve_all(const Diagram& d, const std::vector<int>& bits) {
  if (bits.size() != d.size()) throw InvalidInput("resolution length does not match crossing count");
  return resolve_all(d, eps_from_bits(bits));
}

int circle_count(const Diagram& d, std::uint64_t eps) {
  UnionFind uf = smoothing_classes(d, eps);
  int n = 0;
  for (int a = 0; a < d.num_arcs(); ++a)
    if (uf.find(a) == a) ++n;
  return n;
}

EdgeEvent edge_event(const Diagram& d, std::uint64_t eps, std::size_t changed) {
  if (changed >= d.size()) throw InvalidInput("changed crossing out of range");
  if ((eps >> changed) & 1U) throw InvalidInput("edge must change a 0-bit to 1");
  EdgeEvent ev;
  ev.source = eps;
  ev.target = eps | (std::uint64_t{1} << changed);
  ev.changed = changed;
  ev.sign_exponent = std::popcount(eps & ((std::uint64_t{1} << changed) - 1));
  ResolutionState src = resolve_all(d, ev.source), dst = resolve_all(d, ev.target);
  const auto& slots = d.crossings()[changed].slots;
  int c1 = src.arc_circle[static_cast<std::size_t>(slots[kA])];
  int c2 = src.arc_circle[static_cast<std::size_t>(slots[kC])];
  if (c1 != c2) {
    ev.kind = EdgeKind::Merge;
    ev.inputs = {std::min(c1, c2), std::max(c1, c2)};
    ev.outputs = {dst.arc_circle[static_cast<std::size_t>(slots[kA])]};
  } else {
    ev.kind = EdgeKind::Split;
    ev.inputs = {c1};
    int o1 = dst.arc_circle[static_cast<std::size_t>(slots[kA])];
    int o2 = dst.arc_circle[static_cast<std::size_t>(slots[kB])];
    if (o1 == o2) throw ComputationDefect("smoothing change neither merges nor splits");
    ev.outputs = {std::min(o1, o2), std::max(o1, o2)};
  }
  ev.correspondence.assign(src.circles.size(), -1);
  for (std::size_t c = 0; c < src.circles.size(); ++c) {
    if (std::find(ev.inputs.begin(), ev.inputs.end(), static_cast<int>(c)) != ev.inputs.end()) continue;
    ev.correspondence[c] = dst.arc_circle[static_cast<std::size_t>(src.circles[c].front())];
  }
  return ev;
}

EdgeEvent edge_event(const Diagram& d, const std::vector<int>& bits, std::size_t changed) {
  if (bits.size() != d.size()) throw InvalidInput("resolution length does not match crossing count");
  return edge_event(d, eps_from_bits(bits), changed);
}

Diagram resolve_crossing(const Diagram& d, std::size_t c, int bit) {
  if (c >= d.size()) throw InvalidInput("unknown crossing");
  if (bit != 0 && bit != 1) throw InvalidInput("smoothing bit must be 0 or 1");
  UnionFind uf(static_cast<std::size_t>(d.num_arcs()));
  const auto& x = d.crossings()[c];
  for (auto [s, t] : kJoins[static_cast<std::size_t>(bit)])
    uf.unite(x.slots[static_cast<std::size_t>(s)], x.slots[static_cast<std::size_t>(t)]);
  std::vector<int> renumber(static_cast<std::size_t>(d.num_arcs()), -1);
  int arcs = 0;
  for (int a = 0; a < d.num_arcs(); ++a)
    if (uf.find(a) == a) renumber[static_cast<std::size_t>(a)] = arcs++;
  std::vector<Crossing> cs;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k == c) continue;
    Crossing y = d.crossings()[k];
    for (int& s : y.slots) s = renumber[static_cast<std::size_t>(uf.find(s))];
    cs.push_back(y);
  }
  return Diagram(std::move(cs), arcs, Provenance::Derived);
}

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (auto& c : cs) {
    auto s = c.slots;
    if (c.sign > 0)
      c.slots = {s[kD], s[kA], s[kB], s[kC]};
    else
      c.slots = {s[kB], s[kC], s[kD], s[kA]};
    c.sign = -c.sign;
  }
  return Diagram(std::move(cs), d.num_arcs(), d.provenance());
}

int component_count(const Diagram& d) {
  UnionFind uf(static_cast<std::size_t>(d.num_arcs()));
  for (const auto& c : d.crossings()) {
    uf.unite(c.slots[kA], c.slots[kC]);
    uf.unite(c.slots[kB], c.slots[kD]);
  }
  int n = 0;
  for (int a = 0; a < d.num_arcs(); ++a)
    if (uf.find(a) == a) ++n;
  return n;
}

}  // namespace linkhom

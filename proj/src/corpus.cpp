#include "linkhom/corpus.hpp"

#include <algorithm>

#include "linkhom/errors.hpp"

namespace linkhom {

Diagram CorpusEntry::diagram() const { return is_pd ? parse_pd(text) : braid_closure(parse_braid(text)); }

const std::vector<CorpusEntry>& named_corpus() {
  static const std::vector<CorpusEntry> entries = {
      {"unknot", false, "1:"},
      {"unknot-s", false, "2: 1"},
      {"unknot-ss", false, "3: 1 -2"},
      {"unlink2", false, "2:"},
      {"unlink3", false, "3:"},
      {"hopf", false, "2: 1 1"},
      {"hopf-neg", false, "2: -1 -1"},
      {"trefoil", false, "2: 1 1 1"},
      {"trefoil-mirror", false, "2: -1 -1 -1"},
      {"trefoil-pd", true, "X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]"},
      {"figure-eight", false, "3: 1 -2 1 -2"},
      {"figure-eight-pd", true, "X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]"},
      {"T(2,4)", false, "2: 1 1 1 1"},
      {"cinquefoil", false, "2: 1 1 1 1 1"},
      {"5_2", false, "3: 1 1 1 2 -1 2"},
      {"T(2,6)", false, "2: 1 1 1 1 1 1"},
      {"6_1", false, "4: 1 1 2 -1 -3 2 -3"},
      {"6_2", false, "3: 1 1 1 -2 1 -2"},
      {"6_3", false, "3: 1 1 -2 1 -2 -2"},
      {"T(3,3)", false, "3: 1 2 1 2 1 2"},
      {"borromean", false, "3: 1 -2 1 -2 1 -2"},
      {"T(2,7)", false, "2: 1 1 1 1 1 1 1"},
      {"T(3,4)", false, "3: 1 2 1 2 1 2 1 2"},
      {"T(2,8)", false, "2: 1 1 1 1 1 1 1 1"},
      {"T(3,5)", false, "3: 1 2 1 2 1 2 1 2 1 2"},
      {"T(2,9)", false, "2: 1 1 1 1 1 1 1 1 1"},
      {"T(4,3)", false, "4: 1 2 3 1 2 3 1 2 3"},
      {"pretzel-like", false, "3: 1 1 -2 -2 1 1 -2"},
  };
  return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : named_corpus())
    if (e.name == name) return e;
  throw InvalidInput("unknown corpus entry '" + name + "'");
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
  if (lo > hi) throw InvalidInput("empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

BraidWord random_braid_word(std::mt19937_64& rng, int strands, int length) {
  BraidWord b{strands, {}};
  if (strands < 2) return b;
  for (int k = 0; k < length; ++k) {
    int g = uniform(rng, 1, strands - 1);
    b.letters.push_back(uniform(rng, 0, 1) ? g : -g);
  }
  return b;
}

std::vector<CorpusEntry> corpus(std::size_t random_count, std::uint64_t seed, std::size_t max_crossings) {
  std::vector<CorpusEntry> out;
  for (const auto& e : named_corpus())
    if (e.crossings() <= max_crossings) out.push_back(e);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < random_count; ++k) {
    int strands = uniform(rng, 2, 4);
    int length = uniform(rng, 1, static_cast<int>(std::max<std::size_t>(max_crossings, 1)));
    auto b = random_braid_word(rng, strands, length);
    out.push_back({"random-" + std::to_string(k), false, b.to_string()});
  }
  return out;
}

std::vector<BraidWord> random_positive_knots(std::size_t count, std::uint64_t seed, int min_len, int max_len) {
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> out;
  while (out.size() < count) {
    int strands = uniform(rng, 2, 4);
    BraidWord b{strands, {}};
    int length = uniform(rng, min_len, max_len);
    for (int k = 0; k < length; ++k) b.letters.push_back(uniform(rng, 1, strands - 1));
    bool uses_all = true;
    for (int g = 1; g < strands; ++g)
      uses_all = uses_all && std::find(b.letters.begin(), b.letters.end(), g) != b.letters.end();
    if (uses_all && closure_components(b) == 1) out.push_back(b);
  }
  return out;
}

Multigraph random_graph(std::mt19937_64& rng, int vertices, int edges) {
  Multigraph g{vertices, {}};
  for (int e = 0; e < edges; ++e) g.edges.emplace_back(uniform(rng, 1, vertices), uniform(rng, 1, vertices));
  return g;
}

std::vector<BraidWord> markov_family(const BraidWord& b, std::size_t count, std::uint64_t seed) {
  validate(b);
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> out{b};
  BraidWord cur = b;
  for (std::size_t k = 1; k < count; ++k) {
    switch (k % 5) {
      case 1:  // cyclic rotation
        if (!cur.letters.empty()) std::rotate(cur.letters.begin(), cur.letters.begin() + 1, cur.letters.end());
        break;
      case 2:
        cur = stabilize(cur, 1);
        break;
      case 3:
        cur = conjugate(cur, uniform(rng, 0, 1) ? 1 : -1);
        break;
      case 4:
        cur = stabilize(cur, -1);
        break;
      default: {  // a cancelling pair somewhere
        int g = uniform(rng, 1, cur.strands - 1);
        auto at = cur.letters.begin() + uniform(rng, 0, static_cast<int>(cur.letters.size()));
        cur.letters.insert(at, {g, -g});
        break;
      }
    }
    out.push_back(cur);
  }
  return out;
}

}  // namespace linkhom

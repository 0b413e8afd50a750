#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linkhom/braid.hpp"
#include "linkhom/diagram.hpp"
#include "linkhom/graph.hpp"

namespace linkhom {

struct CorpusEntry {
  std::string name;
  bool is_pd = false;  ///< text is PD code rather than a braid word
  std::string text;

  Diagram diagram() const;
  std::size_t crossings() const { return diagram().size(); }
};

/// Named braid closures and PD codes.
const std::vector<CorpusEntry>& named_corpus();
/// Named entries followed by `random_count` seeded random braids with at
/// most `max_crossings` letters.
std::vector<CorpusEntry> corpus(std::size_t random_count = 20, std::uint64_t seed = 1,
                                std::size_t max_crossings = 10);
/// Looks up a named entry; InvalidInput if unknown.
const CorpusEntry& corpus_entry(const std::string& name);

/// Uniform integer in [lo, hi] from the raw engine output, so sequences do
/// not depend on the standard library's distributions.
int uniform(std::mt19937_64& rng, int lo, int hi);

BraidWord random_braid_word(std::mt19937_64& rng, int strands, int length);
/// Positive braids whose closure is a knot, with lengths in [min_len, max_len].
std::vector<BraidWord> random_positive_knots(std::size_t count, std::uint64_t seed, int min_len, int max_len);
Multigraph random_graph(std::mt19937_64& rng, int vertices, int edges);

/// Presentations of the same link related by conjugation, stabilization and
/// braid relations; the first entry is the input.
std::vector<BraidWord> markov_family(const BraidWord& b, std::size_t count, std::uint64_t seed);

}  // namespace linkhom

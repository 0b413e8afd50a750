#pragma once

#include <string>
#include <vector>

namespace linkhom {

/// A braid word on `strands` strands. Letter k > 0 stands for the generator
/// sigma_k, letter -k for its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
  std::string to_string() const;
  int writhe() const;
};

/// Parses "<p>: w1 w2 ... wm". Throws InvalidInput on malformed text.
BraidWord parse_braid(const std::string& text);

/// Checks the letter bounds; throws InvalidInput on violation.
void validate(const BraidWord& b);

/// k^-1 * b * k for a letter k with |k| < strands.
BraidWord conjugate(const BraidWord& b, int k);

/// Appends sigma_p^{+-1} on a new (p+1)-th strand.
BraidWord stabilize(const BraidWord& b, int sign);

/// (sigma_1 sigma_2 ... sigma_{p-1})^q on p strands.
BraidWord torus_braid(int p, int q);

/// Number of components of the closure (cycles of the underlying permutation).
int closure_components(const BraidWord& b);

}  // namespace linkhom

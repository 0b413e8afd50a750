#include "linkhom/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "linkhom/errors.hpp"

namespace linkhom {

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << strands << ":";
  for (int w : letters) os << " " << w;
  return os.str();
}

int BraidWord::writhe() const {
  int w = 0;
  for (int l : letters) w += l > 0 ? 1 : -1;
  return w;
}

void validate(const BraidWord& b) {
  if (b.strands < 1) throw InvalidInput("braid must have at least one strand");
  for (int w : b.letters) {
    if (w == 0) throw InvalidInput("braid letter 0 is not a generator");
    if (std::abs(w) >= b.strands)
      throw InvalidInput("generator index " + std::to_string(std::abs(w)) +
                         " out of range for " + std::to_string(b.strands) + " strands");
  }
}

BraidWord parse_braid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("braid text must look like '<p>: w1 w2 ...'");
  BraidWord b;
  std::istringstream head(text.substr(0, colon));
  if (!(head >> b.strands)) throw InvalidInput("missing strand count in braid text");
  std::string rest;
  if (head >> rest) throw InvalidInput("unexpected text before ':' in braid");
  std::istringstream body(text.substr(colon + 1));
  std::string tok;
  while (body >> tok) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') throw InvalidInput("bad braid letter '" + tok + "'");
    b.letters.push_back(static_cast<int>(v));
  }
  validate(b);
  return b;
}

BraidWord conjugate(const BraidWord& b, int k) {
  if (k == 0 || std::abs(k) >= b.strands) throw InvalidInput("conjugating letter out of range");
  BraidWord out{b.strands, {}};
  out.letters.push_back(-k);
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  out.letters.push_back(k);
  return out;
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw InvalidInput("stabilization sign must be +1 or -1");
  BraidWord out = b;
  out.letters.push_back(sign * b.strands);
  out.strands = b.strands + 1;
  return out;
}

BraidWord torus_braid(int p, int q) {
  if (p < 1 || q < 0) throw InvalidInput("torus braid needs p >= 1 and q >= 0");
  BraidWord b{p, {}};
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) b.letters.push_back(i);
  return b;
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int w : b.letters) {
    std::size_t i = static_cast<std::size_t>(std::abs(w) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) seen[x] = true;
  }
  return cycles;
}

}  // namespace linkhom

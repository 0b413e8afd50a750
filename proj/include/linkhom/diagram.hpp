#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "linkhom/braid.hpp"

namespace linkhom {

/// Slot order inside a crossing, following the planar-diagram convention:
/// slot A is the incoming under-strand end and the slots run
/// counterclockwise. The 0-smoothing joins A-B and C-D, the 1-smoothing
/// joins A-D and B-C.
enum Slot : int { kA = 0, kB = 1, kC = 2, kD = 3 };

struct Crossing {
  int sign = 1;                  ///< +1 or -1
  std::array<int, 4> slots{};    ///< arc id at slots A, B, C, D
  int generator = 0;             ///< braid generator index (closures only)
  int occurrence = 0;            ///< occurrence among letters of that generator
  bool operator==(const Crossing&) const = default;
};

enum class Provenance { BraidClosure, PdCode, Derived };

/// An immutable link diagram: crossings with four arc slots each plus the
/// arc count. Arcs that touch no crossing are free circles.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<Crossing> crossings, int num_arcs, Provenance prov);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t size() const { return crossings_.size(); }
  int num_arcs() const { return num_arcs_; }
  Provenance provenance() const { return provenance_; }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return n_minus_; }
  int free_loops() const;

  /// Index of the braid crossing (generator, occurrence); InvalidInput if absent.
  std::size_t find_crossing(int generator, int occurrence) const;

  bool operator==(const Diagram& o) const {
    return crossings_ == o.crossings_ && num_arcs_ == o.num_arcs_;
  }

  nlohmann::json to_json() const;
  static Diagram from_json(const nlohmann::json& j);

 private:
  void validate() const;

  std::vector<Crossing> crossings_;
  int num_arcs_ = 0;
  Provenance provenance_ = Provenance::Derived;
  int n_plus_ = 0;
  int n_minus_ = 0;
};

/// Closure of a braid word. Crossings are ordered by generator index and
/// then by position in the word.
Diagram braid_closure(const BraidWord& b);

/// Parses planar-diagram code: one "X a b c d" (or "X[a,b,c,d]") record per
/// crossing; every label must occur exactly twice.
Diagram parse_pd(const std::string& text);

/// Parses either a braid ("p: ...") or PD text, detected from the content.
Diagram parse_link(const std::string& text);

/// Circles of a total resolution.
struct ResolutionState {
  std::uint64_t eps = 0;                 ///< bit k = smoothing of crossing k
  std::vector<std::vector<int>> circles; ///< arcs per circle, sorted by minimal arc
  std::vector<int> arc_circle;           ///< circle index of each arc
  int circle_count() const { return static_cast<int>(circles.size()); }
};

/// Bit-vector helpers: eps as a vector of 0/1 in crossing order.
std::uint64_t eps_from_bits(const std::vector<int>& bits);

ResolutionState resolve_all(const Diagram& d, std::uint64_t eps);
ResolutionState resolve_all(const Diagram& d, const std::vector<int>& bits);

/// Number of circles only (fast path used by state sums).
int circle_count(const Diagram& d, std::uint64_t eps);

enum class EdgeKind { Merge, Split };

struct EdgeEvent {
  std::uint64_t source = 0;
  std::uint64_t target = 0;
  std::size_t changed = 0;
  EdgeKind kind = EdgeKind::Merge;
  /// Merge: inputs {a, b} (source circles) and output {c} (target circle).
  /// Split: input {a} and outputs {b, c}.
  std::vector<int> inputs;
  std::vector<int> outputs;
  /// Source circle -> target circle for circles not touched by the change;
  /// -1 for the circles involved.
  std::vector<int> correspondence;
  int sign_exponent = 0;  ///< number of 1-bits before the changed position
};

EdgeEvent edge_event(const Diagram& d, std::uint64_t eps, std::size_t changed);
EdgeEvent edge_event(const Diagram& d, const std::vector<int>& bits, std::size_t changed);

/// Diagram with crossing `c` replaced by its `bit`-smoothing.
Diagram resolve_crossing(const Diagram& d, std::size_t c, int bit);

/// Swaps over and under strands at every crossing.
Diagram mirror(const Diagram& d);

/// Number of link components (closed strands of the oriented diagram).
int component_count(const Diagram& d);

}  // namespace linkhom

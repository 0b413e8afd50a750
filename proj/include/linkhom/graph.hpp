#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkhom/complex.hpp"
#include "linkhom/laurent.hpp"
#include "linkhom/rational.hpp"

namespace linkhom {

/// Multigraph on vertices 1..N; loops and parallel edges allowed. The order
/// of `edges` is part of the value.
struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  std::size_t size() const { return edges.size(); }
  bool operator==(const Multigraph&) const = default;
  /// Text in the "v N" / "e u v" format.
  std::string to_text() const;
};

/// Parses "v N" followed by "e u v" lines. Blank lines and '#' comments are
/// skipped; '/' also separates lines. InvalidInput on malformed text.
Multigraph parse_graph(const std::string& text);
/// Throws InvalidInput if an endpoint is outside 1..N.
void validate(const Multigraph& g);

Multigraph cycle_graph(int k);
Multigraph discrete_graph(int k);
/// Vertex v becomes perm[v-1] (1-based images) and the edges are reordered
/// by `order` (edge k of the result is edge order[k] of g).
Multigraph relabeled(const Multigraph& g, const std::vector<int>& perm, const std::vector<std::size_t>& order);

/// Spanning subgraph [G : s] for the edge subset `mask`: comp[v] is the
/// index of the component of vertex v (0-based), components numbered in
/// increasing order of their smallest vertex.
struct GraphState {
  std::vector<int> comp;
  int components = 0;
};
GraphState graph_state(const Multigraph& g, std::uint64_t mask);

/// Dichromatic polynomial in (q, v) by the state sum over edge subsets.
LaurentPoly dichromatic(const Multigraph& g);
/// The same polynomial by deletion and contraction with memoization.
LaurentPoly dichromatic_recursive(const Multigraph& g);

/// Tutte polynomial in (x, y) from the dichromatic state sum.
LaurentPoly tutte(const Multigraph& g);
/// Tutte polynomial by the bridge/loop recursion.
LaurentPoly tutte_recursive(const Multigraph& g);

/// P_G(q^n, 1 + q + ... + q^n).
LaurentPoly specialize_Pn(const Multigraph& g, int n);

/// Coefficients of q^j, lo <= j <= hi, in the expansion of P_G(q, q^n/(q-1))
/// in powers of q^-1. Requires n <= 2 and lo <= hi.
LaurentPoly specialize_Qn(const Multigraph& g, int n, int lo, int hi);
/// J_G = Q_{G,2} on the window.
LaurentPoly jones_graph_series(const Multigraph& g, int lo, int hi);
/// P_G(q, q^2/(q-1)) as an exact rational function of q.
RationalFn jones_graph(const Multigraph& g);

/// (1 + t^-1 q)^m P_G(q, (1 + t^-1 q)/(1 - q)) in (q, t).
RationalFn dichromatic_DG(const Multigraph& g);
/// Inverse substitution t = q/(v(1-q) - 1) divided by (v(1-q))^m.
RationalFn dichromatic_from_DG(const RationalFn& dg, std::size_t edges);

/// Closed-form homology of the k-cycle for the P_n complex with the
/// zero-map variant. Requires k >= 3 and n >= 1.
HomologyTable polygon_reference(int k, int n);

}  // namespace linkhom

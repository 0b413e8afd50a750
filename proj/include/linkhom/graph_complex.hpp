#pragma once

#include "linkhom/complex.hpp"
#include "linkhom/graph.hpp"

namespace linkhom {

/// What an edge joining a component to itself does in the P_n complex:
/// nothing, or 1 -> X^n with every other label sent to zero.
enum class PnVariant { ZeroMap, XPower };

PnVariant parse_pn_variant(const std::string& name);  ///< "zero" or "xn"

/// Cube complex with V = Z[X]/(X^{n+1}) on each component of [G : eps];
/// X^e has degree n - e and the state eps is shifted by n|eps|.
GradedComplex build_Pn_complex(const Multigraph& g, int n, PnVariant variant = PnVariant::ZeroMap);
HomologyTable Pn_homology(const Multigraph& g, int n, PnVariant variant = PnVariant::ZeroMap,
                          const HomologyOptions& opts = {});

/// Complex with M_eps = Z[x_c : components c]{l(n-1) + |eps|} restricted to
/// internal degrees lo..hi. A merge sends x_q to x_p and multiplies by
/// x_p^{2-n}; an edge inside a component multiplies by x_p. Requires n <= 2.
GradedComplex build_Qn_complex(const Multigraph& g, int n, int lo, int hi);
HomologyTable Qn_homology(const Multigraph& g, int n, int lo, int hi, const HomologyOptions& opts = {});

/// Enhanced states (s, l) with j = |s| + k(s) - |l| for a single j.
GradedComplex build_enhanced_complex(const Multigraph& g, int j);
HomologyTable enhanced_homology(const Multigraph& g, int lo, int hi, const HomologyOptions& opts = {});

}  // namespace linkhom

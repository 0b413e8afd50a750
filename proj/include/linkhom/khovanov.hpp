#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linkhom/complex.hpp"
#include "linkhom/diagram.hpp"
#include "linkhom/laurent.hpp"

namespace linkhom {

/// Kauffman bracket: sum over states of (-1)^|e| q^|e| (q + q^-1)^c(e).
LaurentPoly kauffman_bracket(const Diagram& d);
/// (-1)^n_- q^(n_+ - 2n_-) times the bracket.
LaurentPoly jones_unnormalized(const Diagram& d);
/// Unnormalized Jones divided by q + q^-1 (value 1 on the unknot).
LaurentPoly jones_normalized(const Diagram& d);

/// True iff q^-2 J(L+) - q^2 J(L-) = (q^-1 - q) J(L0) for unnormalized J.
/// InvalidInput unless L+ and L- have equal size, L0 has one crossing fewer
/// and L+ has exactly one more positive crossing than L-.
bool jones_skein_check(const Diagram& plus, const Diagram& minus, const Diagram& zero);

/// Rank of a labeling among the labelings of c circles with the same number
/// of X labels, ordered lexicographically with 1 < X (bit t = circle t is X).
std::size_t labeling_rank(std::uint64_t mask, int circles);

/// The unnormalized cube complex of a diagram, generated level by level.
/// Generators of C^{i,j} are (eps, labeling) with |eps| = i and
/// j = #1 - #X + i; states are taken in increasing order of eps.
class KhovanovCube : public ChainSource {
 public:
  explicit KhovanovCube(Diagram d);

  int min_degree() const override { return 0; }
  int max_degree() const override { return static_cast<int>(diagram_.size()); }
  ChainLevel level(int i, const JWindow& window) const override;

  /// Image of one generator under the edge map for the given crossing,
  /// including the sign; pairs of (target labeling, coefficient).
  std::vector<std::pair<std::uint64_t, int>> apply_edge(
      std::uint64_t eps, std::size_t changed, std::uint64_t mask) const;

  const Diagram& diagram() const { return diagram_; }

 private:
  Diagram diagram_;
};

/// Materialized complex; with `normalized` the shifts [-n_-]{n_+ - 2n_-}
/// are recorded on the result.
GradedComplex khovanov_complex(const Diagram& d, const JWindow& window = std::nullopt,
                               bool normalized = false);

/// Homology of the cube complex without the normalization shift.
HomologyTable khovanov_homology_unnormalized(const Diagram& d, const HomologyOptions& opts = {});
/// Normalized homology H^{i,j}(L) = H^{i+n_-, j-n_++2n_-}(D). The window and
/// i_max in the options refer to normalized degrees.
HomologyTable khovanov_homology(const Diagram& d, const HomologyOptions& opts = {});

struct WidthReport {
  std::set<int> diagonals;  ///< occupied values of j - 2i
  int a_min = 0;
  int a_max = 0;
  int width = 0;            ///< (a_max - a_min)/2 + 1
  bool thin = false;
  nlohmann::json to_json() const;
};

/// Diagonal occupancy of a table; InvalidInput for an empty table.
WidthReport width_report(const HomologyTable& t);

struct LesReport {
  std::size_t crossing = 0;
  bool bracket_ok = false;
  std::vector<std::pair<int, int>> rank_violations;
  bool cone_ok = false;
  std::string cone_detail;
  bool ok() const { return bracket_ok && rank_violations.empty() && cone_ok; }
  nlohmann::json to_json() const;
};

/// Long exact sequence checks for the resolutions of crossing c:
/// bracket additivity, rank H^{i,j}(D) <= rank H^{i,j}(D_0) + rank H^{i-1,j-1}(D_1),
/// and that the two faces of the cube are the cubes of D_0 and D_1.
LesReport les_check(const Diagram& d, std::size_t c);

/// Closure of (s_1 s_2 ... s_{p-1})^q.
Diagram torus_diagram(int p, int q);

struct StabilityItem {
  std::string relation;   ///< "drop-twist", "chain" or "square"
  std::string lhs, rhs;
  int i_bound = 0;        ///< compared for i < i_bound
  int j_offset = 0;       ///< rhs is read at j + j_offset
  bool pass = false;
  std::vector<std::pair<int, int>> mismatches;
};

struct StabilityReport {
  std::vector<StabilityItem> items;
  bool pass() const;
  nlohmann::json to_json() const;
};

/// Stability of the unnormalized homology of D_{p,q}: consecutive q for
/// i < p+q-3, the chain over all q > p for i < 2p-1, and D_{p,p} against
/// D_{p-1,p} (j shifted by one) for i < 2p-3. `i_cap` further limits i.
StabilityReport stability_check(int p, const std::vector<int>& q_values,
                                std::optional<int> i_cap = std::nullopt,
                                bool include_square = true);

struct StablePoincare {
  int m = 0;
  std::vector<int> n_values;
  std::vector<LaurentPoly> polys;   ///< q^{-(m-1)n} P(T_{m,n})(t, q)
  /// For consecutive n: whether all t-powers below m+n-3 agree.
  std::vector<bool> agree;
  nlohmann::json to_json() const;
};

/// Normalized Poincare polynomials of T_{m,n}; polynomials are truncated at
/// t-power `i_max` when given. DomainError for m < 2.
StablePoincare stable_poincare(int m, const std::vector<int>& n_values,
                               std::optional<int> i_max = std::nullopt);

}  // namespace linkhom

#pragma once

// Closed-form statistics: delta statistics, the E6 string-length formulas on
// general elements, and the parameterization of minimal elements with their
// phi / epsilon / weight formulas.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kr/pbw_element.hpp"
#include "kr/root_data.hpp"

namespace kr {

/// delta_l = c_k - c_l for every adjacent "+ at k, - at l" factor of a sigma
/// table, sorted by l.  Throws FormulaMismatch if two tables disagree on l.
std::vector<DeltaIndex> derive_delta_indices(const CaseTables& tables);

/// Delta statistics of one element, keyed by l.
class DeltaValues {
 public:
  DeltaValues(const std::vector<DeltaIndex>& indices, const PbwElement& c);
  int operator()(Position l) const { return values_.at(l); }

 private:
  std::map<Position, int> values_;
};

/// phi_0..phi_6 of an element of B^{r,s}, E6 r = 1 or 6, from the
/// closed forms in the delta statistics.  For r = 6 the r = 1 formulas are
/// transported by the diagram automorphism.
AffineWeight e6_phi_closed_form(AlgebraCase algebra, const PbwElement& c, int level);

/// phi_1 = s - s0 + 2 delta_7 + delta_8 + delta_9 + delta_10 + delta_11 (E6 r=1 indexing).
int e6_phi1_delta_form(const PbwElement& c, int level);

/// The expansion of <c^vee, phi(c)> in the delta statistics (E6).
int e6_level_expansion(AlgebraCase algebra, const PbwElement& c, int level);

/// Parameters (a, b, c, ...) of a minimal element: six for E6, seven for E7.
struct MinimalParams {
  std::vector<int> values;

  /// a + 2b + 3c + ... with the weights of minimal_level_weights.
  int s0(Family family) const;
  friend bool operator==(const MinimalParams&, const MinimalParams&) = default;
  friend auto operator<=>(const MinimalParams&, const MinimalParams&) = default;
};

/// Every parameter tuple with s0 <= level, in lexicographic order.
std::vector<MinimalParams> minimal_parameterizations(Family family, int level);
/// The exponent vector with each parameter spread over its position group.
PbwElement minimal_element(AlgebraCase algebra, const MinimalParams& params);
/// Parameters read off positions 1..rank; empty if c is not of minimal shape.
std::optional<MinimalParams> minimal_params_of(AlgebraCase algebra, const PbwElement& c);

AffineWeight minimal_phi_closed_form(AlgebraCase algebra, const MinimalParams& params, int level);
AffineWeight minimal_eps_closed_form(AlgebraCase algebra, const MinimalParams& params, int level);
/// The classical part (Lambda_1..Lambda_6) of wt(c) for an E6 r=1 minimal
/// element, as displayed; the Lambda_0 slot is left at 0.
AffineWeight e6_minimal_classical_weight(const MinimalParams& params);

/// (minus, plus) positions of the reduced signature of a minimal element, per node of J0.
std::map<Node, std::pair<Position, Position>> minimal_signature_shapes(AlgebraCase algebra);

}  // namespace kr

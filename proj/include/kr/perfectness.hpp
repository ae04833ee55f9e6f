#pragma once

// Verification of the perfect crystal axioms (P2)-(P5) for one (case, level).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kr/closed_forms.hpp"
#include "kr/kr_crystal.hpp"

namespace kr {

/// Dominant lambda in P_cl with <c^vee, lambda> = level, sorted.
std::vector<AffineWeight> level_s_dominant_weights(Family family, int level);

/// Indices of the elements with <c^vee, eps(b)> = s.  Throws MinimalMismatch
/// unless they are exactly the parameterized minimal elements.
std::vector<int> minimal_elements(const EnumeratedCrystal& crystal);

struct EpsPhiMaps {
  std::vector<int> elements;  // indices into the crystal
  std::vector<AffineWeight> eps;
  std::vector<AffineWeight> phi;
};

/// eps and phi on the given minimal elements by operator counting.  Throws
/// FormulaMismatch when they disagree with the closed forms, or when a minimal
/// element's reduced signatures do not have the expected shape.
EpsPhiMaps eps_phi_maps(const EnumeratedCrystal& crystal, const std::vector<int>& minimals);

enum Check : unsigned {
  kCheckP2 = 1u << 0,
  kCheckP3 = 1u << 1,
  kCheckP4 = 1u << 2,
  kCheckP5 = 1u << 3,
  kCheckAll = kCheckP2 | kCheckP3 | kCheckP4 | kCheckP5,
};

/// Parses "p2,p3,p4,p5" (any subset, case-insensitive).  Throws Error on an unknown name.
unsigned parse_checks(const std::string& text);

struct VerifyOptions {
  std::size_t budget = kDefaultBudget;
  unsigned checks = kCheckAll;
};

struct BijectionReport {
  bool bijective = false;
  std::vector<AffineWeight> missing;     // level-s weights not hit
  std::vector<AffineWeight> duplicated;  // weights hit more than once
};

struct PerfectnessReport {
  AlgebraCase algebra;
  int level = 1;
  int crystal_size = 0;
  unsigned checks = kCheckAll;
  std::string p1 = "assumed";
  std::string delta_source;  // "transcribed" or "derived"

  bool p2_connected = false;
  std::size_t p2_product_size = 0;
  int p2_components = 0;

  bool p3_unique = false;
  int p3_multiplicity = 0;

  int p4_min_level = 0;
  int p4_min_phi_level = 0;

  int minimal_count = 0;
  int dominant_weight_count = 0;
  BijectionReport p5_eps;
  BijectionReport p5_phi;

  bool checked(Check c) const { return (checks & c) != 0; }
  /// Conjunction over the checks that were run.
  bool perfect() const;
};

/// Throws ScaleExceeded when the crystal or, with (P2), its tensor square
/// exceeds the budget.
PerfectnessReport verify_perfect(AlgebraCase algebra, int level, const VerifyOptions& options = {});

}  // namespace kr

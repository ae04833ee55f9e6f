#pragma once

// Level functionals ||c||_l attached to the trail masks.

#include <vector>

#include "kr/pbw_element.hpp"
#include "kr/root_data.hpp"

namespace kr {

class TrailFunctionals {
 public:
  explicit TrailFunctionals(const CaseTables& tables);

  int count() const { return static_cast<int>(support_.size()); }
  /// Positions with coefficient 1 in ||c||_l, i.e. the complement of mask l (0-based l).
  const std::vector<Position>& support(int l) const { return support_[l]; }
  int value(const PbwElement& c, int l) const;
  /// max_l ||c||_l.
  int epsilon_r_star(const PbwElement& c) const;

 private:
  std::vector<std::vector<Position>> support_;
};

int epsilon_r_star(const CaseTables& tables, const PbwElement& c);

}  // namespace kr

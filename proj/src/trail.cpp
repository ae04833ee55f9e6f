#include "kr/trail.hpp"

#include <algorithm>

namespace kr {

TrailFunctionals::TrailFunctionals(const CaseTables& tables) {
  for (const TrailMask& mask : tables.masks) {
    std::vector<Position> support;
    for (Position p = 1; p <= tables.size(); ++p)
      if (!mask.contains(p)) support.push_back(p);
    support_.push_back(std::move(support));
  }
}

int TrailFunctionals::value(const PbwElement& c, int l) const {
  int acc = 0;
  for (Position p : support_[l]) acc += c.at(p);
  return acc;
}

int TrailFunctionals::epsilon_r_star(const PbwElement& c) const {
  int best = 0;
  for (int l = 0; l < count(); ++l) best = std::max(best, value(c, l));
  return best;
}

int epsilon_r_star(const CaseTables& tables, const PbwElement& c) {
  return TrailFunctionals(tables).epsilon_r_star(c);
}

}  // namespace kr

#pragma once

// Reference crystals built from weights alone: the minuscule crystal B(Lambda_r)
// and the highest component of its tensor powers, plus an isomorphism test.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kr/crystal_graph.hpp"
#include "kr/root_data.hpp"

namespace kr {

/// Weights of the Weyl orbit of Lambda-bar_r with f_i mu = mu - alpha_i iff
/// <alpha_i^vee, mu> = 1.  Element 0 is the highest weight element; weights
/// are stored over Lambda_1..Lambda_n with the Lambda_0 slot at 0.
CrystalGraph minuscule_crystal(AlgebraCase algebra);

/// Component of hw (x) ... (x) hw (s factors) in the s-fold tensor power;
/// element 0 is the highest weight element.
CrystalGraph highest_component(const CrystalGraph& minuscule, int level,
                               std::size_t budget = 10'000'000);

struct Divergence {
  int element;  // index in the first graph
  Node label;
  std::string reason;
};

struct IsomorphismResult {
  std::vector<int> bijection;  // first graph index -> second graph index
  std::optional<Divergence> divergence;

  bool isomorphic() const { return !divergence; }
};

/// Simultaneous traversal from the unique sources over `labels`.  Throws
/// NoUniqueSource if either graph has zero or several sources.
IsomorphismResult crystal_isomorphic(const CrystalGraph& a, const CrystalGraph& b,
                                     const std::vector<Node>& labels);

}  // namespace kr

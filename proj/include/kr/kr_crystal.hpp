#pragma once

// The KR crystal B^{r,s}, realized as the level set epsilon_r^* <= s of
// B^{J0} with the affine operators f_0 = -1_theta and e_0 = +1_theta.

#include <cstddef>
#include <optional>
#include <vector>

#include "kr/crystal_graph.hpp"
#include "kr/pbw_crystal.hpp"

namespace kr {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

struct KrElement {
  PbwElement c;
  int level = 1;

  friend bool operator==(const KrElement&, const KrElement&) = default;
  friend auto operator<=>(const KrElement&, const KrElement&) = default;
};

class KrCrystal {
 public:
  /// Throws InvalidCase for an unsupported case or a level below 1.
  KrCrystal(AlgebraCase algebra, int level);

  const PbwCrystal& classical() const { return pbw_; }
  const CaseTables& tables() const { return pbw_.tables(); }
  const CartanData& cartan() const { return pbw_.cartan(); }
  AlgebraCase algebra() const { return pbw_.algebra(); }
  int level() const { return level_; }
  int rank() const { return pbw_.rank(); }

  /// (0, s), the element of weight s(Lambda_r - Lambda_0).
  KrElement highest() const { return {pbw_.zero(), level_}; }
  bool contains(const PbwElement& c) const;
  KrElement element(const PbwElement& c) const;  // throws Error if outside the level set

  /// i in 0..n.  Throws LevelMismatch if b carries another level.
  std::optional<KrElement> f(const KrElement& b, Node i) const;
  std::optional<KrElement> e(const KrElement& b, Node i) const;

  /// String lengths by repeated application of f_i / e_i.
  int phi(const KrElement& b, Node i) const;
  int eps(const KrElement& b, Node i) const;
  AffineWeight phi_vector(const KrElement& b) const;
  AffineWeight eps_vector(const KrElement& b) const;

  /// wt(c) + s(Lambda_r - Lambda_0); the Lambda_0 coefficient makes the level 0.
  AffineWeight affine_weight(const KrElement& b) const;

 private:
  void check(const KrElement& b) const;

  PbwCrystal pbw_;
  int level_;
};

/// All elements of one crystal, lexicographically sorted, with the graph of
/// f-arrows over I (element k of the graph is elements[k]).
struct EnumeratedCrystal {
  AlgebraCase algebra;
  int level = 1;
  std::vector<PbwElement> elements;
  CrystalGraph graph;

  /// Builds the graph from an explicit element list.  Throws LevelMismatch if
  /// the elements carry different levels, Error if the list is not closed.
  static EnumeratedCrystal from_elements(const KrCrystal& crystal, std::vector<KrElement> elements);

  int size() const { return static_cast<int>(elements.size()); }
  /// Index of c, or -1.
  int index_of(const PbwElement& c) const;
};

/// BFS closure of (0, s) under every f_i and e_i, i in I.  Throws
/// ScaleExceeded beyond `budget` elements.
EnumeratedCrystal enumerate_crystal(AlgebraCase algebra, int level,
                                    std::size_t budget = kDefaultBudget);

/// Every c with epsilon_r^*(c) <= s, by depth-first search over coordinates
/// with pruning on the partial trail functionals.  Sorted lexicographically.
std::vector<PbwElement> grid_scan(AlgebraCase algebra, int level,
                                  std::size_t budget = kDefaultBudget);

}  // namespace kr

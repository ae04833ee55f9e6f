#pragma once

// Root systems, Dynkin data and the embedded combinatorial tables for the
// minuscule Kirillov-Reshetikhin cases E6(1) r=1,6 and E7(1) r=7.
//
// Conventions:
//   * Dynkin nodes are numbered as in Kac: E6 chain 1-3-4-5-6 with 2 on 4 and
//     the affine node 0 on 2; E7 chain 1-3-4-5-6-7 with 2 on 4 and 0 on 1.
//   * A Position is a 1-based index into a convex-ordered root list.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kr {

using Node = int;
using Position = int;

enum class Family { E6, E7 };

std::string_view family_name(Family family);
Family parse_family(std::string_view text);  // throws InvalidCase

int family_rank(Family family);

struct AlgebraCase {
  Family family = Family::E6;
  Node node = 1;

  /// Throws InvalidCase unless (family, node) is (E6,1), (E6,6) or (E7,7).
  static AlgebraCase make(Family family, Node node);
  static std::vector<AlgebraCase> all();

  int rank() const { return family_rank(family); }
  std::string name() const;  // e.g. "E6 r=1"

  friend bool operator==(const AlgebraCase&, const AlgebraCase&) = default;
};

/// Integer vector over the simple roots alpha_1..alpha_n.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  /// Parses the compact digit notation, e.g. "122321".
  static Root parse(std::string_view digits);
  static Root simple(int rank, Node i);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  int at(Node i) const { return coeffs_[i - 1]; }
  std::span<const int> coeffs() const { return coeffs_; }

  bool is_positive() const;
  bool is_zero() const;
  int height() const;
  std::string str() const;

  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;
  Root operator-() const;
  Root scaled(int k) const;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  std::vector<int> coeffs_;
};

/// Coefficients over the finite fundamental weights Lambda-bar_1..Lambda-bar_n.
struct ClassicalWeight {
  std::vector<int> coeffs;

  int at(Node i) const { return coeffs[i - 1]; }
  int& at(Node i) { return coeffs[i - 1]; }
  friend bool operator==(const ClassicalWeight&, const ClassicalWeight&) = default;
  friend auto operator<=>(const ClassicalWeight&, const ClassicalWeight&) = default;
};

/// Coefficients over Lambda_0..Lambda_n, an element of P_cl.
struct AffineWeight {
  std::vector<int> coeffs;

  int operator[](Node i) const { return coeffs[i]; }
  int& operator[](Node i) { return coeffs[i]; }
  int rank() const { return static_cast<int>(coeffs.size()) - 1; }

  AffineWeight operator+(const AffineWeight& other) const;
  AffineWeight operator-(const AffineWeight& other) const;
  std::string str() const;  // e.g. "2L0 - L1 + L6"

  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
  friend auto operator<=>(const AffineWeight&, const AffineWeight&) = default;
};

/// Cartan matrix, Kac labels and positive roots of E6/E7 and their affinization.
class CartanData {
 public:
  static const CartanData& of(Family family);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// Entry of the affine Cartan matrix, i and j in 0..n.
  int entry(Node i, Node j) const { return affine_[i][j]; }
  bool adjacent(Node i, Node j) const { return i != j && affine_[i][j] != 0; }
  int kac_label(Node i) const { return kac_[i]; }
  Node affine_attachment() const { return attachment_; }
  const Root& theta() const { return theta_; }
  Root simple_root(Node i) const { return Root::simple(rank_, i); }
  /// alpha_i as an element of P_cl, i in 0..n (column i of the affine Cartan matrix).
  AffineWeight affine_simple_root(Node i) const;

  /// <alpha_i^vee, beta> for i in 0..n; i = 0 uses the affine row (alpha_0 = -theta).
  int pairing(Node i, const Root& beta) const;
  /// Symmetric form (beta | gamma); simply laced, so it is beta^T A gamma.
  int form(const Root& beta, const Root& gamma) const;
  /// s_i(beta) = beta - <alpha_i^vee, beta> alpha_i.
  Root reflect(Node i, const Root& beta) const;
  /// Fundamental-weight coordinates of a root-lattice vector.
  ClassicalWeight to_weight(const Root& beta) const;
  /// Inverse of to_weight; empty when the weight is not in the root lattice.
  std::optional<Root> to_root_coordinates(const ClassicalWeight& weight) const;
  /// Affine weight of a finite root-lattice vector (level 0, Lambda_0 fixed by the affine row).
  AffineWeight to_affine(const Root& beta) const;
  /// <c^vee, lambda> = sum_i a_i^vee lambda_i.
  int level(const AffineWeight& weight) const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  bool is_positive_root(const Root& beta) const;

 private:
  explicit CartanData(Family family);

  Family family_;
  int rank_;
  std::vector<std::vector<int>> affine_;
  std::vector<int> kac_;
  Node attachment_;
  Root theta_;
  std::vector<Root> positive_;
  std::vector<std::vector<long>> adjugate_;  // det(A) * A^{-1} of the finite block
  long determinant_;
};

struct SigmaPair {
  Position minus;  // gamma' = gamma + alpha_i
  Position plus;   // gamma

  friend bool operator==(const SigmaPair&, const SigmaPair&) = default;
  friend auto operator<=>(const SigmaPair&, const SigmaPair&) = default;
};

using SigmaTable = std::map<Node, std::vector<SigmaPair>>;

/// Number of E7 masks in the published list; the embedded table appends two more.
inline constexpr std::size_t kE7PublishedMaskCount = 76;

struct TrailMask {
  std::vector<Position> positions;  // sorted

  bool contains(Position p) const;
};

struct ReferenceEdge {
  int src;  // box numbers, 1-based
  int dst;
  Node label;

  friend bool operator==(const ReferenceEdge&, const ReferenceEdge&) = default;
  friend auto operator<=>(const ReferenceEdge&, const ReferenceEdge&) = default;
};

/// Printed s=1 crystal graph: boxes are position-sets of the 0/1 exponent vectors.
struct ReferenceGraph {
  std::vector<std::vector<Position>> boxes;
  std::vector<ReferenceEdge> classical_edges;
  std::vector<ReferenceEdge> zero_edges;
};

/// delta_l = c_k - c_l, stored as (l, k).
struct DeltaIndex {
  Position l;
  Position k;

  friend bool operator==(const DeltaIndex&, const DeltaIndex&) = default;
  friend auto operator<=>(const DeltaIndex&, const DeltaIndex&) = default;
};

struct CaseTables {
  AlgebraCase algebra;
  std::vector<Node> word_head;  // reduced word of the minimal coset representative
  std::vector<Node> word_tail;  // reduced word of the longest element of W_{J0*}
  std::vector<Root> roots;      // convex-ordered Phi+(J0)
  SigmaTable sigma;
  std::vector<TrailMask> masks;
  std::optional<ReferenceGraph> reference;  // printed for E6 r=1 and E7 only

  std::vector<Node> full_word() const;
  int size() const { return static_cast<int>(roots.size()); }
  /// Position of theta (always the last one).
  Position theta_position() const { return size(); }
  /// Nodes of J0 = I0 \ {r}.
  std::vector<Node> j0_nodes() const;
  const CartanData& cartan() const { return CartanData::of(algebra.family); }
};

/// Tables for one case, validated against every structural invariant on
/// first access.  Throws TableCorrupt if the embedded data is inconsistent.
const CaseTables& validated_tables(AlgebraCase algebra);

/// Runs the invariant checks on an arbitrary table set; throws TableCorrupt.
void validate_tables(const CaseTables& tables);

/// Checks ordering of a root list against every root-sum triple.  Returns the
/// first violation as a human readable string, or empty.
std::string convexity_violation(const CartanData& cartan, std::span<const Root> order);

// Printed auxiliary data used by cross-checks.

/// The twelve E6 linear forms x_l, as the sets of positions with coefficient 1.
const std::vector<std::vector<Position>>& e6_printed_xl_forms();
/// delta index pairs as printed for E6 r=1 and E7.
const std::vector<DeltaIndex>& printed_delta_indices(Family family);
/// Position groups forced equal on minimal elements, one group per parameter
/// (E6: a..f, E7: a..g), as printed.
const std::vector<std::vector<Position>>& minimal_parameter_groups(Family family);
/// Coefficients of the parameters in s0.
const std::vector<int>& minimal_level_weights(Family family);

/// E6 diagram automorphism 1<->6, 3<->5 (identity on E7 and on node 0).
Node diagram_automorphism(Family family, Node i);

}  // namespace kr

#pragma once

// Finite crystals stored as explicit graphs, and tensor products of them.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "kr/root_data.hpp"

namespace kr {

struct Edge {
  int src;
  int dst;
  Node label;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Elements are 0..size-1.  Arrows b -> f_i b are stored for every active
/// label; weights live in P_cl with coefficients over Lambda_0..Lambda_n
/// (classical crystals leave the Lambda_0 coefficient at 0).
class CrystalGraph {
 public:
  static constexpr int kNull = -1;

  CrystalGraph() = default;
  CrystalGraph(int rank, std::vector<Node> labels, int size);

  int rank() const { return rank_; }
  int size() const { return size_; }
  const std::vector<Node>& labels() const { return labels_; }
  bool has_label(Node i) const;

  /// Records f_i(src) = dst.  Throws Error if either end already has an i-arrow.
  void add_arrow(Node i, int src, int dst);
  void set_weight(int v, AffineWeight weight) { weights_[v] = std::move(weight); }

  int f(Node i, int v) const { return f_[i][v]; }
  int e(Node i, int v) const { return e_[i][v]; }
  const AffineWeight& weight(int v) const { return weights_[v]; }

  /// String lengths; valid after finalize().
  int phi(int v, Node i) const { return phi_[i][v]; }
  int eps(int v, Node i) const { return eps_[i][v]; }
  AffineWeight phi_vector(int v) const;
  AffineWeight eps_vector(int v) const;

  /// Computes string lengths.  Throws Error if some i-string is a cycle.
  void finalize();

  /// All arrows, sorted by (src, dst, label).
  std::vector<Edge> edges() const;
  /// Elements with e_i = null for every active label in `over` (all labels if empty).
  std::vector<int> sources(const std::vector<Node>& over = {}) const;

 private:
  int rank_ = 0;
  int size_ = 0;
  std::vector<Node> labels_;
  std::vector<std::vector<int>> f_;  // indexed [label][element], labels 0..rank
  std::vector<std::vector<int>> e_;
  std::vector<std::vector<int>> phi_;
  std::vector<std::vector<int>> eps_;
  std::vector<AffineWeight> weights_;
};

/// b2 (x) b1 as a pair of element indices of the left and right factor.
struct TensorPair {
  int left;
  int right;

  friend bool operator==(const TensorPair&, const TensorPair&) = default;
  friend auto operator<=>(const TensorPair&, const TensorPair&) = default;
};

/// B2 (x) B1 on the Cartesian product B2 x B1: f_i acts on the left factor iff
/// eps_i(b2) >= phi_i(b1), e_i acts on the left factor iff eps_i(b2) > phi_i(b1).
class TensorProduct {
 public:
  /// Both factors must be finalized and share rank and labels.
  TensorProduct(const CrystalGraph& left, const CrystalGraph& right);

  const CrystalGraph& left() const { return *left_; }
  const CrystalGraph& right() const { return *right_; }
  std::size_t size() const;

  std::optional<TensorPair> f(TensorPair b, Node i) const;
  std::optional<TensorPair> e(TensorPair b, Node i) const;
  int phi(TensorPair b, Node i) const;
  int eps(TensorPair b, Node i) const;
  AffineWeight weight(TensorPair b) const;

  /// Connected component of `seed`, materialized as a graph in BFS order.
  /// Throws ScaleExceeded when it would exceed `budget` elements.
  CrystalGraph component(TensorPair seed, std::size_t budget,
                         std::vector<TensorPair>* members = nullptr) const;

 private:
  const CrystalGraph* left_;
  const CrystalGraph* right_;
};

}  // namespace kr

#include "kr/crystal_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "kr/errors.hpp"

namespace kr {

CrystalGraph::CrystalGraph(int rank, std::vector<Node> labels, int size)
    : rank_(rank), size_(size), labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  for (Node i : labels_)
    if (i < 0 || i > rank_) throw Error("crystal label " + std::to_string(i) + " out of range");
  f_.assign(rank_ + 1, std::vector<int>(size_, kNull));
  e_.assign(rank_ + 1, std::vector<int>(size_, kNull));
  phi_.assign(rank_ + 1, std::vector<int>(size_, 0));
  eps_.assign(rank_ + 1, std::vector<int>(size_, 0));
  weights_.assign(size_, AffineWeight{std::vector<int>(rank_ + 1, 0)});
}

bool CrystalGraph::has_label(Node i) const {
  return std::binary_search(labels_.begin(), labels_.end(), i);
}

void CrystalGraph::add_arrow(Node i, int src, int dst) {
  if (!has_label(i)) throw Error("arrow label " + std::to_string(i) + " is not active");
  if (f_[i][src] != kNull && f_[i][src] != dst)
    throw Error("element " + std::to_string(src) + " has two " + std::to_string(i) + "-arrows out");
  if (e_[i][dst] != kNull && e_[i][dst] != src)
    throw Error("element " + std::to_string(dst) + " has two " + std::to_string(i) + "-arrows in");
  f_[i][src] = dst;
  e_[i][dst] = src;
}

AffineWeight CrystalGraph::phi_vector(int v) const {
  AffineWeight w{std::vector<int>(rank_ + 1, 0)};
  for (Node i : labels_) w[i] = phi_[i][v];
  return w;
}

AffineWeight CrystalGraph::eps_vector(int v) const {
  AffineWeight w{std::vector<int>(rank_ + 1, 0)};
  for (Node i : labels_) w[i] = eps_[i][v];
  return w;
}

void CrystalGraph::finalize() {
  for (Node i : labels_) {
    int visited = 0;
    std::vector<int> chain;
    for (int v = 0; v < size_; ++v) {
      if (e_[i][v] != kNull) continue;
      chain.clear();
      for (int x = v; x != kNull; x = f_[i][x]) chain.push_back(x);
      const int length = static_cast<int>(chain.size());
      for (int k = 0; k < length; ++k) {
        eps_[i][chain[k]] = k;
        phi_[i][chain[k]] = length - 1 - k;
      }
      visited += length;
    }
    if (visited != size_) throw Error(std::to_string(i) + "-strings are not finite chains");
  }
}

std::vector<Edge> CrystalGraph::edges() const {
  std::vector<Edge> out;
  for (Node i : labels_)
    for (int v = 0; v < size_; ++v)
      if (f_[i][v] != kNull) out.push_back({v, f_[i][v], i});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> CrystalGraph::sources(const std::vector<Node>& over) const {
  const std::vector<Node>& active = over.empty() ? labels_ : over;
  std::vector<int> out;
  for (int v = 0; v < size_; ++v) {
    bool source = std::all_of(active.begin(), active.end(),
                              [&](Node i) { return e_[i][v] == kNull; });
    if (source) out.push_back(v);
  }
  return out;
}

TensorProduct::TensorProduct(const CrystalGraph& left, const CrystalGraph& right)
    : left_(&left), right_(&right) {
  if (left.rank() != right.rank() || left.labels() != right.labels())
    throw Error("tensor factors have different index sets");
}

std::size_t TensorProduct::size() const {
  return static_cast<std::size_t>(left_->size()) * static_cast<std::size_t>(right_->size());
}

std::optional<TensorPair> TensorProduct::f(TensorPair b, Node i) const {
  if (left_->eps(b.left, i) >= right_->phi(b.right, i)) {
    int x = left_->f(i, b.left);
    if (x == CrystalGraph::kNull) return std::nullopt;
    return TensorPair{x, b.right};
  }
  int y = right_->f(i, b.right);
  if (y == CrystalGraph::kNull) return std::nullopt;
  return TensorPair{b.left, y};
}

std::optional<TensorPair> TensorProduct::e(TensorPair b, Node i) const {
  if (left_->eps(b.left, i) > right_->phi(b.right, i)) {
    int x = left_->e(i, b.left);
    if (x == CrystalGraph::kNull) return std::nullopt;
    return TensorPair{x, b.right};
  }
  int y = right_->e(i, b.right);
  if (y == CrystalGraph::kNull) return std::nullopt;
  return TensorPair{b.left, y};
}

int TensorProduct::eps(TensorPair b, Node i) const {
  int pairing = right_->phi(b.right, i) - right_->eps(b.right, i);
  return std::max(right_->eps(b.right, i), left_->eps(b.left, i) - pairing);
}

int TensorProduct::phi(TensorPair b, Node i) const {
  int pairing = left_->phi(b.left, i) - left_->eps(b.left, i);
  return std::max(left_->phi(b.left, i), right_->phi(b.right, i) + pairing);
}

AffineWeight TensorProduct::weight(TensorPair b) const {
  return left_->weight(b.left) + right_->weight(b.right);
}

CrystalGraph TensorProduct::component(TensorPair seed, std::size_t budget,
                                      std::vector<TensorPair>* members) const {
  const auto width = static_cast<std::uint64_t>(right_->size());
  auto key = [width](TensorPair b) {
    return static_cast<std::uint64_t>(b.left) * width + static_cast<std::uint64_t>(b.right);
  };
  std::vector<TensorPair> order{seed};
  std::unordered_map<std::uint64_t, int> index{{key(seed), 0}};
  auto visit = [&](std::optional<TensorPair> b) {
    if (!b || index.count(key(*b))) return;
    if (order.size() >= budget)
      throw ScaleExceeded("tensor component exceeds the budget of " + std::to_string(budget) +
                          " elements");
    index.emplace(key(*b), static_cast<int>(order.size()));
    order.push_back(*b);
  };
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Node i : left_->labels()) {
      visit(f(order[head], i));
      visit(e(order[head], i));
    }
  }
  CrystalGraph graph(left_->rank(), left_->labels(), static_cast<int>(order.size()));
  for (int v = 0; v < graph.size(); ++v) {
    graph.set_weight(v, weight(order[v]));
    for (Node i : left_->labels())
      if (auto b = f(order[v], i)) graph.add_arrow(i, v, index.at(key(*b)));
  }
  graph.finalize();
  if (members) *members = std::move(order);
  return graph;
}

}  // namespace kr

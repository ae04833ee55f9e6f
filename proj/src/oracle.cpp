#include "kr/oracle.hpp"

#include <deque>
#include <map>

#include "kr/errors.hpp"

namespace kr {

CrystalGraph minuscule_crystal(AlgebraCase algebra) {
  algebra = AlgebraCase::make(algebra.family, algebra.node);
  const CartanData& cartan = CartanData::of(algebra.family);
  const int n = cartan.rank();
  std::vector<Node> labels;
  for (Node i = 1; i <= n; ++i) labels.push_back(i);

  // mu - alpha_i in fundamental weight coordinates subtracts column i of A.
  auto lower = [&](const std::vector<int>& mu, Node i) {
    std::vector<int> out = mu;
    for (Node j = 1; j <= n; ++j) out[j - 1] -= cartan.entry(j, i);
    return out;
  };
  std::vector<int> highest(n, 0);
  highest[algebra.node - 1] = 1;
  std::vector<std::vector<int>> order{highest};
  std::map<std::vector<int>, int> index{{highest, 0}};
  std::vector<Edge> arrows;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Node i : labels) {
      if (order[head][i - 1] != 1) continue;
      std::vector<int> next = lower(order[head], i);
      auto [it, inserted] = index.emplace(next, static_cast<int>(order.size()));
      if (inserted) order.push_back(next);
      arrows.push_back({static_cast<int>(head), it->second, i});
    }
  }
  CrystalGraph graph(n, labels, static_cast<int>(order.size()));
  for (int v = 0; v < graph.size(); ++v) {
    AffineWeight w{std::vector<int>(n + 1, 0)};
    for (Node i = 1; i <= n; ++i) w[i] = order[v][i - 1];
    graph.set_weight(v, w);
  }
  for (const Edge& e : arrows) graph.add_arrow(e.label, e.src, e.dst);
  graph.finalize();
  return graph;
}

CrystalGraph highest_component(const CrystalGraph& minuscule, int level, std::size_t budget) {
  if (level < 1) throw InvalidCase("level must be at least 1");
  CrystalGraph current = minuscule;
  for (int k = 2; k <= level; ++k) {
    TensorProduct product(minuscule, current);
    current = product.component(TensorPair{0, 0}, budget);
  }
  return current;
}

IsomorphismResult crystal_isomorphic(const CrystalGraph& a, const CrystalGraph& b,
                                     const std::vector<Node>& labels) {
  std::vector<int> sa = a.sources(labels);
  std::vector<int> sb = b.sources(labels);
  if (sa.size() != 1 || sb.size() != 1)
    throw NoUniqueSource("source counts " + std::to_string(sa.size()) + " and " +
                         std::to_string(sb.size()) + " (expected one each)");

  IsomorphismResult result;
  result.bijection.assign(a.size(), -1);
  std::vector<int> inverse(b.size(), -1);
  auto fail = [&](int v, Node i, std::string reason) {
    result.divergence = Divergence{v, i, std::move(reason)};
    return result;
  };
  result.bijection[sa[0]] = sb[0];
  inverse[sb[0]] = sa[0];
  std::deque<int> queue{sa[0]};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int w = result.bijection[v];
    for (Node i : labels) {
      for (bool forward : {true, false}) {
        int x = forward ? a.f(i, v) : a.e(i, v);
        int y = forward ? b.f(i, w) : b.e(i, w);
        const char* op = forward ? "f" : "e";
        if ((x < 0) != (y < 0))
          return fail(v, i, std::string(op) + "_" + std::to_string(i) + " is defined on one side only");
        if (x < 0) continue;
        if (result.bijection[x] < 0 && inverse[y] < 0) {
          result.bijection[x] = y;
          inverse[y] = x;
          queue.push_back(x);
        } else if (result.bijection[x] != y || inverse[y] != x) {
          return fail(v, i, std::string(op) + "_" + std::to_string(i) + " leads to inconsistent images");
        }
      }
    }
  }
  for (int v = 0; v < a.size(); ++v)
    if (result.bijection[v] < 0) return fail(v, labels.front(), "element not reached from the source");
  for (int w = 0; w < b.size(); ++w)
    if (inverse[w] < 0) return fail(sa[0], labels.front(), "second graph has unmatched elements");
  return result;
}

}  // namespace kr

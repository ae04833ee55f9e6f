#include <doctest.h>

#include <algorithm>

#include "kr/crystal_graph.hpp"
#include "kr/errors.hpp"
#include "kr/oracle.hpp"

using namespace kr;

namespace {

const CrystalGraph& minuscule() {
  static const CrystalGraph graph = minuscule_crystal(AlgebraCase::make(Family::E6, 1));
  return graph;
}

}  // namespace

TEST_CASE("tensor rule at small elements") {
  const CrystalGraph& b = minuscule();
  TensorProduct product(b, b);
  const int hw = 0;
  const int low = b.f(1, hw);
  REQUIRE(low != CrystalGraph::kNull);
  // eps_1(hw) = 0 < phi_1(hw) = 1: f_1 acts on the right factor.
  CHECK(product.f({hw, hw}, 1) == TensorPair{hw, low});
  // eps_1(low) = 1 = phi_1(hw): f_1 acts on the left factor, where it is undefined.
  CHECK_FALSE(product.f({low, hw}, 1));
  // e_1 acts on the left factor only when eps_1(b2) > phi_1(b1).
  CHECK(product.e({low, low}, 1) == TensorPair{hw, low});
  CHECK(product.e({hw, low}, 1) == TensorPair{hw, hw});
}

TEST_CASE("tensor rule satisfies the crystal axioms") {
  const CrystalGraph& b = minuscule();
  TensorProduct product(b, b);
  for (int l = 0; l < b.size(); ++l) {
    for (int r = 0; r < b.size(); ++r) {
      TensorPair t{l, r};
      CHECK(product.weight(t) == b.weight(l) + b.weight(r));
      for (Node i : b.labels()) {
        CHECK(product.eps(t, i) == std::max(b.eps(r, i), b.eps(l, i) - b.weight(r)[i]));
        CHECK(product.phi(t, i) == std::max(b.phi(l, i), b.phi(r, i) + b.weight(l)[i]));
        CHECK(product.phi(t, i) - product.eps(t, i) == product.weight(t)[i]);
        if (auto x = product.f(t, i)) CHECK(product.e(*x, i) == t);
        if (auto x = product.e(t, i)) CHECK(product.f(*x, i) == t);
      }
    }
  }
}

TEST_CASE("components and budgets") {
  const CrystalGraph& b = minuscule();
  TensorProduct product(b, b);
  CHECK(product.size() == 729);
  std::vector<TensorPair> members;
  CrystalGraph top = product.component({0, 0}, 1000, &members);
  CHECK(top.size() == 351);
  CHECK(members.front() == TensorPair{0, 0});
  CHECK_THROWS_AS(product.component({0, 0}, 10), ScaleExceeded);
}

TEST_CASE("graph construction errors") {
  CrystalGraph g(1, {1}, 3);
  g.add_arrow(1, 0, 1);
  CHECK_THROWS_AS(g.add_arrow(1, 0, 2), Error);
  CHECK_THROWS_AS(g.add_arrow(1, 2, 1), Error);
  g.add_arrow(1, 1, 2);
  for (int v = 0; v < 3; ++v) g.set_weight(v, AffineWeight{{0, 2 - 2 * v}});
  g.finalize();
  CHECK(g.phi(0, 1) == 2);
  CHECK(g.eps(2, 1) == 2);
  CHECK(g.sources() == std::vector<int>{0});
  CHECK(g.edges() == std::vector<Edge>{{0, 1, 1}, {1, 2, 1}});

  CrystalGraph cycle(1, {1}, 2);
  cycle.add_arrow(1, 0, 1);
  cycle.add_arrow(1, 1, 0);
  CHECK_THROWS_AS(cycle.finalize(), Error);
}

#include <doctest.h>

#include <set>

#include "kr/errors.hpp"
#include "kr/graph_io.hpp"
#include "kr/kr_crystal.hpp"
#include "kr/oracle.hpp"

using namespace kr;

namespace {

AlgebraCase e6r1() { return AlgebraCase::make(Family::E6, 1); }
AlgebraCase e7() { return AlgebraCase::make(Family::E7, 7); }

std::vector<Node> classical_labels(int rank) {
  std::vector<Node> out;
  for (Node i = 1; i <= rank; ++i) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("minuscule crystals") {
  CrystalGraph six = minuscule_crystal(e6r1());
  CrystalGraph seven = minuscule_crystal(e7());
  CHECK(six.size() == 27);
  CHECK(seven.size() == 56);
  for (Node i = 1; i <= 6; ++i) CHECK(six.phi(0, i) == (i == 1 ? 1 : 0));
  for (Node i = 1; i <= 7; ++i) CHECK(seven.phi(0, i) == (i == 7 ? 1 : 0));
  std::set<AffineWeight> weights;
  for (int v = 0; v < seven.size(); ++v) {
    weights.insert(seven.weight(v));
    for (Node i = 1; i <= 7; ++i) CHECK(seven.weight(v)[i] >= -1);
  }
  CHECK(weights.size() == 56);
}

TEST_CASE("highest components") {
  CrystalGraph six = minuscule_crystal(e6r1());
  CHECK(highest_component(six, 1).size() == 27);
  CrystalGraph two = highest_component(six, 2);
  CHECK(two.size() == enumerate_crystal(e6r1(), 2).size());
  CHECK(two.weight(0)[1] == 2);
  CHECK(two.sources() == std::vector<int>{0});
  CHECK_THROWS_AS(highest_component(six, 3, 100), ScaleExceeded);
  CHECK_THROWS_AS(highest_component(six, 0), InvalidCase);
}

TEST_CASE("isomorphism test") {
  CrystalGraph six = minuscule_crystal(e6r1());
  IsomorphismResult self = crystal_isomorphic(six, six, six.labels());
  CHECK(self.isomorphic());
  for (int v = 0; v < six.size(); ++v) CHECK(self.bijection[v] == v);

  CrystalGraph two_sources(1, {1}, 2);
  two_sources.finalize();
  CHECK_THROWS_AS(crystal_isomorphic(two_sources, six, {1}), NoUniqueSource);

  CrystalGraph chain(1, {1}, 3);
  chain.add_arrow(1, 0, 1);
  chain.add_arrow(1, 1, 2);
  chain.finalize();
  CrystalGraph copy = chain;
  CHECK(crystal_isomorphic(chain, copy, {1}).isomorphic());
  CrystalGraph pair(1, {1}, 2);
  pair.add_arrow(1, 0, 1);
  pair.finalize();
  IsomorphismResult mismatch = crystal_isomorphic(chain, pair, {1});
  CHECK_FALSE(mismatch.isomorphic());
  REQUIRE(mismatch.divergence);
  CHECK(mismatch.divergence->element == 1);
  CHECK(mismatch.divergence->label == 1);
}

TEST_CASE("PBW crystals are isomorphic to the oracle") {
  for (AlgebraCase algebra : AlgebraCase::all()) {
    CrystalGraph oracle = minuscule_crystal(algebra);
    for (int level : {1, 2}) {
      EnumeratedCrystal crystal = enumerate_crystal(algebra, level);
      CrystalGraph component = highest_component(oracle, level);
      std::vector<Node> labels = classical_labels(algebra.rank());
      CAPTURE(algebra.name());
      CAPTURE(level);
      IsomorphismResult iso = crystal_isomorphic(crystal.graph, component, labels);
      REQUIRE(iso.isomorphic());
      CHECK(component.size() == crystal.size());
      KrCrystal kr(algebra, level);
      for (int v = 0; v < crystal.size(); ++v) {
        ClassicalWeight wt = kr.classical().classical_weight(crystal.elements[v], level);
        for (Node i = 1; i <= algebra.rank(); ++i) CHECK(wt.at(i) == component.weight(iso.bijection[v])[i]);
      }
    }
  }
}

TEST_CASE("printed graphs are isomorphic to the enumerated ones with the box numbering") {
  for (AlgebraCase algebra : {e6r1(), e7()}) {
    const CaseTables& t = validated_tables(algebra);
    EnumeratedCrystal crystal = enumerate_crystal(algebra, 1);
    CrystalGraph reference = reference_crystal_graph(*t.reference, algebra.rank(), false);
    IsomorphismResult iso = crystal_isomorphic(reference, crystal.graph, classical_labels(algebra.rank()));
    REQUIRE(iso.isomorphic());
    for (int k = 0; k < reference.size(); ++k)
      CHECK(iso.bijection[k] == crystal.index_of(PbwElement::indicator(t.size(), t.reference->boxes[k])));
  }
}

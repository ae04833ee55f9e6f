#include <doctest.h>

#include "kr/errors.hpp"
#include "kr/kr_crystal.hpp"

using namespace kr;

namespace {

AlgebraCase e6r1() { return AlgebraCase::make(Family::E6, 1); }
AlgebraCase e6r6() { return AlgebraCase::make(Family::E6, 6); }
AlgebraCase e7() { return AlgebraCase::make(Family::E7, 7); }

PbwElement box(AlgebraCase algebra, int k) {
  const CaseTables& t = validated_tables(algebra);
  return PbwElement::indicator(t.size(), t.reference->boxes.at(k - 1));
}

AffineWeight lambda(int rank, std::initializer_list<std::pair<Node, int>> terms) {
  AffineWeight w{std::vector<int>(rank + 1, 0)};
  for (auto [i, k] : terms) w[i] += k;
  return w;
}

}  // namespace

TEST_CASE("epsilon_r^* examples") {
  KrCrystal kr(e6r1(), 1);
  const PbwCrystal& p = kr.classical();
  CHECK(p.epsilon_r_star(p.zero()) == 0);
  CHECK(p.epsilon_r_star(PbwElement::indicator(16, {1})) == 1);
  CHECK(box(e6r1(), 18) == PbwElement::indicator(16, {1, 12}));
  CHECK(p.epsilon_r_star(box(e6r1(), 18)) == 1);
  CHECK(p.epsilon_r_star(PbwElement::indicator(16, {16, 16})) == 2);
}

TEST_CASE("affine operators f_0 and e_0") {
  KrCrystal six(e6r1(), 1);
  CHECK(six.f(six.element(box(e6r1(), 17)), 0) == six.element(box(e6r1(), 1)));
  CHECK_FALSE(six.f(six.highest(), 0));
  CHECK(six.e(six.element(box(e6r1(), 1)), 0) == six.element(box(e6r1(), 17)));
  CHECK_FALSE(six.e(six.element(box(e6r1(), 17)), 0));

  KrCrystal seven(e7(), 1);
  CHECK(box(e7(), 56) == PbwElement::indicator(27, {1, 18, 27}));
  CHECK(seven.f(seven.element(box(e7(), 56)), 0) == seven.element(box(e7(), 29)));

  KrCrystal two(e6r1(), 2);
  auto up = two.e(two.element(box(e6r1(), 17)), 0);
  REQUIRE(up);
  CHECK(up->c == PbwElement::indicator(16, {16, 16}));
  CHECK(two.f(*up, 0)->c == box(e6r1(), 17));
}

TEST_CASE("f_r respects the level bound") {
  KrCrystal kr(e6r1(), 1);
  KrElement b = kr.element(PbwElement::indicator(16, {1}));
  CHECK_FALSE(kr.f(b, 1));
  CHECK(kr.phi(kr.highest(), 1) == 1);
  KrCrystal three(e6r1(), 3);
  CHECK(three.phi(three.highest(), 1) == 3);
}

TEST_CASE("affine weights") {
  for (AlgebraCase algebra : AlgebraCase::all()) {
    for (int level : {1, 2}) {
      KrCrystal kr(algebra, level);
      AffineWeight want = lambda(kr.rank(), {{algebra.node, level}, {0, -level}});
      CHECK(kr.affine_weight(kr.highest()) == want);
    }
  }
  KrCrystal kr(e6r1(), 1);
  KrElement minimal_e = kr.element(PbwElement::indicator(16, {5, 16}));
  CHECK(kr.affine_weight(minimal_e) == lambda(6, {{0, 1}, {6, -1}}));
}

TEST_CASE("string statistics of the highest element") {
  for (int level : {1, 2, 3}) {
    KrCrystal kr(e6r1(), level);
    CHECK(kr.phi_vector(kr.highest()) == lambda(6, {{1, level}}));
    CHECK(kr.eps_vector(kr.highest()) == lambda(6, {{0, level}}));
  }
  KrCrystal kr(e7(), 2);
  CHECK(kr.phi_vector(kr.highest()) == lambda(7, {{7, 2}}));
  CHECK(kr.eps_vector(kr.highest()) == lambda(7, {{0, 2}}));
}

TEST_CASE("enumerated crystal properties") {
  for (AlgebraCase algebra : AlgebraCase::all()) {
    for (int level : {1, 2}) {
      KrCrystal kr(algebra, level);
      EnumeratedCrystal crystal = enumerate_crystal(algebra, level);
      const CartanData& cartan = kr.cartan();
      const Position theta = kr.tables().theta_position();
      CAPTURE(algebra.name());
      CAPTURE(level);
      CHECK(std::is_sorted(crystal.elements.begin(), crystal.elements.end()));
      for (int v = 0; v < crystal.size(); ++v) {
        const PbwElement& c = crystal.elements[v];
        KrElement b = kr.element(c);
        CHECK(kr.contains(c));
        AffineWeight wt = kr.affine_weight(b);
        CHECK(cartan.level(wt) == 0);
        CHECK(kr.phi_vector(b) - kr.eps_vector(b) == wt);
        CHECK(kr.phi(b, 0) == c.at(theta));
        CHECK(cartan.level(kr.phi_vector(b)) >= level);
        CHECK(cartan.level(kr.eps_vector(b)) >= level);
        CHECK(crystal.graph.weight(v) == wt);
        CHECK(crystal.graph.phi_vector(v) == kr.phi_vector(b));
        CHECK(crystal.graph.eps_vector(v) == kr.eps_vector(b));
        for (Node i = 0; i <= kr.rank(); ++i) {
          auto down = kr.f(b, i);
          int w = crystal.graph.f(i, v);
          CHECK(down.has_value() == (w != CrystalGraph::kNull));
          if (down) CHECK(crystal.elements[w] == down->c);
        }
      }
    }
  }
}

TEST_CASE("crystal sizes") {
  CHECK(enumerate_crystal(e6r1(), 1).size() == 27);
  CHECK(enumerate_crystal(e6r6(), 1).size() == 27);
  CHECK(enumerate_crystal(e7(), 1).size() == 56);
  CHECK(enumerate_crystal(e6r1(), 2).size() == 351);
  CHECK(enumerate_crystal(e7(), 2).size() == 1463);
  CHECK_THROWS_AS(enumerate_crystal(e7(), 1, 10), ScaleExceeded);
  CHECK_THROWS_AS(grid_scan(e7(), 1, 10), ScaleExceeded);
}

TEST_CASE("grid scan agrees with the closure") {
  for (AlgebraCase algebra : {e6r1(), e6r6()})
    for (int level : {1, 2}) CHECK(grid_scan(algebra, level) == enumerate_crystal(algebra, level).elements);
  for (int level : {1, 2}) CHECK(grid_scan(e7(), level) == enumerate_crystal(e7(), level).elements);
}

TEST_CASE("levels cannot be mixed") {
  CHECK_THROWS_AS(KrCrystal(e6r1(), 0), InvalidCase);
  KrCrystal one(e6r1(), 1);
  KrElement foreign{PbwElement(16), 2};
  CHECK_THROWS_AS(one.f(foreign, 1), LevelMismatch);
  CHECK_THROWS_AS(one.e(foreign, 0), LevelMismatch);
  CHECK_THROWS_AS(one.element(PbwElement::indicator(16, {16, 16})), Error);
  std::vector<KrElement> mixed{one.highest(), foreign};
  CHECK_THROWS_AS(EnumeratedCrystal::from_elements(one, mixed), LevelMismatch);

  std::vector<KrElement> all;
  for (const PbwElement& c : enumerate_crystal(e6r1(), 1).elements) all.push_back(one.element(c));
  EnumeratedCrystal rebuilt = EnumeratedCrystal::from_elements(one, all);
  CHECK(rebuilt.size() == 27);
  CHECK(rebuilt.graph.edges() == enumerate_crystal(e6r1(), 1).graph.edges());
}

#include <doctest.h>

#include "kr/closed_forms.hpp"
#include "kr/kr_crystal.hpp"
#include "kr/pbw_crystal.hpp"

using namespace kr;

namespace {

AlgebraCase e6r1() { return AlgebraCase::make(Family::E6, 1); }
AlgebraCase e6r6() { return AlgebraCase::make(Family::E6, 6); }
AlgebraCase e7() { return AlgebraCase::make(Family::E7, 7); }

int printed_x1(const PbwElement& c) {
  int sum = 0;
  for (Position p : e6_printed_xl_forms().front()) sum += c.at(p);
  return sum;
}

}  // namespace

TEST_CASE("derived delta indices match the printed ones") {
  CHECK(derive_delta_indices(validated_tables(e6r1())) == printed_delta_indices(Family::E6));
  CHECK(derive_delta_indices(validated_tables(e7())) == printed_delta_indices(Family::E7));
  CHECK(printed_delta_indices(Family::E6).size() == 10);
  CHECK(printed_delta_indices(Family::E7).size() == 20);
  // The r = 6 tables are the position-wise image of r = 1, so the statistics agree.
  CHECK(derive_delta_indices(validated_tables(e6r6())) == printed_delta_indices(Family::E6));
}

TEST_CASE("delta values") {
  PbwElement c = PbwElement::indicator(16, {3});
  DeltaValues delta(printed_delta_indices(Family::E6), c);
  for (const DeltaIndex& d : printed_delta_indices(Family::E6)) CHECK(delta(d.l) == c.at(d.k) - c.at(d.l));
}

TEST_CASE("E6 closed forms hold on every element for s <= 2") {
  for (AlgebraCase algebra : {e6r1(), e6r6()}) {
    for (int level : {1, 2}) {
      KrCrystal kr(algebra, level);
      const CartanData& cartan = kr.cartan();
      CAPTURE(algebra.name());
      CAPTURE(level);
      for (const PbwElement& c : enumerate_crystal(algebra, level).elements) {
        KrElement b = kr.element(c);
        AffineWeight phi = kr.phi_vector(b);
        CHECK(e6_phi_closed_form(algebra, c, level) == phi);
        CHECK(e6_level_expansion(algebra, c, level) == cartan.level(phi));
        CHECK(phi[0] == c.at(16));
        if (algebra == e6r1()) {
          CHECK(phi[1] == level - printed_x1(c));
          CHECK(phi[1] == e6_phi1_delta_form(c, level));
        }
      }
    }
  }
}

TEST_CASE("minimal parameterizations") {
  CHECK(minimal_parameterizations(Family::E6, 1).size() == 3);
  CHECK(minimal_parameterizations(Family::E7, 1).size() == 2);
  CHECK(minimal_parameterizations(Family::E6, 2).size() == 9);
  CHECK(minimal_parameterizations(Family::E7, 2).size() == 6);
  MinimalParams p{{1, 0, 0, 0, 1, 0}};
  CHECK(p.s0(Family::E6) == 2);
  PbwElement c = minimal_element(e6r1(), p);
  CHECK(c == PbwElement::indicator(16, {1, 5, 12, 16}));
  CHECK(minimal_params_of(e6r1(), c) == p);
  CHECK_FALSE(minimal_params_of(e6r1(), PbwElement::indicator(16, {1})));
}

TEST_CASE("E6 minimal elements: string statistics and weight") {
  for (int level : {1, 2, 3}) {
    KrCrystal kr(e6r1(), level);
    for (const MinimalParams& p : minimal_parameterizations(Family::E6, level)) {
      KrElement b = kr.element(minimal_element(e6r1(), p));
      CHECK(kr.phi_vector(b) == minimal_phi_closed_form(e6r1(), p, level));
      CHECK(kr.eps_vector(b) == minimal_eps_closed_form(e6r1(), p, level));
      AffineWeight wt = kr.affine_weight(b);
      AffineWeight printed = e6_minimal_classical_weight(p);
      // wt(b) = wt(c) + s(Lambda_1 - Lambda_0)
      for (Node i = 1; i <= 6; ++i) CHECK(wt[i] - (i == 1 ? level : 0) == printed[i]);
    }
  }
  KrCrystal kr(e6r1(), 1);
  MinimalParams e_only{{0, 0, 0, 0, 1, 0}};
  AffineWeight lambda0{{1, 0, 0, 0, 0, 0, 0}};
  AffineWeight lambda6{{0, 0, 0, 0, 0, 0, 1}};
  CHECK(minimal_phi_closed_form(e6r1(), e_only, 1) == lambda0);
  CHECK(minimal_eps_closed_form(e6r1(), e_only, 1) == lambda6);
}

TEST_CASE("E7 minimal elements match the displayed statistics") {
  for (int level : {1, 2}) {
    KrCrystal kr(e7(), level);
    for (const MinimalParams& p : minimal_parameterizations(Family::E7, level)) {
      KrElement b = kr.element(minimal_element(e7(), p));
      CHECK(kr.phi_vector(b) == minimal_phi_closed_form(e7(), p, level));
      CHECK(kr.eps_vector(b) == minimal_eps_closed_form(e7(), p, level));
    }
    MinimalParams zero{std::vector<int>(7, 0)};
    AffineWeight phi{std::vector<int>(8, 0)};
    AffineWeight eps{std::vector<int>(8, 0)};
    phi[7] = level;
    eps[0] = level;
    CHECK(minimal_phi_closed_form(e7(), zero, level) == phi);
    CHECK(minimal_eps_closed_form(e7(), zero, level) == eps);
  }
}

TEST_CASE("reduced signatures of minimal elements") {
  auto shapes = minimal_signature_shapes(e6r1());
  CHECK(shapes.at(2) == std::pair<Position, Position>{6, 15});
  CHECK(minimal_signature_shapes(e7()).at(1) == std::pair<Position, Position>{6, 26});
  PbwCrystal p(e6r1());
  for (const MinimalParams& params : minimal_parameterizations(Family::E6, 3)) {
    PbwElement c = minimal_element(e6r1(), params);
    Signature reduced = reduce_signature(p.sigma(c, 2));
    CHECK(reduced.count(Sign::Minus) == c.at(6));
    CHECK(reduced.count(Sign::Plus) == c.at(15));
  }
  auto six = minimal_signature_shapes(e6r6());
  CHECK(six.size() == 5);
  CHECK(six.count(6) == 0);
}

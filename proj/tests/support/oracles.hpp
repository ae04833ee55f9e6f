#pragma once

// Test-side oracles, written without the library's enumeration code.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kr/kr_crystal.hpp"
#include "kr/root_data.hpp"

namespace kr::testing {

/// Number of dominant P_cl weights of the given level: the coefficient of
/// t^level in prod_i 1 / (1 - t^{a_i}), by the usual coin-change recurrence.
inline long count_level_weights(const std::vector<int>& kac_labels, int level) {
  std::vector<long> ways(level + 1, 0);
  ways[0] = 1;
  for (int a : kac_labels)
    for (int t = a; t <= level; ++t) ways[t] += ways[t - a];
  return ways[level];
}

inline std::vector<int> kac_labels(Family family) {
  if (family == Family::E6) return {1, 1, 2, 2, 3, 2, 1};
  return {1, 2, 2, 3, 4, 3, 2, 1};
}

/// The (case, level) instances that fit the default budget.
inline std::vector<std::pair<AlgebraCase, int>> instance_grid() {
  return {{AlgebraCase::make(Family::E6, 1), 1}, {AlgebraCase::make(Family::E6, 1), 2},
          {AlgebraCase::make(Family::E6, 1), 3}, {AlgebraCase::make(Family::E6, 6), 1},
          {AlgebraCase::make(Family::E6, 6), 2}, {AlgebraCase::make(Family::E6, 6), 3},
          {AlgebraCase::make(Family::E7, 7), 1}, {AlgebraCase::make(Family::E7, 7), 2}};
}

struct AxiomSuiteResult {
  long samples = 0;
  long checks = 0;
  long failure_count = 0;
  std::vector<std::string> failures;  // the first few
};

/// Checks the crystal axioms (1)-(5) and mutual inverseness of e_i / f_i for
/// every i in I on `samples` elements drawn uniformly from the instance grid.
inline AxiomSuiteResult run_axiom_suite(long samples, std::uint64_t seed) {
  struct Instance {
    KrCrystal crystal;
    std::vector<PbwElement> elements;
  };
  std::vector<Instance> instances;
  for (auto [algebra, level] : instance_grid())
    instances.push_back({KrCrystal(algebra, level), enumerate_crystal(algebra, level).elements});

  AxiomSuiteResult result;
  std::mt19937_64 rng(seed);
  auto fail = [&](const KrCrystal& kr, const KrElement& b, Node i, const std::string& what) {
    ++result.failure_count;
    if (result.failures.size() < 20)
      result.failures.push_back(kr.algebra().name() + " s=" + std::to_string(kr.level()) + " " +
                                b.c.position_set() + " i=" + std::to_string(i) + ": " + what);
  };
  for (long n = 0; n < samples; ++n) {
    Instance& inst = instances[std::uniform_int_distribution<std::size_t>(0, instances.size() - 1)(rng)];
    const KrCrystal& kr = inst.crystal;
    const PbwElement& c =
        inst.elements[std::uniform_int_distribution<std::size_t>(0, inst.elements.size() - 1)(rng)];
    KrElement b = kr.element(c);
    AffineWeight wt = kr.affine_weight(b);
    ++result.samples;
    for (Node i = 0; i <= kr.rank(); ++i) {
      AffineWeight alpha = kr.cartan().affine_simple_root(i);
      int phi = kr.phi(b, i);
      int eps = kr.eps(b, i);
      ++result.checks;
      if (phi < 0 || eps < 0) fail(kr, b, i, "negative string length");  // (5): never -infinity
      if (phi - eps != wt[i]) fail(kr, b, i, "axiom (1)");
      if (auto up = kr.e(b, i)) {
        if (!kr.contains(up->c)) fail(kr, b, i, "e_i leaves the crystal");
        if (kr.eps(*up, i) != eps - 1 || kr.phi(*up, i) != phi + 1) fail(kr, b, i, "axiom (2ab)");
        if (kr.affine_weight(*up) != wt + alpha) fail(kr, b, i, "axiom (2c)");
        auto back = kr.f(*up, i);
        if (!back || *back != b) fail(kr, b, i, "f_i e_i b != b");
      } else if (eps != 0) {
        fail(kr, b, i, "e_i undefined with eps > 0");
      }
      if (auto down = kr.f(b, i)) {
        if (!kr.contains(down->c)) fail(kr, b, i, "f_i leaves the crystal");
        if (kr.eps(*down, i) != eps + 1 || kr.phi(*down, i) != phi - 1) fail(kr, b, i, "axiom (3ab)");
        if (kr.affine_weight(*down) != wt - alpha) fail(kr, b, i, "axiom (3c)");
        auto back = kr.e(*down, i);
        if (!back || *back != b) fail(kr, b, i, "e_i f_i b != b");
      } else if (phi != 0) {
        fail(kr, b, i, "f_i undefined with phi > 0");
      }
    }
  }
  return result;
}

}  // namespace kr::testing

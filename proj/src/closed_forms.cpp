#include "kr/closed_forms.hpp"

#include <algorithm>
#include <functional>

#include "kr/errors.hpp"

namespace kr {

std::vector<DeltaIndex> derive_delta_indices(const CaseTables& tables) {
  std::map<Position, Position> found;
  for (const auto& [i, pairs] : tables.sigma) {
    for (std::size_t s = 0; s + 1 < pairs.size(); ++s) {
      Position k = pairs[s].plus;
      Position l = pairs[s + 1].minus;
      auto [it, inserted] = found.emplace(l, k);
      if (!inserted && it->second != k)
        throw FormulaMismatch("delta_" + std::to_string(l) + " is defined as both c_" +
                              std::to_string(it->second) + " - c_" + std::to_string(l) +
                              " and c_" + std::to_string(k) + " - c_" + std::to_string(l));
    }
  }
  std::vector<DeltaIndex> out;
  for (auto [l, k] : found) out.push_back({l, k});
  return out;
}

DeltaValues::DeltaValues(const std::vector<DeltaIndex>& indices, const PbwElement& c) {
  for (const DeltaIndex& d : indices) values_[d.l] = c.at(d.k) - c.at(d.l);
}

namespace {

int pos(int x) { return std::max(x, 0); }

int nest(const DeltaValues& d, Position x, Position y, Position z) {
  return pos(pos(pos(d(x)) + d(y)) + d(z));
}

void require_e6(AlgebraCase algebra) {
  if (algebra.family != Family::E6) throw InvalidCase("closed forms are only available for E6");
}

const std::vector<DeltaIndex>& case_deltas(AlgebraCase algebra) {
  static const std::vector<DeltaIndex> e6r1 = derive_delta_indices(validated_tables({Family::E6, 1}));
  static const std::vector<DeltaIndex> e6r6 = derive_delta_indices(validated_tables({Family::E6, 6}));
  static const std::vector<DeltaIndex> e7 = derive_delta_indices(validated_tables({Family::E7, 7}));
  if (algebra.family == Family::E7) return e7;
  return algebra.node == 1 ? e6r1 : e6r6;
}

int e6_s0(const PbwElement& c) {
  return c.at(1) + 2 * c.at(2) + 3 * c.at(3) + 2 * c.at(4) + c.at(5) + 2 * c.at(6);
}

}  // namespace

AffineWeight e6_phi_closed_form(AlgebraCase algebra, const PbwElement& c, int level) {
  require_e6(algebra);
  DeltaValues d(case_deltas(algebra), c);
  const int a = c.at(1), b = c.at(2), cc = c.at(3), dd = c.at(4), f = c.at(6);
  int x1 = 0;
  for (Position p : e6_printed_xl_forms().front()) x1 += c.at(p);

  std::vector<int> phi(7);
  phi[0] = c.at(16);
  phi[1] = level - x1;
  phi[2] = nest(d, 7, 8, 16) + dd - d(8) - d(15);
  phi[3] = nest(d, 12, 13, 14) + f - d(11);
  phi[4] = nest(d, 9, 10, 15) + cc - d(7) - d(10) - d(14);
  phi[5] = nest(d, 7, 11, 14) + b - d(9) - d(13);
  phi[6] = nest(d, 8, 10, 13) + a - d(12);

  AffineWeight out{std::vector<int>(7)};
  for (Node i = 0; i <= 6; ++i) out[algebra.node == 1 ? i : diagram_automorphism(Family::E6, i)] = phi[i];
  return out;
}

int e6_phi1_delta_form(const PbwElement& c, int level) {
  DeltaValues d(case_deltas({Family::E6, 1}), c);
  return level - e6_s0(c) + 2 * d(7) + d(8) + d(9) + d(10) + d(11);
}

int e6_level_expansion(AlgebraCase algebra, const PbwElement& c, int level) {
  require_e6(algebra);
  DeltaValues d(case_deltas(algebra), c);
  return level - d(7) - d(8) - d(9) - 2 * d(10) - d(11) - d(12) - 2 * d(13) - 3 * d(14) -
         2 * d(15) - d(16) + 2 * nest(d, 7, 8, 16) + 2 * nest(d, 12, 13, 14) +
         3 * nest(d, 9, 10, 15) + 2 * nest(d, 7, 11, 14) + nest(d, 8, 10, 13);
}

int MinimalParams::s0(Family family) const {
  const std::vector<int>& weights = minimal_level_weights(family);
  int acc = 0;
  for (std::size_t k = 0; k < values.size(); ++k) acc += weights[k] * values[k];
  return acc;
}

std::vector<MinimalParams> minimal_parameterizations(Family family, int level) {
  const std::vector<int>& weights = minimal_level_weights(family);
  std::vector<MinimalParams> out;
  MinimalParams current{std::vector<int>(weights.size(), 0)};
  std::function<void(std::size_t, int)> descend = [&](std::size_t k, int budget) {
    if (k == weights.size()) {
      out.push_back(current);
      return;
    }
    for (int v = 0; v * weights[k] <= budget; ++v) {
      current.values[k] = v;
      descend(k + 1, budget - v * weights[k]);
    }
    current.values[k] = 0;
  };
  descend(0, level);
  std::sort(out.begin(), out.end());
  return out;
}

PbwElement minimal_element(AlgebraCase algebra, const MinimalParams& params) {
  const CaseTables& tables = validated_tables(algebra);
  const auto& groups = minimal_parameter_groups(algebra.family);
  if (params.values.size() != groups.size()) throw Error("wrong number of minimal parameters");
  PbwElement c(tables.size());
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (Position p : groups[g]) c.set(p, params.values[g]);
  return c;
}

std::optional<MinimalParams> minimal_params_of(AlgebraCase algebra, const PbwElement& c) {
  const auto& groups = minimal_parameter_groups(algebra.family);
  MinimalParams params;
  for (const auto& group : groups) params.values.push_back(c.at(group.front()));
  if (minimal_element(algebra, params) != c) return std::nullopt;
  return params;
}

AffineWeight minimal_phi_closed_form(AlgebraCase algebra, const MinimalParams& params, int level) {
  const auto& v = params.values;
  const int rest = level - params.s0(algebra.family);
  if (algebra.family == Family::E7) {
    // a b c d e f g
    return AffineWeight{{v[0], v[1], v[6], v[2], v[3], v[4], v[5], rest}};
  }
  // a b c d e f; written for r = 1, transported for r = 6
  std::vector<int> phi = {v[4], rest, v[3], v[5], v[2], v[1], v[0]};
  AffineWeight out{std::vector<int>(7)};
  for (Node i = 0; i <= 6; ++i) out[algebra.node == 1 ? i : diagram_automorphism(Family::E6, i)] = phi[i];
  return out;
}

AffineWeight minimal_eps_closed_form(AlgebraCase algebra, const MinimalParams& params, int level) {
  const auto& v = params.values;
  const int rest = level - params.s0(algebra.family);
  if (algebra.family == Family::E7) {
    return AffineWeight{{rest, v[5], v[6], v[4], v[3], v[2], v[1], v[0]}};
  }
  std::vector<int> eps = {rest, v[0], v[5], v[1], v[2], v[3], v[4]};
  AffineWeight out{std::vector<int>(7)};
  for (Node i = 0; i <= 6; ++i) out[algebra.node == 1 ? i : diagram_automorphism(Family::E6, i)] = eps[i];
  return out;
}

AffineWeight e6_minimal_classical_weight(const MinimalParams& params) {
  const auto& v = params.values;
  const int a = v[0], b = v[1], d = v[3], e = v[4], f = v[5];
  const int s0 = params.s0(Family::E6);
  return AffineWeight{{0, -(s0 + a), d - f, -(b - f), 0, b - d, a - e}};
}

std::map<Node, std::pair<Position, Position>> minimal_signature_shapes(AlgebraCase algebra) {
  if (algebra.family == Family::E7)
    return {{1, {6, 26}}, {2, {7, 23}}, {3, {5, 25}}, {4, {4, 24}}, {5, {3, 22}}, {6, {2, 17}}};
  std::map<Node, std::pair<Position, Position>> r1 = {
      {2, {6, 15}}, {3, {2, 11}}, {4, {3, 14}}, {5, {4, 13}}, {6, {5, 12}}};
  if (algebra.node == 1) return r1;
  std::map<Node, std::pair<Position, Position>> out;
  for (auto [i, shape] : r1) out[diagram_automorphism(Family::E6, i)] = shape;
  return out;
}

}  // namespace kr

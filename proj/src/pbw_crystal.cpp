#include "kr/pbw_crystal.hpp"

#include <algorithm>

#include "kr/errors.hpp"

namespace kr {

int Signature::count(Sign sign) const {
  int acc = 0;
  for (const SignatureRun& run : runs)
    if (run.sign == sign) acc += run.multiplicity;
  return acc;
}

Signature reduce_signature(const Signature& signature) {
  std::vector<SignatureRun> minus;
  std::vector<SignatureRun> plus;  // open + runs, most recent last
  for (SignatureRun run : signature.runs) {
    if (run.multiplicity == 0) continue;
    if (run.sign == Sign::Plus) {
      plus.push_back(run);
      continue;
    }
    while (run.multiplicity > 0 && !plus.empty()) {
      int cancel = std::min(run.multiplicity, plus.back().multiplicity);
      run.multiplicity -= cancel;
      plus.back().multiplicity -= cancel;
      if (plus.back().multiplicity == 0) plus.pop_back();
    }
    if (run.multiplicity > 0) minus.push_back(run);
  }
  Signature out;
  out.runs = std::move(minus);
  out.runs.insert(out.runs.end(), plus.begin(), plus.end());
  return out;
}

PbwCrystal::PbwCrystal(AlgebraCase algebra)
    : tables_(&validated_tables(algebra)), trails_(*tables_) {
  const CartanData& cd = cartan();
  pairing_.assign(cd.rank() + 1, std::vector<int>(size()));
  for (Node i = 0; i <= cd.rank(); ++i)
    for (Position k = 1; k <= size(); ++k) pairing_[i][k - 1] = cd.pairing(i, tables_->roots[k - 1]);
}

void PbwCrystal::check_node(Node i) const {
  if (i < 1 || i > rank())
    throw InvalidCase("node " + std::to_string(i) + " is not a classical node of " + algebra().name());
}

Signature PbwCrystal::sigma(const PbwElement& c, Node i) const {
  check_node(i);
  if (i == node()) throw InvalidCase("no signature table for the minuscule node itself");
  const auto& pairs = tables_->sigma.at(i);
  Signature out;
  out.runs.reserve(2 * pairs.size());
  for (int s = 0; s < static_cast<int>(pairs.size()); ++s) {
    out.runs.push_back({Sign::Minus, c.at(pairs[s].minus), pairs[s].minus, s});
    out.runs.push_back({Sign::Plus, c.at(pairs[s].plus), pairs[s].plus, s});
  }
  return out;
}

std::optional<PbwElement> PbwCrystal::f(const PbwElement& c, Node i) const {
  check_node(i);
  PbwElement out = c;
  if (i == node()) {
    out.add(1, 1);
    return out;
  }
  Signature reduced = reduce_signature(sigma(c, i));
  for (const SignatureRun& run : reduced.runs) {
    if (run.sign != Sign::Plus) continue;
    const SigmaPair& pair = tables_->sigma.at(i)[run.pair];
    out.add(pair.plus, -1);
    out.add(pair.minus, 1);
    return out;
  }
  return std::nullopt;
}

std::optional<PbwElement> PbwCrystal::e(const PbwElement& c, Node i) const {
  check_node(i);
  PbwElement out = c;
  if (i == node()) {
    if (c.at(1) == 0) return std::nullopt;
    out.add(1, -1);
    return out;
  }
  Signature reduced = reduce_signature(sigma(c, i));
  for (auto it = reduced.runs.rbegin(); it != reduced.runs.rend(); ++it) {
    if (it->sign != Sign::Minus) continue;
    const SigmaPair& pair = tables_->sigma.at(i)[it->pair];
    out.add(pair.plus, 1);
    out.add(pair.minus, -1);
    return out;
  }
  return std::nullopt;
}

StringLengths PbwCrystal::phi_eps_string(const PbwElement& c, Node i, int level) const {
  StringLengths out{0, 0};
  for (std::optional<PbwElement> x = e(c, i); x; x = e(*x, i)) ++out.eps;
  for (std::optional<PbwElement> x = f(c, i); x; x = f(*x, i)) {
    if (i == node() && epsilon_r_star(*x) > level) break;
    ++out.phi;
  }
  return out;
}

ClassicalWeight PbwCrystal::classical_weight(const PbwElement& c, int level) const {
  ClassicalWeight w{std::vector<int>(rank(), 0)};
  w.at(node()) = level;
  for (Node i = 1; i <= rank(); ++i)
    for (Position k = 1; k <= size(); ++k) w.at(i) -= c.at(k) * pairing_[i][k - 1];
  return w;
}

}  // namespace kr

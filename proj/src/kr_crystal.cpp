#include "kr/kr_crystal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "kr/errors.hpp"

namespace kr {

namespace {

std::vector<Node> affine_labels(int rank) {
  std::vector<Node> out;
  for (Node i = 0; i <= rank; ++i) out.push_back(i);
  return out;
}

}  // namespace

KrCrystal::KrCrystal(AlgebraCase algebra, int level) : pbw_(algebra), level_(level) {
  if (level < 1) throw InvalidCase("level must be at least 1, got " + std::to_string(level));
}

bool KrCrystal::contains(const PbwElement& c) const {
  return c.size() == pbw_.size() && pbw_.epsilon_r_star(c) <= level_;
}

KrElement KrCrystal::element(const PbwElement& c) const {
  if (!contains(c))
    throw Error(c.position_set() + " is not in the level-" + std::to_string(level_) + " crystal");
  return {c, level_};
}

void KrCrystal::check(const KrElement& b) const {
  if (b.level != level_)
    throw LevelMismatch("element of level " + std::to_string(b.level) +
                        " used with the level-" + std::to_string(level_) + " crystal");
}

std::optional<KrElement> KrCrystal::f(const KrElement& b, Node i) const {
  check(b);
  if (i == 0) {
    const Position theta = tables().theta_position();
    if (b.c.at(theta) == 0) return std::nullopt;
    KrElement out = b;
    out.c.add(theta, -1);
    return out;
  }
  std::optional<PbwElement> c = pbw_.f(b.c, i);
  if (!c) return std::nullopt;
  if (i == pbw_.node() && pbw_.epsilon_r_star(*c) > level_) return std::nullopt;
  return KrElement{*c, level_};
}

std::optional<KrElement> KrCrystal::e(const KrElement& b, Node i) const {
  check(b);
  if (i == 0) {
    KrElement out = b;
    out.c.add(tables().theta_position(), 1);
    if (pbw_.epsilon_r_star(out.c) > level_) return std::nullopt;
    return out;
  }
  std::optional<PbwElement> c = pbw_.e(b.c, i);
  if (!c) return std::nullopt;
  return KrElement{*c, level_};
}

int KrCrystal::phi(const KrElement& b, Node i) const {
  int k = 0;
  for (auto x = f(b, i); x; x = f(*x, i)) ++k;
  return k;
}

int KrCrystal::eps(const KrElement& b, Node i) const {
  int k = 0;
  for (auto x = e(b, i); x; x = e(*x, i)) ++k;
  return k;
}

AffineWeight KrCrystal::phi_vector(const KrElement& b) const {
  AffineWeight w{std::vector<int>(rank() + 1)};
  for (Node i = 0; i <= rank(); ++i) w[i] = phi(b, i);
  return w;
}

AffineWeight KrCrystal::eps_vector(const KrElement& b) const {
  AffineWeight w{std::vector<int>(rank() + 1)};
  for (Node i = 0; i <= rank(); ++i) w[i] = eps(b, i);
  return w;
}

AffineWeight KrCrystal::affine_weight(const KrElement& b) const {
  check(b);
  ClassicalWeight classical = pbw_.classical_weight(b.c, level_);
  AffineWeight w{std::vector<int>(rank() + 1, 0)};
  for (Node i = 1; i <= rank(); ++i) {
    w[i] = classical.at(i);
    w[0] -= cartan().kac_label(i) * classical.at(i);
  }
  return w;
}

EnumeratedCrystal EnumeratedCrystal::from_elements(const KrCrystal& crystal,
                                                   std::vector<KrElement> elements) {
  for (const KrElement& b : elements)
    if (b.level != crystal.level())
      throw LevelMismatch("cannot mix levels " + std::to_string(b.level) + " and " +
                          std::to_string(crystal.level()) + " in one crystal");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  EnumeratedCrystal out;
  out.algebra = crystal.algebra();
  out.level = crystal.level();
  for (const KrElement& b : elements) out.elements.push_back(b.c);
  out.graph = CrystalGraph(crystal.rank(), affine_labels(crystal.rank()), out.size());
  for (int v = 0; v < out.size(); ++v) {
    out.graph.set_weight(v, crystal.affine_weight(elements[v]));
    for (Node i = 0; i <= crystal.rank(); ++i) {
      std::optional<KrElement> b = crystal.f(elements[v], i);
      if (!b) continue;
      int w = out.index_of(b->c);
      if (w < 0) throw Error("element list is not closed under f_" + std::to_string(i));
      out.graph.add_arrow(i, v, w);
    }
  }
  out.graph.finalize();
  return out;
}

int EnumeratedCrystal::index_of(const PbwElement& c) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), c);
  if (it == elements.end() || *it != c) return -1;
  return static_cast<int>(it - elements.begin());
}

EnumeratedCrystal enumerate_crystal(AlgebraCase algebra, int level, std::size_t budget) {
  KrCrystal crystal(algebra, level);
  std::vector<KrElement> order{crystal.highest()};
  std::unordered_set<PbwElement> seen{order.front().c};
  auto visit = [&](const std::optional<KrElement>& b) {
    if (!b || !seen.insert(b->c).second) return;
    if (order.size() >= budget)
      throw ScaleExceeded(algebra.name() + " level " + std::to_string(level) +
                          " exceeds the budget of " + std::to_string(budget) + " elements");
    order.push_back(*b);
  };
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Node i = 0; i <= crystal.rank(); ++i) {
      visit(crystal.f(order[head], i));
      visit(crystal.e(order[head], i));
    }
  }
  return EnumeratedCrystal::from_elements(crystal, std::move(order));
}

std::vector<PbwElement> grid_scan(AlgebraCase algebra, int level, std::size_t budget) {
  const CaseTables& tables = validated_tables(algebra);
  if (level < 1) throw InvalidCase("level must be at least 1, got " + std::to_string(level));
  const int n = tables.size();
  TrailFunctionals trails(tables);
  // For each position, the functionals whose support contains it.
  std::vector<std::vector<int>> touching(n + 1);
  for (int l = 0; l < trails.count(); ++l)
    for (Position p : trails.support(l)) touching[p].push_back(l);

  std::vector<PbwElement> out;
  std::vector<int> values(trails.count(), 0);
  PbwElement c(n);
  std::function<void(Position)> descend = [&](Position p) {
    if (p > n) {
      if (out.size() >= budget)
        throw ScaleExceeded("grid scan exceeds the budget of " + std::to_string(budget) + " elements");
      out.push_back(c);
      return;
    }
    descend(p + 1);
    int added = 0;
    for (int v = 1; v <= level; ++v) {
      bool ok = true;
      for (int l : touching[p]) {
        ++values[l];
        if (values[l] > level) ok = false;
      }
      ++added;
      if (!ok) break;
      c.set(p, v);
      descend(p + 1);
    }
    for (int l : touching[p]) values[l] -= added;
    c.set(p, 0);
  };
  descend(1);
  return out;
}

}  // namespace kr

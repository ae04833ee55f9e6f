#include "kr/perfectness.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "kr/errors.hpp"

namespace kr {

std::vector<AffineWeight> level_s_dominant_weights(Family family, int level) {
  const CartanData& cartan = CartanData::of(family);
  const int n = cartan.rank();
  std::vector<AffineWeight> out;
  AffineWeight current{std::vector<int>(n + 1, 0)};
  std::function<void(Node, int)> descend = [&](Node i, int remaining) {
    if (i > n) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int k = 0; k * cartan.kac_label(i) <= remaining; ++k) {
      current[i] = k;
      descend(i + 1, remaining - k * cartan.kac_label(i));
    }
    current[i] = 0;
  };
  descend(0, level);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> minimal_elements(const EnumeratedCrystal& crystal) {
  const CartanData& cartan = CartanData::of(crystal.algebra.family);
  std::vector<int> filtered;
  for (int v = 0; v < crystal.size(); ++v)
    if (cartan.level(crystal.graph.eps_vector(v)) == crystal.level) filtered.push_back(v);

  std::vector<int> parameterized;
  for (const MinimalParams& p : minimal_parameterizations(crystal.algebra.family, crystal.level)) {
    PbwElement c = minimal_element(crystal.algebra, p);
    int v = crystal.index_of(c);
    if (v < 0)
      throw MinimalMismatch("parameterized minimal element " + c.position_set() +
                            " is not in the crystal");
    parameterized.push_back(v);
  }
  std::sort(parameterized.begin(), parameterized.end());
  if (filtered != parameterized) {
    std::vector<int> extra;
    std::set_symmetric_difference(filtered.begin(), filtered.end(), parameterized.begin(),
                                  parameterized.end(), std::back_inserter(extra));
    throw MinimalMismatch("minimal elements disagree with the parameterization at " +
                          crystal.elements[extra.front()].position_set());
  }
  return filtered;
}

EpsPhiMaps eps_phi_maps(const EnumeratedCrystal& crystal, const std::vector<int>& minimals) {
  KrCrystal kr(crystal.algebra, crystal.level);
  const auto shapes = minimal_signature_shapes(crystal.algebra);
  EpsPhiMaps out;
  for (int v : minimals) {
    const PbwElement& c = crystal.elements[v];
    KrElement b = kr.element(c);
    AffineWeight eps = kr.eps_vector(b);
    AffineWeight phi = kr.phi_vector(b);

    std::optional<MinimalParams> params = minimal_params_of(crystal.algebra, c);
    if (!params) throw FormulaMismatch(c.position_set() + " is not of minimal shape");
    AffineWeight want_phi = minimal_phi_closed_form(crystal.algebra, *params, crystal.level);
    AffineWeight want_eps = minimal_eps_closed_form(crystal.algebra, *params, crystal.level);
    if (phi != want_phi)
      throw FormulaMismatch("phi(" + c.position_set() + ") = " + phi.str() + ", closed form gives " +
                            want_phi.str());
    if (eps != want_eps)
      throw FormulaMismatch("eps(" + c.position_set() + ") = " + eps.str() + ", closed form gives " +
                            want_eps.str());
    for (const auto& [i, shape] : shapes) {
      Signature reduced = reduce_signature(kr.classical().sigma(c, i));
      for (const SignatureRun& run : reduced.runs) {
        Position expected = run.sign == Sign::Minus ? shape.first : shape.second;
        if (run.source != expected)
          throw FormulaMismatch("reduced sigma_" + std::to_string(i) + " of " + c.position_set() +
                                " has a run at position " + std::to_string(run.source));
      }
    }
    out.elements.push_back(v);
    out.eps.push_back(std::move(eps));
    out.phi.push_back(std::move(phi));
  }
  return out;
}

unsigned parse_checks(const std::string& text) {
  unsigned out = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::string lower;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (lower == "p2") out |= kCheckP2;
    else if (lower == "p3") out |= kCheckP3;
    else if (lower == "p4") out |= kCheckP4;
    else if (lower == "p5") out |= kCheckP5;
    else if (lower == "all") out |= kCheckAll;
    else throw Error("unknown check '" + item + "' (expected p2, p3, p4, p5)");
  }
  if (out == 0) throw Error("no checks selected");
  return out;
}

bool PerfectnessReport::perfect() const {
  bool ok = true;
  if (checked(kCheckP2)) ok = ok && p2_connected;
  if (checked(kCheckP3)) ok = ok && p3_unique;
  if (checked(kCheckP4)) ok = ok && p4_min_level == level;
  if (checked(kCheckP5)) ok = ok && p5_eps.bijective && p5_phi.bijective;
  return ok;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

BijectionReport compare_to_targets(const std::vector<AffineWeight>& image,
                                   const std::vector<AffineWeight>& targets) {
  BijectionReport out;
  std::map<AffineWeight, int> hits;
  for (const AffineWeight& w : image) ++hits[w];
  for (const AffineWeight& t : targets)
    if (!hits.count(t)) out.missing.push_back(t);
  for (const auto& [w, k] : hits) {
    bool target = std::binary_search(targets.begin(), targets.end(), w);
    if (k > 1 || !target) out.duplicated.push_back(w);
  }
  out.bijective = out.missing.empty() && out.duplicated.empty() && image.size() == targets.size();
  return out;
}

}  // namespace

PerfectnessReport verify_perfect(AlgebraCase algebra, int level, const VerifyOptions& options) {
  algebra = AlgebraCase::make(algebra.family, algebra.node);
  PerfectnessReport report;
  report.algebra = algebra;
  report.level = level;
  report.checks = options.checks;
  report.delta_source = algebra.node == 6 ? "derived" : "transcribed";

  EnumeratedCrystal crystal = enumerate_crystal(algebra, level, options.budget);
  const CrystalGraph& g = crystal.graph;
  const CartanData& cartan = CartanData::of(algebra.family);
  report.crystal_size = crystal.size();

  if (report.checked(kCheckP2)) {
    const std::size_t n = static_cast<std::size_t>(crystal.size());
    report.p2_product_size = n * n;
    if (report.p2_product_size > options.budget)
      throw ScaleExceeded("B (x) B has " + std::to_string(report.p2_product_size) +
                          " elements, over the budget of " + std::to_string(options.budget));
    TensorProduct square(g, g);
    UnionFind components(n * n);
    std::size_t count = n * n;
    for (std::size_t left = 0; left < n; ++left) {
      for (std::size_t right = 0; right < n; ++right) {
        TensorPair b{static_cast<int>(left), static_cast<int>(right)};
        for (Node i : g.labels()) {
          std::optional<TensorPair> x = square.f(b, i);
          if (!x) continue;
          auto key = static_cast<std::uint32_t>(static_cast<std::size_t>(x->left) * n +
                                                static_cast<std::size_t>(x->right));
          if (components.unite(static_cast<std::uint32_t>(left * n + right), key)) --count;
        }
      }
    }
    report.p2_components = static_cast<int>(count);
    report.p2_connected = count == 1;
  }

  if (report.checked(kCheckP3)) {
    AffineWeight target{std::vector<int>(cartan.rank() + 1, 0)};
    target[algebra.node] = level;
    target[0] = -level;
    for (int v = 0; v < crystal.size(); ++v)
      if (g.weight(v) == target) ++report.p3_multiplicity;
    int zero = crystal.index_of(PbwElement(crystal.elements.front().size()));
    report.p3_unique = report.p3_multiplicity == 1 && g.weight(zero) == target;
  }

  if (report.checked(kCheckP4)) {
    report.p4_min_level = cartan.level(g.eps_vector(0));
    report.p4_min_phi_level = cartan.level(g.phi_vector(0));
    for (int v = 1; v < crystal.size(); ++v) {
      report.p4_min_level = std::min(report.p4_min_level, cartan.level(g.eps_vector(v)));
      report.p4_min_phi_level = std::min(report.p4_min_phi_level, cartan.level(g.phi_vector(v)));
    }
  }

  if (report.checked(kCheckP5)) {
    std::vector<AffineWeight> targets = level_s_dominant_weights(algebra.family, level);
    std::vector<int> minimals = minimal_elements(crystal);
    EpsPhiMaps maps = eps_phi_maps(crystal, minimals);
    report.minimal_count = static_cast<int>(minimals.size());
    report.dominant_weight_count = static_cast<int>(targets.size());
    report.p5_eps = compare_to_targets(maps.eps, targets);
    report.p5_phi = compare_to_targets(maps.phi, targets);
  }
  return report;
}

}  // namespace kr

#include "kr/weyl_words.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "kr/errors.hpp"

namespace kr {

std::vector<Root> papi_convex_order(const CartanData& cartan, const ReducedWord& word) {
  std::vector<Root> out;
  out.reserve(word.size());
  std::set<Root> seen;
  for (std::size_t k = 0; k < word.size(); ++k) {
    Node letter = word.letters[k];
    if (letter < 1 || letter > cartan.rank())
      throw NotReduced("letter " + std::to_string(letter) + " is not a node of " +
                       std::string(family_name(cartan.family())));
    Root beta = cartan.simple_root(letter);
    for (std::size_t j = k; j-- > 0;) beta = cartan.reflect(word.letters[j], beta);
    if (!beta.is_positive())
      throw NotReduced("beta_" + std::to_string(k + 1) + " = " + beta.str() + " is not positive");
    if (!seen.insert(beta).second)
      throw NotReduced("beta_" + std::to_string(k + 1) + " = " + beta.str() + " repeats");
    out.push_back(std::move(beta));
  }
  return out;
}

ReducedWord apply_braid_move(const CartanData& cartan, const ReducedWord& word,
                             const BraidMove& move) {
  const int k = move.position - 1;
  const int span = move.kind == BraidKind::TwoTerm ? 2 : 3;
  if (k < 0 || k + span > static_cast<int>(word.size()))
    throw IllegalMove("move position " + std::to_string(move.position) + " out of range");
  std::vector<Root> order = papi_convex_order(cartan, word);
  ReducedWord out = word;
  auto& w = out.letters;
  if (move.kind == BraidKind::TwoTerm) {
    if (cartan.form(order[k], order[k + 1]) != 0)
      throw IllegalMove("2-term move at " + std::to_string(move.position) + ": " +
                        order[k].str() + " and " + order[k + 1].str() + " are not orthogonal");
    std::swap(w[k], w[k + 1]);
    return out;
  }
  // {beta_k, beta_{k+1}, beta_{k+2}} is an A2 triple exactly when the middle
  // root is the sum of the outer two.
  if (order[k + 1] != order[k] + order[k + 2] || w[k] != w[k + 2])
    throw IllegalMove("3-term move at " + std::to_string(move.position) +
                      ": roots do not form an A2 triple");
  if (move.triple) {
    const auto& t = *move.triple;
    if (t[0] != order[k] || t[1] != order[k + 1] || t[2] != order[k + 2])
      throw IllegalMove("3-term move at " + std::to_string(move.position) +
                        ": triple does not match the word");
  }
  std::swap(w[k], w[k + 1]);
  w[k + 2] = w[k];
  return out;
}

namespace {

using Mask = std::uint64_t;

// A word together with the identity (original 0-based position) of the root
// each letter carries.
struct State {
  std::vector<Node> letters;
  std::vector<int> ids;
};

class Deriver {
 public:
  Deriver(const CartanData& cartan, const std::vector<Root>& roots)
      : cartan_(cartan), roots_(roots) {}

  bool commute(Node x, Node y) const { return x != y && !cartan_.adjacent(x, y); }

  // below[q] = positions p that must precede q in every commutation-equivalent word.
  std::vector<Mask> heap(const State& s) const {
    std::vector<Mask> below(s.letters.size(), 0);
    for (std::size_t q = 0; q < s.letters.size(); ++q)
      for (std::size_t p = 0; p < q; ++p)
        if (!commute(s.letters[p], s.letters[q])) below[q] |= (Mask{1} << p) | below[p];
    return below;
  }

  // Lexicographically smallest word in the commutation class, as an order of
  // current positions.
  std::vector<int> canonical_order(const State& s) const {
    const int n = static_cast<int>(s.letters.size());
    std::vector<Mask> below = heap(s);
    std::vector<int> order;
    Mask placed = 0;
    while (static_cast<int>(order.size()) < n) {
      int best = -1;
      for (int p = 0; p < n; ++p) {
        if (placed >> p & 1) continue;
        if ((below[p] & ~placed) != 0) continue;
        if (best < 0 || s.letters[p] < s.letters[best]) best = p;
      }
      placed |= Mask{1} << best;
      order.push_back(best);
    }
    return order;
  }

  // Reorders s into `order` by adjacent transpositions of commuting letters.
  void rearrange(State& s, const std::vector<int>& order, std::vector<BraidMove>* moves) const {
    const int n = static_cast<int>(s.letters.size());
    std::vector<int> rank(n);
    for (int k = 0; k < n; ++k) rank[order[k]] = k;
    for (int pass = 0; pass < n; ++pass) {
      bool swapped = false;
      for (int k = 0; k + 1 < n; ++k) {
        if (rank[k] <= rank[k + 1]) continue;
        if (!commute(s.letters[k], s.letters[k + 1]))
          throw IllegalMove("internal: reordering crosses non-commuting letters");
        std::swap(rank[k], rank[k + 1]);
        std::swap(s.letters[k], s.letters[k + 1]);
        std::swap(s.ids[k], s.ids[k + 1]);
        if (moves) moves->push_back(BraidMove{BraidKind::TwoTerm, k + 1, std::nullopt});
        swapped = true;
      }
      if (!swapped) break;
    }
  }

  struct Candidate {
    std::vector<int> order;  // brings the triple together
    int first;               // index of the triple in that order
  };

  // Every restricted 3-term move available in the commutation class of s.
  std::vector<Candidate> candidates(const State& s, int alpha_id) const {
    std::vector<Candidate> out;
    const int n = static_cast<int>(s.letters.size());
    const int c = static_cast<int>(std::find(s.ids.begin(), s.ids.end(), alpha_id) - s.ids.begin());
    const Node x = s.letters[c];
    std::vector<Mask> below = heap(s);
    int a = c - 1;
    while (a >= 0 && s.letters[a] != x) --a;
    if (a < 0) return out;
    for (int b = a + 1; b < c; ++b) {
      if (!cartan_.adjacent(s.letters[b], x)) continue;
      Mask up = 0;
      Mask down = 0;
      for (int z = a + 1; z < c; ++z) {
        if (z == b) continue;
        Mask bit = Mask{1} << z;
        if (below[z] & ((Mask{1} << a) | (Mask{1} << b))) up |= bit;
        if ((below[b] | below[c]) & bit) down |= bit;
      }
      if (up & down) continue;
      Candidate cand;
      for (int z = 0; z < a; ++z) cand.order.push_back(z);
      for (int z = a + 1; z < c; ++z)
        if (z != b && !(up >> z & 1)) cand.order.push_back(z);
      cand.first = static_cast<int>(cand.order.size());
      cand.order.insert(cand.order.end(), {a, b, c});
      for (int z = a + 1; z < c; ++z)
        if (up >> z & 1) cand.order.push_back(z);
      for (int z = c + 1; z < n; ++z) cand.order.push_back(z);
      out.push_back(std::move(cand));
    }
    return out;
  }

  // Applies the 3-term move at 0-based index k; returns (gamma', gamma) ids.
  std::pair<int, int> three_term(State& s, int k, std::vector<BraidMove>* moves) const {
    const int ga = s.ids[k];
    const int gb = s.ids[k + 1];
    const int gc = s.ids[k + 2];
    if (moves)
      moves->push_back(BraidMove{BraidKind::ThreeTerm, k + 1,
                                 std::array<Root, 3>{roots_[ga], roots_[gb], roots_[gc]}});
    Node x = s.letters[k];
    Node y = s.letters[k + 1];
    s.letters[k] = y;
    s.letters[k + 1] = x;
    s.letters[k + 2] = y;
    s.ids[k] = gc;
    s.ids[k + 2] = ga;
    return {gb, ga};
  }

  bool at_front_possible(const State& s, int alpha_id) const {
    std::vector<Mask> below = heap(s);
    auto c = std::find(s.ids.begin(), s.ids.end(), alpha_id) - s.ids.begin();
    return below[c] == 0;
  }

 private:
  const CartanData& cartan_;
  const std::vector<Root>& roots_;
};

}  // namespace

SigmaDerivation derive_sigma_table(const CartanData& cartan, const ReducedWord& word, Node i,
                                   int limit) {
  if (i < 1 || i > cartan.rank()) throw NotSimplyBraided("node " + std::to_string(i) + " out of range");
  if (word.size() > 64) throw NotSimplyBraided("word longer than 64 letters is not supported");
  const std::vector<Root> roots = papi_convex_order(cartan, word);
  const Root alpha = cartan.simple_root(i);
  auto found = std::find(roots.begin(), roots.end(), alpha);
  if (found == roots.end())
    throw NotSimplyBraided("alpha_" + std::to_string(i) + " is not an inversion of the word");
  const int alpha_id = static_cast<int>(found - roots.begin());

  Deriver d(cartan, roots);
  State start{word.letters, {}};
  for (int k = 0; k < static_cast<int>(word.size()); ++k) start.ids.push_back(k);

  struct Visit {
    State state;
    int parent;
    int candidate;  // index into the parent's candidate list
  };
  std::vector<Visit> visits;
  std::map<std::vector<Node>, int> index;
  State root = start;
  d.rearrange(root, d.canonical_order(root), nullptr);
  visits.push_back({root, -1, -1});
  index.emplace(root.letters, 0);

  int goal = -1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (d.at_front_possible(visits[v].state, alpha_id)) {
      goal = v;
      break;
    }
    std::vector<Deriver::Candidate> cands = d.candidates(visits[v].state, alpha_id);
    for (int ci = 0; ci < static_cast<int>(cands.size()); ++ci) {
      State next = visits[v].state;
      d.rearrange(next, cands[ci].order, nullptr);
      d.three_term(next, cands[ci].first, nullptr);
      d.rearrange(next, d.canonical_order(next), nullptr);
      if (index.emplace(next.letters, static_cast<int>(visits.size())).second) {
        visits.push_back({std::move(next), v, ci});
        queue.push_back(static_cast<int>(visits.size()) - 1);
      }
    }
  }
  if (goal < 0)
    throw NotSimplyBraided("no restricted braid-move sequence brings " + std::to_string(i) +
                           " to the front");

  std::vector<int> path;
  for (int v = goal; v > 0; v = visits[v].parent) path.push_back(v);
  std::reverse(path.begin(), path.end());

  // Replay along the path, this time recording every move.
  SigmaDerivation result;
  State s = start;
  d.rearrange(s, d.canonical_order(s), &result.moves);
  for (int v : path) {
    Deriver::Candidate cand = d.candidates(s, alpha_id)[visits[v].candidate];
    d.rearrange(s, cand.order, &result.moves);
    auto [minus, plus] = d.three_term(s, cand.first, &result.moves);
    if (roots[minus] != roots[plus] + alpha)
      throw NotSimplyBraided("internal: recorded triple does not differ by alpha_i");
    if (limit == 0 || (minus < limit && plus < limit)) result.pairs.push_back({minus + 1, plus + 1});
    d.rearrange(s, d.canonical_order(s), &result.moves);
  }
  std::vector<int> to_front{static_cast<int>(std::find(s.ids.begin(), s.ids.end(), alpha_id) - s.ids.begin())};
  for (int k = 0; k < static_cast<int>(s.ids.size()); ++k)
    if (k != to_front.front()) to_front.push_back(k);
  d.rearrange(s, to_front, &result.moves);
  result.final_word = ReducedWord{s.letters};
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const SigmaPair& a, const SigmaPair& b) { return a.plus < b.plus; });
  return result;
}

}  // namespace kr

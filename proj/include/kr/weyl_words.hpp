#pragma once

// Reduced words of the Weyl group: convex orders, braid moves and the
// derivation of signature tables for simply braided words.

#include <array>
#include <optional>
#include <vector>

#include "kr/root_data.hpp"

namespace kr {

struct ReducedWord {
  std::vector<Node> letters;

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// beta_k = s_{i_1} ... s_{i_{k-1}} alpha_{i_k}.  Throws NotReduced if some
/// beta_k is not a positive root or repeats an earlier one.
std::vector<Root> papi_convex_order(const CartanData& cartan, const ReducedWord& word);

enum class BraidKind { TwoTerm, ThreeTerm };

struct BraidMove {
  BraidKind kind = BraidKind::TwoTerm;
  int position = 1;  // 1-based index k of the first affected letter
  /// (gamma, gamma', gamma'') = (beta_k, beta_{k+1}, beta_{k+2}) for a 3-term
  /// move.  Filled in by the derivation; optional when applying a move.
  std::optional<std::array<Root, 3>> triple;
};

/// Rewrites the word by one braid move.  Throws IllegalMove when the move is
/// not legal at the given position (non-orthogonal pair, or not an A2 triple).
ReducedWord apply_braid_move(const CartanData& cartan, const ReducedWord& word,
                             const BraidMove& move);

struct SigmaDerivation {
  /// (minus, plus) = (position of gamma', position of gamma) in the convex
  /// order of the input word, listed by increasing position.
  std::vector<SigmaPair> pairs;
  /// Explicit move sequence turning the input word into final_word.
  std::vector<BraidMove> moves;
  ReducedWord final_word;  // starts with the letter i
};

/// Searches for a sequence of 2-term moves and 3-term moves whose third root is
/// alpha_i that brings i to the front of the word.  Only pairs whose positions
/// are at most `limit` are reported (0 means no limit).  Throws
/// NotSimplyBraided when no such sequence exists or alpha_i is not an
/// inversion of the word.
SigmaDerivation derive_sigma_table(const CartanData& cartan, const ReducedWord& word, Node i,
                                   int limit = 0);

}  // namespace kr

#pragma once

// The classical crystal B^{J0}: exponent vectors with Kashiwara operators
// f_i, e_i (i in I0) given by the signature rule.

#include <cstdint>
#include <optional>
#include <vector>

#include "kr/pbw_element.hpp"
#include "kr/root_data.hpp"
#include "kr/trail.hpp"

namespace kr {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

struct SignatureRun {
  Sign sign;
  int multiplicity;
  Position source;  // position of c whose entry gives the multiplicity
  int pair;         // index of the sigma pair the run belongs to

  friend bool operator==(const SignatureRun&, const SignatureRun&) = default;
};

struct Signature {
  std::vector<SignatureRun> runs;

  int count(Sign sign) const;
};

/// Cancels every (+, -) pair, leaving a block of - runs followed by a block of
/// + runs.  Zero runs are dropped; surviving runs keep their sources.
Signature reduce_signature(const Signature& signature);

struct StringLengths {
  int phi;
  int eps;

  friend bool operator==(const StringLengths&, const StringLengths&) = default;
};

class PbwCrystal {
 public:
  explicit PbwCrystal(AlgebraCase algebra);

  const CaseTables& tables() const { return *tables_; }
  const CartanData& cartan() const { return tables_->cartan(); }
  const TrailFunctionals& trails() const { return trails_; }
  AlgebraCase algebra() const { return tables_->algebra; }
  Node node() const { return tables_->algebra.node; }
  int rank() const { return cartan().rank(); }
  int size() const { return tables_->size(); }
  PbwElement zero() const { return PbwElement(size()); }

  /// (-^{c_minus} +^{c_plus})... over the sigma pairs of i in J0.
  Signature sigma(const PbwElement& c, Node i) const;

  std::optional<PbwElement> f(const PbwElement& c, Node i) const;
  std::optional<PbwElement> e(const PbwElement& c, Node i) const;

  /// String lengths by repeated application.  For i = r the f-string stops
  /// when leaving the level set epsilon_r^* <= level.
  StringLengths phi_eps_string(const PbwElement& c, Node i, int level) const;

  /// level * Lambda-bar_r - sum_k c_k beta_k in the fundamental weight basis.
  ClassicalWeight classical_weight(const PbwElement& c, int level) const;

  int epsilon_r_star(const PbwElement& c) const { return trails_.epsilon_r_star(c); }

  /// <alpha_i^vee, beta_k> for i in 0..n.
  int pairing(Node i, Position k) const { return pairing_[i][k - 1]; }

 private:
  void check_node(Node i) const;

  const CaseTables* tables_;
  TrailFunctionals trails_;
  std::vector<std::vector<int>> pairing_;
};

}  // namespace kr

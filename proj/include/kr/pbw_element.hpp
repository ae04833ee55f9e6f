#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kr/root_data.hpp"

namespace kr {

/// Exponent vector c = (c_1, ..., c_N) over a convex-ordered Phi+(J0),
/// N <= 27.  Entries are accessed by 1-based position.
class PbwElement {
 public:
  static constexpr int kMaxSize = 27;

  PbwElement() = default;
  explicit PbwElement(int size) : size_(static_cast<std::uint8_t>(size)) {}
  static PbwElement from_vector(const std::vector<int>& entries);
  /// Element with a 1 at each listed position.
  static PbwElement indicator(int size, const std::vector<Position>& positions);

  int size() const { return size_; }
  int at(Position p) const { return entries_[p - 1]; }
  void set(Position p, int value) { entries_[p - 1] = static_cast<std::uint16_t>(value); }
  void add(Position p, int delta) { entries_[p - 1] = static_cast<std::uint16_t>(entries_[p - 1] + delta); }

  bool is_zero() const;
  int total() const;
  std::vector<int> to_vector() const;
  /// Positions listed with multiplicity, e.g. "{1,12}" or "{16,16}".
  std::string position_set() const;
  std::size_t hash() const;

  friend bool operator==(const PbwElement&, const PbwElement&) = default;
  friend auto operator<=>(const PbwElement&, const PbwElement&) = default;

 private:
  std::uint8_t size_ = 0;
  std::array<std::uint16_t, kMaxSize> entries_{};
};

}  // namespace kr

template <>
struct std::hash<kr::PbwElement> {
  std::size_t operator()(const kr::PbwElement& c) const noexcept { return c.hash(); }
};

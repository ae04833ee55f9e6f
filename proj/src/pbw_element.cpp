#include "kr/pbw_element.hpp"

#include <numeric>

#include "kr/errors.hpp"

namespace kr {

PbwElement PbwElement::from_vector(const std::vector<int>& entries) {
  if (entries.size() > static_cast<std::size_t>(kMaxSize))
    throw Error("exponent vector longer than " + std::to_string(kMaxSize));
  PbwElement c(static_cast<int>(entries.size()));
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] < 0) throw Error("exponent vectors have nonnegative entries");
    c.entries_[k] = static_cast<std::uint16_t>(entries[k]);
  }
  return c;
}

PbwElement PbwElement::indicator(int size, const std::vector<Position>& positions) {
  PbwElement c(size);
  for (Position p : positions) c.add(p, 1);
  return c;
}

bool PbwElement::is_zero() const { return total() == 0; }

int PbwElement::total() const {
  return std::accumulate(entries_.begin(), entries_.begin() + size_, 0);
}

std::vector<int> PbwElement::to_vector() const {
  return std::vector<int>(entries_.begin(), entries_.begin() + size_);
}

std::string PbwElement::position_set() const {
  std::string out = "{";
  bool first = true;
  for (int k = 0; k < size_; ++k) {
    for (int m = 0; m < entries_[k]; ++m) {
      if (!first) out += ",";
      out += std::to_string(k + 1);
      first = false;
    }
  }
  return out + "}";
}

std::size_t PbwElement::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int k = 0; k < size_; ++k) {
    h ^= entries_[k];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace kr

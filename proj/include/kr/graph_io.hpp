#pragma once

// JSON and DOT serialization of enumerated crystals and perfectness reports.

#include <string>
#include <vector>

#include "kr/crystal_graph.hpp"
#include "kr/kr_crystal.hpp"
#include "kr/perfectness.hpp"

namespace kr {

inline constexpr int kSchemaVersion = 1;

struct GraphDocument {
  AlgebraCase algebra;
  int level = 1;
  std::vector<std::vector<int>> elements;
  std::vector<Edge> edges;  // f-arrows, sorted

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

GraphDocument document_of(const EnumeratedCrystal& crystal);

std::string to_json(const GraphDocument& doc);
/// Throws Error on malformed input or an unsupported schema version.
GraphDocument parse_graph_json(const std::string& text);
std::string to_dot(const GraphDocument& doc);

std::string report_to_json(const PerfectnessReport& report);

/// Element and edge comparison of an enumerated crystal with a printed graph.
struct ReferenceComparison {
  std::vector<std::vector<Position>> missing_boxes;  // printed but not enumerated
  int unmatched_elements = 0;                        // enumerated but not printed
  std::vector<Edge> missing_edges;                   // printed, in box numbering
  std::vector<Edge> unexpected_edges;                // enumerated, in box numbering

  bool exact() const {
    return missing_boxes.empty() && unmatched_elements == 0 && missing_edges.empty() &&
           unexpected_edges.empty();
  }
};

ReferenceComparison compare_with_reference(const EnumeratedCrystal& crystal,
                                           const ReferenceGraph& reference);

/// The printed graph as a crystal over I0 (and node 0 when `with_zero_arrows`);
/// element k is box k+1.
CrystalGraph reference_crystal_graph(const ReferenceGraph& reference, int rank,
                                     bool with_zero_arrows);

}  // namespace kr

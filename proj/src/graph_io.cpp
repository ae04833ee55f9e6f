#include "kr/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kr/errors.hpp"

namespace kr {

using nlohmann::json;

GraphDocument document_of(const EnumeratedCrystal& crystal) {
  GraphDocument doc;
  doc.algebra = crystal.algebra;
  doc.level = crystal.level;
  for (const PbwElement& c : crystal.elements) doc.elements.push_back(c.to_vector());
  doc.edges = crystal.graph.edges();
  return doc;
}

std::string to_json(const GraphDocument& doc) {
  json edges = json::array();
  for (const Edge& e : doc.edges) edges.push_back({{"src", e.src}, {"dst", e.dst}, {"label", e.label}});
  json out = {
      {"schema_version", kSchemaVersion},
      {"algebra", std::string(family_name(doc.algebra.family))},
      {"node", doc.algebra.node},
      {"level", doc.level},
      {"elements", doc.elements},
      {"edges", edges},
  };
  return out.dump(1) + "\n";
}

GraphDocument parse_graph_json(const std::string& text) {
  try {
    json in = json::parse(text);
    if (in.at("schema_version").get<int>() != kSchemaVersion)
      throw Error("unsupported schema_version " + in.at("schema_version").dump());
    GraphDocument doc;
    doc.algebra = AlgebraCase::make(parse_family(in.at("algebra").get<std::string>()),
                                    in.at("node").get<int>());
    doc.level = in.at("level").get<int>();
    doc.elements = in.at("elements").get<std::vector<std::vector<int>>>();
    for (const json& e : in.at("edges"))
      doc.edges.push_back({e.at("src").get<int>(), e.at("dst").get<int>(), e.at("label").get<int>()});
    const int n = static_cast<int>(doc.elements.size());
    for (const Edge& e : doc.edges)
      if (e.src < 0 || e.dst < 0 || e.src >= n || e.dst >= n)
        throw Error("edge endpoint out of range");
    return doc;
  } catch (const json::exception& ex) {
    throw Error(std::string("malformed graph JSON: ") + ex.what());
  }
}

std::string to_dot(const GraphDocument& doc) {
  std::ostringstream os;
  os << "digraph \"" << doc.algebra.name() << " s=" << doc.level << "\" {\n";
  for (std::size_t v = 0; v < doc.elements.size(); ++v)
    os << "  n" << v << " [label=\"" << PbwElement::from_vector(doc.elements[v]).position_set()
       << "\"];\n";
  for (const Edge& e : doc.edges)
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

json weights_json(const std::vector<AffineWeight>& weights) {
  json out = json::array();
  for (const AffineWeight& w : weights) out.push_back(w.coeffs);
  return out;
}

json bijection_json(const BijectionReport& b) {
  return {{"bijective", b.bijective},
          {"missing", weights_json(b.missing)},
          {"duplicated", weights_json(b.duplicated)}};
}

}  // namespace

std::string report_to_json(const PerfectnessReport& r) {
  json out = {
      {"schema_version", kSchemaVersion},
      {"algebra", std::string(family_name(r.algebra.family))},
      {"node", r.algebra.node},
      {"level", r.level},
      {"crystal_size", r.crystal_size},
      {"delta_source", r.delta_source},
      {"p1", r.p1},
      {"perfect", r.perfect()},
  };
  if (r.checked(kCheckP2))
    out["p2"] = {{"connected", r.p2_connected},
                 {"components", r.p2_components},
                 {"product_size", r.p2_product_size}};
  if (r.checked(kCheckP3))
    out["p3"] = {{"unique", r.p3_unique}, {"multiplicity", r.p3_multiplicity}};
  if (r.checked(kCheckP4))
    out["p4"] = {{"min_level", r.p4_min_level}, {"min_phi_level", r.p4_min_phi_level}};
  if (r.checked(kCheckP5))
    out["p5"] = {{"minimal_count", r.minimal_count},
                 {"dominant_weight_count", r.dominant_weight_count},
                 {"eps", bijection_json(r.p5_eps)},
                 {"phi", bijection_json(r.p5_phi)}};
  return out.dump(1) + "\n";
}

ReferenceComparison compare_with_reference(const EnumeratedCrystal& crystal,
                                           const ReferenceGraph& reference) {
  ReferenceComparison out;
  const int width = crystal.elements.empty() ? 0 : crystal.elements.front().size();
  std::vector<int> box_of(crystal.size(), -1);
  for (std::size_t k = 0; k < reference.boxes.size(); ++k) {
    int v = crystal.index_of(PbwElement::indicator(width, reference.boxes[k]));
    if (v < 0) out.missing_boxes.push_back(reference.boxes[k]);
    else box_of[v] = static_cast<int>(k) + 1;
  }
  out.unmatched_elements = static_cast<int>(std::count(box_of.begin(), box_of.end(), -1));

  std::set<Edge> printed;
  for (const ReferenceEdge& e : reference.classical_edges) printed.insert({e.src, e.dst, e.label});
  for (const ReferenceEdge& e : reference.zero_edges) printed.insert({e.src, e.dst, e.label});
  std::set<Edge> computed;
  for (const Edge& e : crystal.graph.edges())
    if (box_of[e.src] > 0 && box_of[e.dst] > 0) computed.insert({box_of[e.src], box_of[e.dst], e.label});
  std::set_difference(printed.begin(), printed.end(), computed.begin(), computed.end(),
                      std::back_inserter(out.missing_edges));
  std::set_difference(computed.begin(), computed.end(), printed.begin(), printed.end(),
                      std::back_inserter(out.unexpected_edges));
  return out;
}

CrystalGraph reference_crystal_graph(const ReferenceGraph& reference, int rank,
                                     bool with_zero_arrows) {
  std::vector<Node> labels;
  for (Node i = with_zero_arrows ? 0 : 1; i <= rank; ++i) labels.push_back(i);
  CrystalGraph graph(rank, labels, static_cast<int>(reference.boxes.size()));
  for (const ReferenceEdge& e : reference.classical_edges) graph.add_arrow(e.label, e.src - 1, e.dst - 1);
  if (with_zero_arrows)
    for (const ReferenceEdge& e : reference.zero_edges) graph.add_arrow(0, e.src - 1, e.dst - 1);
  graph.finalize();
  return graph;
}

}  // namespace kr

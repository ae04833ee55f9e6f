#include <doctest.h>

#include "kr/errors.hpp"
#include "kr/graph_io.hpp"

using namespace kr;

namespace {

AlgebraCase e6r1() { return AlgebraCase::make(Family::E6, 1); }
AlgebraCase e7() { return AlgebraCase::make(Family::E7, 7); }

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("enumerated s = 1 crystals equal the printed graphs") {
  for (AlgebraCase algebra : {e6r1(), e7()}) {
    EnumeratedCrystal crystal = enumerate_crystal(algebra, 1);
    ReferenceComparison cmp = compare_with_reference(crystal, *validated_tables(algebra).reference);
    CAPTURE(algebra.name());
    CHECK(cmp.exact());
    CHECK(cmp.missing_boxes.empty());
    CHECK(cmp.missing_edges.empty());
    CHECK(cmp.unexpected_edges.empty());
  }
}

TEST_CASE("comparison reports differences") {
  EnumeratedCrystal crystal = enumerate_crystal(e6r1(), 1);
  ReferenceGraph reference = *validated_tables(e6r1()).reference;
  reference.classical_edges.pop_back();
  ReferenceComparison cmp = compare_with_reference(crystal, reference);
  CHECK_FALSE(cmp.exact());
  CHECK(cmp.unexpected_edges.size() == 1);
}

TEST_CASE("json round trip and determinism") {
  GraphDocument doc = document_of(enumerate_crystal(e6r1(), 2));
  std::string text = to_json(doc);
  CHECK(parse_graph_json(text) == doc);
  CHECK(to_json(document_of(enumerate_crystal(e6r1(), 2))) == text);
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(doc.elements.size() == 351);
  CHECK(doc.elements.front() == std::vector<int>(16, 0));
  CHECK(std::is_sorted(doc.edges.begin(), doc.edges.end()));
}

TEST_CASE("json parse errors") {
  CHECK_THROWS_AS(parse_graph_json("not json"), Error);
  CHECK_THROWS_AS(parse_graph_json("{}"), Error);
  std::string text = to_json(document_of(enumerate_crystal(e6r1(), 1)));
  std::string wrong = text;
  wrong.replace(wrong.find("\"schema_version\": 1"), 19, "\"schema_version\": 9");
  CHECK_THROWS_AS(parse_graph_json(wrong), Error);
}

TEST_CASE("dot export") {
  GraphDocument doc = document_of(enumerate_crystal(e6r1(), 1));
  std::string dot = to_dot(doc);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("n0 [label=\"{}\"]") != std::string::npos);
  CHECK(count(dot, "->") == static_cast<int>(doc.edges.size()));
  const ReferenceGraph& reference = *validated_tables(e6r1()).reference;
  CHECK(doc.edges.size() == reference.classical_edges.size() + reference.zero_edges.size());
}

TEST_CASE("report json") {
  std::string text = report_to_json(verify_perfect(e6r1(), 1));
  CHECK(text.find("\"perfect\": true") != std::string::npos);
  CHECK(text.find("\"schema_version\": 1") != std::string::npos);
  CHECK(text.find("\"product_size\": 729") != std::string::npos);
}

#include "transversal/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "transversal/engine.hpp"

namespace transversal {
namespace {

using testing::oracle_corpus;

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string ErrorOf(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

bool Contains(const std::string& haystack, std::string_view needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(InstanceIoTest, ParsesShippedK3) {
  const auto doc = load_instance(std::string(TRANSVERSAL_DATA_DIR) + "/k3_fig2.json");
  EXPECT_EQ(doc.name, "k3_fig2");
  EXPECT_EQ(doc.labels, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(doc.instance, testing::k3_fig2());
  EXPECT_EQ(doc.label(2), "c");
}

TEST(InstanceIoTest, LoopsAndEmptyEdgeLists) {
  const auto doc = parse_instance(
      R"({"r": 2, "vertices": ["x"], "edges": [{"tail": "x", "head": "x", "perm": [2, 1]}]})");
  EXPECT_EQ(doc.instance.base().loop_count(), 1u);
  const auto bare = parse_instance(R"({"r": 4, "vertices": ["p", "q"], "edges": []})");
  EXPECT_EQ(bare.instance.edge_count(), 0u);
  EXPECT_FALSE(bare.name.has_value());
}

TEST(InstanceIoTest, ErrorsNameTheField) {
  EXPECT_TRUE(Contains(ErrorOf("{"), "malformed JSON"));
  EXPECT_TRUE(Contains(ErrorOf("[]"), "expected a JSON object"));
  EXPECT_TRUE(Contains(ErrorOf(R"({"vertices": [], "edges": []})"), "missing \"r\""));
  EXPECT_TRUE(Contains(ErrorOf(R"({"r": 0, "vertices": [], "edges": []})"), "r:"));
  EXPECT_TRUE(Contains(ErrorOf(R"({"r": 2, "vertices": ["a", "a"], "edges": []})"), "duplicate label"));
  EXPECT_TRUE(Contains(ErrorOf(R"({"r": 2, "vertices": ["a"], "edges": [], "colour": 1})"),
                       "unknown key \"colour\""));
  EXPECT_TRUE(Contains(
      ErrorOf(R"({"r": 2, "vertices": ["a"], "edges": [{"tail": "a", "head": "z", "perm": [1, 2]}]})"),
      "edges[0].head: unknown vertex \"z\""));
  EXPECT_TRUE(Contains(
      ErrorOf(R"({"r": 3, "vertices": ["a", "b"], "edges": [{"tail": "a", "head": "b", "perm": [1, 2]}]})"),
      "wrong length"));
  EXPECT_TRUE(Contains(
      ErrorOf(R"({"r": 3, "vertices": ["a", "b"], "edges": [{"tail": "a", "head": "b", "perm": [1, 1, 2]}]})"),
      "edges[0].perm: not a bijection"));
  EXPECT_TRUE(Contains(
      ErrorOf(R"({"r": 2, "vertices": ["a", "b"], "edges": [{"tail": "a", "head": "b", "perm": [0, 1]}]})"),
      "outside"));
  EXPECT_TRUE(Contains(
      ErrorOf(R"({"r": 2, "vertices": ["a", "b"], "edges": [{"tail": "a", "head": "b"}]})"),
      "missing \"perm\""));
  EXPECT_THROW(load_instance("/nonexistent/instance.json"), ParseError);
}

TEST(InstanceIoTest, SerializationIsCanonical) {
  const auto doc = load_instance(std::string(TRANSVERSAL_DATA_DIR) + "/k3_fig2.json");
  const std::string text = serialize(doc);
  EXPECT_EQ(text, Slurp(std::string(TRANSVERSAL_DATA_DIR) + "/k3_fig2.json"));
  EXPECT_EQ(serialize(parse_instance(text)), text);
}

TEST(InstanceIoPropertyTest, RoundTripPreservesInstanceAndPolynomial) {
  for (const auto& c : oracle_corpus(100, 81)) {
    const std::string text = serialize(c);
    const auto back = parse_instance(text);
    EXPECT_EQ(back.instance, c);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(xi_dc(back.instance).poly(), xi_dc(c).poly());
  }
}

TEST(InstanceIoTest, ProvenanceSurvivesRoundTrip) {
  auto doc = with_default_labels(testing::k3_fig2());
  doc.name = "demo";
  doc.provenance_json = R"({"seed":4})";
  const auto back = parse_instance(serialize(doc));
  EXPECT_EQ(back.name, "demo");
  EXPECT_EQ(back.provenance_json, R"({"seed":4})");
}

TEST(GraphIoTest, ExpansionDocumentFeedsTheValidator) {
  const auto doc = load_instance(std::string(TRANSVERSAL_DATA_DIR) + "/k4_cube_fig1.json");
  const auto x = expand(doc.instance);
  const std::string text = serialize_expansion(doc, x);
  const auto cover = parse_graph(text);
  const auto base = parse_graph(serialize(doc));
  EXPECT_EQ(cover.graph.vertex_count(), 8u);
  EXPECT_EQ(cover.graph.edge_count(), 12u);
  EXPECT_EQ(cover.labels[0], "a:1");
  const auto h = parse_vertex_map(text, cover, base);
  EXPECT_EQ(h.size(), 8u);
  EXPECT_TRUE(validate_covering_map(cover.graph, base.graph, h).valid);
}

TEST(GraphIoTest, MapErrors) {
  const auto g = parse_graph(R"({"vertices": ["a", "b"], "edges": [{"tail": "a", "head": "b"}]})");
  EXPECT_THROW(parse_vertex_map(R"({"q": "a"})", g, g), ParseError);
  EXPECT_THROW(parse_vertex_map(R"({"a": "q"})", g, g), ParseError);
  EXPECT_THROW(parse_vertex_map(R"({"a": 1})", g, g), ParseError);
  EXPECT_THROW(parse_vertex_map("[]", g, g), ParseError);
  EXPECT_EQ(parse_vertex_map(R"({"a": "b", "b": "a"})", g, g), (VertexMap{{0, 1}, {1, 0}}));
}

}  // namespace
}  // namespace transversal

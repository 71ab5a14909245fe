#include <doctest.h>

#include <algorithm>
#include <random>

#include "listcolor/catalog.hpp"
#include "listcolor/nullstellensatz.hpp"
#include "listcolor/text_format.hpp"
#include "support/fixtures.hpp"

using namespace lc;

namespace {

const OrientedEdgeList kS1Edges{{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}};
const OrientedEdgeList kTriangle{{0, 1}, {1, 2}, {2, 0}};

Configuration s1() { return find_entry(builtin_catalog(), "S1")->configuration; }

Configuration with_caps(Graph g, CapVector caps) {
  Configuration c;
  c.name = "custom";
  c.full_degree.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) c.full_degree[v] = std::max(1, g.degree(v));
  c.internal = std::move(g);
  c.explicit_caps = std::move(caps);
  return c;
}

OrientedEdgeList random_orientation(std::mt19937_64& rng, const Graph& g) {
  OrientedEdgeList out;
  for (auto [u, v] : g.edges()) {
    if (rng() & 1) std::swap(u, v);
    out.push_back({u, v});
  }
  return out;
}

}  // namespace

TEST_CASE("derive_caps") {
  CHECK(derive_caps(s1()) == CapVector{1, 2, 1, 1, 1});

  Configuration isolated;
  isolated.internal = build_graph(1, {});
  isolated.full_degree = {4};
  CHECK_THROWS_AS(derive_caps(isolated), UncheckableConfiguration);

  Configuration edge;
  edge.internal = build_graph(2, {{0, 1}});
  edge.full_degree = {4, 4};
  CHECK(derive_caps(edge) == CapVector{0, 0});

  Configuration explicit_caps = with_caps(build_graph(3, {{0, 1}, {1, 2}, {0, 2}}), {2, 1, 1});
  CHECK(derive_caps(explicit_caps) == CapVector{2, 1, 1});

  Configuration bad = edge;
  bad.full_degree = {0, 4};
  CHECK_THROWS_AS(derive_caps(bad), std::invalid_argument);
  bad.full_degree = {4, 4};
  bad.k = 0;
  CHECK_THROWS_AS(derive_caps(bad), std::invalid_argument);
}

TEST_CASE("expand examples") {
  CHECK(expand({{0, 1}}, {1, 1}) == ExpansionTable{{{1, 0}, 1}, {{0, 1}, -1}});
  CHECK(expand(kTriangle, {1, 1, 1}).empty());

  ExpansionTable s1_table = expand(kS1Edges, {1, 2, 1, 1, 1});
  REQUIRE(s1_table.size() == 1);
  CHECK(s1_table.begin()->first == Exponent{1, 2, 1, 1, 1});
  // Coefficient of x0 x1^2 x2 x3 x4, checked against naive_expand and an
  // independent symbolic expansion.
  CHECK(s1_table.begin()->second == 1);

  // (x0-x1)(x1-x2)(x2-x0) restricted to exponents <= (2,1,1).
  CHECK(expand(kTriangle, {2, 1, 1}) == ExpansionTable{{{2, 0, 1}, 1}, {{2, 1, 0}, -1}});

  CHECK(expand({}, {0, 0}) == ExpansionTable{{{0, 0}, 1}});
  CHECK_THROWS_AS(expand({{0, 2}}, {1, 1}), std::out_of_range);
  CHECK_THROWS_AS(expand({{0, 0}}, {1, 1}), std::invalid_argument);
}

TEST_CASE("expand with uncapped budget equals the full polynomial") {
  ExpansionTable full = expand(kTriangle, {3, 3, 3});
  CHECK(full == ExpansionTable{{{0, 1, 2}, 1}, {{0, 2, 1}, -1}, {{1, 0, 2}, -1},
                               {{1, 2, 0}, 1},  {{2, 0, 1}, 1},  {{2, 1, 0}, -1}});
}

TEST_CASE("naive_expand matches the incremental expansion") {
  CHECK(naive_expand({{0, 1}}, {1, 1}) == expand({{0, 1}}, {1, 1}));
  CHECK(naive_expand(kTriangle, {1, 1, 1}).empty());
  CHECK(naive_expand(kS1Edges, {1, 2, 1, 1, 1}) == expand(kS1Edges, {1, 2, 1, 1, 1}));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = testing::random_graph(rng, 2 + trial % 5, 0.6);
    if (g.edge_count() > 8) continue;
    CapVector caps(g.vertex_count());
    for (auto& t : caps) t = static_cast<int>(rng() % 4);
    auto edges = random_orientation(rng, g);
    CHECK(naive_expand(edges, caps) == expand(edges, caps));
  }

  OrientedEdgeList many;
  for (int i = 0; i < 17; ++i) many.push_back({0, 1});
  CHECK_THROWS_AS(naive_expand(many, {17, 17}), std::length_error);
}

TEST_CASE("structural invariants of expand") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_graph(rng, 5, 0.5);
    CapVector caps(g.vertex_count());
    for (auto& t : caps) t = static_cast<int>(rng() % 4);
    auto edges = random_orientation(rng, g);
    ExpansionTable table = expand(edges, caps);

    for (const auto& [e, c] : table) {
      CHECK(c != 0);
      int sum = 0;
      for (std::size_t v = 0; v < e.size(); ++v) {
        CHECK(e[v] <= caps[v]);
        sum += e[v];
      }
      CHECK(sum == g.edge_count());
    }

    auto shuffled = edges;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(expand(shuffled, caps) == table);

    if (!edges.empty()) {
      auto flipped = edges;
      auto& e = flipped[rng() % flipped.size()];
      std::swap(e.tail, e.head);
      ExpansionTable negated = expand(flipped, caps);
      REQUIRE(negated.size() == table.size());
      for (const auto& [key, c] : table) CHECK(negated.at(key) == -c);
    }
  }
}

TEST_CASE("is_reducible") {
  auto s1v = is_reducible(s1());
  CHECK(s1v.reducible());
  CHECK(s1v.count() == 1);
  CHECK(s1v.witnesses == std::vector<Exponent>{{1, 2, 1, 1, 1}});

  Graph triangle = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  auto flat = is_reducible(with_caps(triangle, {1, 1, 1}));
  CHECK(flat.status == ReducibilityStatus::inconclusive);
  CHECK(flat.count() == 0);

  auto raised = is_reducible(with_caps(triangle, {2, 1, 1}));
  CHECK(raised.reducible());
  CHECK(raised.witnesses == std::vector<Exponent>{{2, 0, 1}, {2, 1, 0}});

  // Orientation changes signs only.
  auto reversed = is_reducible(s1(), {{1, 0}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(reversed.witnesses == s1v.witnesses);
  CHECK(reversed.table.begin()->second == -1);

  CHECK_THROWS_AS(is_reducible(s1(), {{0, 1}}), std::invalid_argument);

  Configuration isolated;
  isolated.internal = build_graph(1, {});
  isolated.full_degree = {4};
  CHECK_THROWS_AS(is_reducible(isolated), UncheckableConfiguration);
}

TEST_CASE("configuration text format") {
  Configuration c = s1();
  CHECK(c.name == "S1");
  CHECK(c.k == 4);
  CHECK(c.full_degree == std::vector<int>{4, 4, 4, 4, 5});
  CHECK_FALSE(c.explicit_caps.has_value());
  CHECK(parse_configuration(format_configuration(c)) == c);

  Configuration tri = parse_configuration(
      "name tri\nvertices 3\nedge 0 1\nedge 1 2\nedge 2 0\ncaps 1 1 1\n");
  CHECK(tri.explicit_caps == CapVector{1, 1, 1});
  CHECK(tri.full_degree == std::vector<int>{2, 2, 2});
  CHECK(parse_configuration(format_configuration(tri)) == tri);

  auto line_of = [](const char* text) {
    try {
      parse_configuration(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("name x\nvertices 2\nvertex 0 degree 4\nedge 0 1\n") > 0);  // missing degree
  CHECK(line_of("name x\nvertices 2\ncaps 1\n") == 3);
  CHECK(line_of("name x\nvertices 2\nvertex 0 degree 4\nvertex 0 degree 4\n") == 4);
  CHECK(line_of("name x\nvertices 2\nvertex 0 size 4\n") == 3);
  CHECK(line_of("name x\nk 0\n") == 2);
  CHECK(line_of("vertices 1\nvertex 0 degree 1\n") == 1);
  CHECK(line_of("name x\nname y\nvertices 0\n") == 2);
}

TEST_CASE("catalog parsing") {
  auto entries = parse_catalog(
      "name A\nvertices 1\nvertex 0 degree 1\n\nname B\nvertices 2\nedge 0 1\ncaps 0 0\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "A");
  CHECK(entries[1].explicit_caps == CapVector{0, 0});
  CHECK_THROWS_AS(load_catalog("name A\nvertices 0\nname A\nvertices 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_catalog("vertices 0\n"), ParseError);
}

TEST_CASE("shipped catalog") {
  const auto& catalog = builtin_catalog();
  REQUIRE(catalog.size() == 1);
  CHECK(catalog[0].name == "S1");
  CHECK_FALSE(catalog[0].provenance.empty());
  CHECK(catalog[0].configuration.internal ==
        build_graph(5, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  for (const auto& e : catalog) CHECK_NOTHROW(derive_caps(e.configuration));
}

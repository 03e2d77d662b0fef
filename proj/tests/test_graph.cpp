#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "glie/graph.hpp"
#include "oracles.hpp"

using namespace glie;

namespace {

std::string rule_of(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const GraphError& e) {
    return e.rule();
  }
  return "accepted";
}

}  // namespace

TEST_CASE("parse_graph fixtures") {
  SUBCASE("K2") {
    const auto g = parse_graph("a -> b : e1");
    CHECK(g.vertices == std::vector<std::string>{"a", "b"});
    CHECK(g.labels == std::vector<std::string>{"e1"});
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == Edge{0, 1, 0});
  }
  SUBCASE("K3") {
    const auto g = parse_graph(oracle::kK3);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.label_count() == 3);
  }
  SUBCASE("semicolons, comments and blank lines") {
    const auto g = parse_graph("# header\n\na -> b : e1 ; b -> c : e2  # trailing\n\n  z\n");
    CHECK(g.vertices == std::vector<std::string>{"a", "b", "c", "z"});
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("labels may repeat and may reuse vertex names") {
    const auto g = parse_graph(oracle::kStar3Same);
    CHECK(g.label_count() == 1);
    CHECK(parse_graph("a -> b : a").labels == std::vector<std::string>{"a"});
  }
}

TEST_CASE("parse_graph rejections") {
  CHECK(rule_of("a -> a : e1") == "self-loop");
  CHECK(rule_of("a -> b : e1\na -> b : e2") == "duplicate-edge");
  CHECK(rule_of("a -> b : e1\nb -> a : e2") == "antiparallel-edge");
  CHECK(rule_of("a -> b") == "syntax");
  CHECK(rule_of("a b") == "syntax");
  CHECK(rule_of("1a -> b : e") == "syntax");
  CHECK(rule_of("a -> b : e1 : e2") == "syntax");

  try {
    parse_graph("a -> b : e1\n  c => d : e2\n");
    FAIL("expected a syntax error");
  } catch (const GraphError& e) {
    CHECK(e.rule() == "syntax");
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("validate") {
  SUBCASE("K3") {
    const auto r = validate(parse_graph(oracle::kK3));
    CHECK(r.ok);
    CHECK(r.stats.satisfies_h);
    CHECK(r.stats.connected);
    CHECK(r.stats.degrees == std::vector<std::size_t>{2, 2, 2});
  }
  SUBCASE("STAR3_SAME fails (H)") {
    const auto r = validate(parse_graph(oracle::kStar3Same));
    CHECK(r.ok);
    CHECK_FALSE(r.stats.satisfies_h);
    CHECK(r.stats.edge_count == 3);
    CHECK(r.stats.label_count == 1);
  }
  SUBCASE("two components") {
    const auto r = validate(parse_graph("a -> b : e1\nc -> d : e2"));
    CHECK(r.ok);
    CHECK_FALSE(r.stats.connected);
  }
  SUBCASE("edgeless and isolated vertices are flagged, not rejected") {
    const auto r = validate(parse_graph("a\nb\n"));
    CHECK(r.ok);
    CHECK(r.stats.satisfies_h);  // 0 labels == 0 edges
    REQUIRE(r.warnings.size() == 3);
    CHECK(r.warnings[0].rule == "edgeless");
    CHECK(r.warnings[1].rule == "isolated-vertex");
  }
  SUBCASE("hand-built invalid graphs are never ok") {
    LabeledDigraph g;
    g.add_edge("a", "a", "e1");
    CHECK_FALSE(validate(g).ok);

    LabeledDigraph anti;
    anti.add_edge("a", "b", "e1");
    anti.add_edge("b", "a", "e2");
    CHECK_FALSE(validate(anti).ok);

    LabeledDigraph dup;
    dup.add_edge("a", "b", "e1");
    dup.add_edge("a", "b", "e1");
    CHECK_FALSE(validate(dup).ok);

    LabeledDigraph unused = parse_graph("a -> b : e1");
    unused.add_label("ghost");
    const auto r = validate(unused);
    CHECK_FALSE(r.ok);
    CHECK(r.violations[0].rule == "unused-label");

    LabeledDigraph dangling = parse_graph("a -> b : e1");
    dangling.edges.push_back({0, 7, 0});
    CHECK_FALSE(validate(dangling).ok);
  }
}

TEST_CASE("vertex_stats") {
  const auto p3 = vertex_stats(parse_graph(oracle::kP3), "a");
  CHECK(p3.degree == 1);
  CHECK(p3.neighbors == std::vector<std::string>{"b"});

  const auto c4 = vertex_stats(parse_graph(oracle::kC4), "a");
  CHECK(c4.degree == 2);
  CHECK(c4.neighbors == std::vector<std::string>{"b", "d"});
  CHECK(c4.incident_labels == std::vector<std::string>{"e1", "e4"});

  const auto star = vertex_stats(parse_graph(oracle::kStar3Same), "v");
  CHECK(star.degree == 3);
  CHECK(star.incident_labels == std::vector<std::string>{"c", "c", "c"});

  CHECK_THROWS_AS(vertex_stats(parse_graph(oracle::kP3), "zz"), std::out_of_range);
}

TEST_CASE("generate_family") {
  const auto k3 = generate_family(Family::Complete, 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.label_count() == 3);

  const auto c4 = generate_family(Family::Cycle, 4);
  for (std::size_t v = 0; v < 4; ++v) CHECK(degree(c4, v) == 2);

  const auto star = generate_family(Family::StarSameLabel, 3);
  CHECK(star == parse_graph(oracle::kStar3Same));
  CHECK_FALSE(validate(star).stats.satisfies_h);

  CHECK(generate_family(Family::Path, 1).vertex_count() == 1);
  CHECK_THROWS_AS(generate_family(Family::Cycle, 2), std::invalid_argument);
  CHECK_THROWS_AS(generate_family(Family::StarSameLabel, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_family(Family::Complete, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_family(Family::Random, 5), std::invalid_argument);

  CHECK(generate_family(Family::Random, 7, 42) == generate_family(Family::Random, 7, 42));
  CHECK(parse_family("star-same-label") == Family::StarSameLabel);
  CHECK_THROWS_AS(parse_family("wheel"), std::invalid_argument);
}

TEST_CASE("family and random-graph properties") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto kn = generate_family(Family::Complete, n);
    CHECK(kn.edge_count() == n * (n - 1) / 2);
    CHECK(validate(kn).stats.satisfies_h);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = generate_family(Family::Random, 1 + seed % 8, seed);
    CAPTURE(seed);
    const auto report = validate(g);
    CHECK(report.ok);
    CHECK(report.stats.connected);
    CHECK(report.stats.satisfies_h);
    // Handshake lemma.
    const auto& d = report.stats.degrees;
    CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == 2 * g.edge_count());
    // Round trip through the text format.
    CHECK(parse_graph(render_graph(g)) == g);
  }
}

TEST_CASE("render_graph") {
  CHECK(render_graph(parse_graph("a -> b : e1")) == "a -> b : e1\n");
  CHECK(render_graph(generate_family(Family::Cycle, 4)) ==
        "x1 -> x2 : e1\nx2 -> x3 : e2\nx3 -> x4 : e3\nx4 -> x1 : e4\n");

  const auto isolated = parse_graph("a -> b : e1\nz\n");
  const auto text = render_graph(isolated);
  CHECK(text.find("\nz\n") != std::string::npos);
  CHECK(parse_graph(text) == isolated);

  // Declared order that differs from edge order survives the round trip.
  const auto reordered = parse_graph("b\na -> b : e1\n");
  CHECK(parse_graph(render_graph(reordered)) == reordered);
}

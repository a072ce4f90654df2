#include <random>
#include <vector>

#include "banhatti/errors.hpp"
#include "banhatti/graph.hpp"
#include "banhatti/io.hpp"
#include "doctest.h"

using namespace banhatti;

namespace {

std::size_t parse_error_position(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected ParseError");
  return 0;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph construction") {
  Graph g(4, {{1, 0}, {1, 2}, {0, 1}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.edges()[0] == Edge(0, 1));
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.has_edge(0, 3));

  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("degree sum is twice the size") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Graph g = random_graph(rng, 1 + rng() % 15, 0.4);
    std::size_t total = 0;
    for (std::size_t d : g.degrees()) total += d;
    CHECK(total == 2 * g.size());
    for (Vertex v = 0; v < g.order(); ++v) CHECK(g.neighbors(v).size() == g.degree(v));
  }
}

TEST_CASE("parse_graph6 examples") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);

  Graph p3 = parse_graph6("Bg");
  CHECK(p3 == Graph(3, {{0, 1}, {1, 2}}));

  Graph empty = parse_graph6("B?");
  CHECK(empty.order() == 3);
  CHECK(empty.size() == 0);
  CHECK_FALSE(is_connected(empty));

  CHECK(parse_graph6(">>graph6<<Bg\n") == p3);
}

TEST_CASE("graph6 encodings") {
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(to_graph6(path_graph(4)) == "Ch");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(complete_bipartite_graph(2, 3)) == "D]o");

  Graph petersen = parse_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.size() == 15);
  CHECK(degree_summary(petersen).is_regular);
  CHECK(degree_summary(petersen).max_degree == 3);

  // 63 vertices needs the 4-byte size prefix.
  std::string p63 = to_graph6(path_graph(63));
  CHECK(p63.size() == 330);
  CHECK(p63.starts_with("~??~hC"));
  CHECK(parse_graph6(p63) == path_graph(63));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Graph g = random_graph(rng, 1 + rng() % 80, 0.3);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("graph6 errors report byte offsets") {
  CHECK(parse_error_position([] { parse_graph6("B"); }) == 1);          // truncated
  CHECK(parse_error_position([] { parse_graph6("A_?"); }) == 2);        // trailing data
  CHECK(parse_error_position([] { parse_graph6("B g"); }) == 1);        // byte below 63
  CHECK(parse_error_position([] { parse_graph6("A\x7f"); }) == 1);      // byte above 126
  CHECK(parse_error_position([] { parse_graph6("A`"); }) == 1);         // padding bits set
  CHECK_THROWS_AS(parse_graph6(":Fa@x^"), ParseError);                  // sparse6
  CHECK_THROWS_AS(parse_graph6("&A_"), ParseError);                     // digraph6
  CHECK_THROWS_AS(parse_graph6("~~??????????"), ParseError);            // 8-byte size form
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("split_graph6_lines") {
  auto lines = split_graph6_lines("A_\n\nBg\r\nDhc");
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].line_number == 1);
  CHECK(lines[1].line_number == 3);
  CHECK(lines[1].text == "Bg");
  CHECK(lines[2].text == "Dhc");
}

TEST_CASE("parse_edge_list examples") {
  CHECK(parse_edge_list("0 1\n1 2") == path_graph(3));
  Graph k2 = parse_edge_list("0 1\n0 1");
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  CHECK(parse_edge_list("# header\n0,1\n\n1 2  # tail\n") == path_graph(3));
}

TEST_CASE("parse_edge_list errors report lines") {
  CHECK(parse_error_position([] { parse_edge_list("0 0"); }) == 1);
  CHECK(parse_error_position([] { parse_edge_list("0 1\n1 -2"); }) == 2);
  CHECK(parse_error_position([] { parse_edge_list("0 1\n\n1 x"); }) == 3);
  CHECK(parse_error_position([] { parse_edge_list("0 1 2"); }) == 1);
  CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
}

TEST_CASE("complement examples") {
  Graph k4c = complement(complete_graph(4));
  CHECK(k4c.order() == 4);
  CHECK(k4c.size() == 0);

  Graph c5c = complement(cycle_graph(5));
  DegreeSummary s = degree_summary(c5c);
  CHECK(s.is_regular);
  CHECK(s.max_degree == 2);
  CHECK(s.is_connected);
  CHECK(c5c.size() == 5);

  // P4 0-1-2-3 complements to the path 2-0-3-1.
  CHECK(complement(path_graph(4)) == Graph(4, {{2, 0}, {0, 3}, {3, 1}}));
}

TEST_CASE("complement is an involution and flips degrees") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 14;
    Graph g = random_graph(rng, n, 0.5);
    Graph c = complement(g);
    CHECK(complement(c) == g);
    for (Vertex v = 0; v < n; ++v) CHECK(c.degree(v) == n - 1 - g.degree(v));
  }
}

TEST_CASE("degree_summary examples") {
  DegreeSummary star = degree_summary(star_graph(4));
  CHECK(star.order == 4);
  CHECK(star.size == 3);
  CHECK(star.max_degree == 3);
  CHECK(star.min_degree == 1);
  CHECK(star.is_connected);
  CHECK_FALSE(star.is_regular);
  CHECK(star.is_bipartite);
  CHECK(star.is_semiregular_bipartite);
  CHECK(star.degree_sequence == std::vector<std::size_t>{3, 1, 1, 1});

  DegreeSummary c6 = degree_summary(cycle_graph(6));
  CHECK(c6.max_degree == 2);
  CHECK(c6.min_degree == 2);
  CHECK(c6.is_regular);
  CHECK(c6.is_bipartite);

  DegreeSummary p4 = degree_summary(path_graph(4));
  CHECK(p4.max_degree == 2);
  CHECK(p4.min_degree == 1);
  CHECK_FALSE(p4.is_semiregular_bipartite);
}

TEST_CASE("degree_summary flags are consistent") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    DegreeSummary s = degree_summary(random_graph(rng, 1 + rng() % 12, 0.5));
    CHECK(s.is_regular == (s.max_degree == s.min_degree));
    if (s.is_semiregular_bipartite) {
      CHECK(s.is_bipartite);
      CHECK_FALSE(s.is_regular);
    }
    if (s.is_connected && s.size > 0) {
      CHECK(s.min_degree >= 1);
      CHECK(s.max_degree <= s.order - 1);
    }
  }
}

TEST_CASE("is_semiregular_bipartite") {
  CHECK(is_semiregular_bipartite(complete_bipartite_graph(2, 3)));
  CHECK_FALSE(is_semiregular_bipartite(cycle_graph(5)));
  CHECK_FALSE(is_semiregular_bipartite(path_graph(4)));
  CHECK_FALSE(is_semiregular_bipartite(complete_bipartite_graph(3, 3)));
  try {
    is_semiregular_bipartite(Graph(4, {{0, 1}, {2, 3}}));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(e.code() == DomainErrorCode::Disconnected);
  }
}

TEST_CASE("edge_type_counts examples") {
  EdgeTypeCounts p4(path_graph(4));
  CHECK(p4.edges_between(1, 2) == 2);
  CHECK(p4.edges_between(2, 1) == 2);
  CHECK(p4.edges_between(2, 2) == 1);
  CHECK(p4.vertices_of_degree(1) == 2);
  CHECK(p4.vertices_of_degree(2) == 2);

  EdgeTypeCounts star(star_graph(4));
  CHECK(star.edges_between(1, 3) == 3);
  CHECK(star.vertices_of_degree(1) == 3);
  CHECK(star.vertices_of_degree(3) == 1);
  CHECK(star.vertices_of_degree(2) == 0);

  EdgeTypeCounts p6(path_graph(6));
  CHECK(p6.edges_between(1, 2) == 2);
  CHECK(p6.edges_between(2, 2) == 3);
  CHECK(p6.max_degree() == 2);
}

TEST_CASE("edge-type accounting identities") {
  std::mt19937_64 rng(13);
  int connected = 0;
  for (int i = 0; i < 400; ++i) {
    Graph g = random_graph(rng, 2 + rng() % 12, 0.45);
    EdgeTypeCounts counts(g);

    std::size_t vertices = 0;
    for (std::size_t c : counts.vertex_counts()) vertices += c;
    CHECK(vertices == g.order());

    std::size_t edges = 0;
    for (const auto& [pair, c] : counts.pairs()) edges += c;
    CHECK(edges == g.size());

    // Endpoint incidences of degree k: k * n_k.
    for (std::size_t k = 1; k <= counts.max_degree(); ++k) {
      std::size_t incidences = 0;
      for (const auto& [pair, c] : counts.pairs()) {
        if (pair.first == k) incidences += c;
        if (pair.second == k) incidences += c;
      }
      CHECK(incidences == k * counts.vertices_of_degree(k));
    }

    DegreeSummary s = degree_summary(g);
    if (s.is_connected && s.min_degree >= 1) {
      ++connected;
      double weighted = 0;
      for (const auto& [pair, c] : counts.pairs()) {
        const double a = static_cast<double>(pair.first), b = static_cast<double>(pair.second);
        weighted += (a + b) / (a * b) * static_cast<double>(c);
      }
      CHECK(weighted == doctest::Approx(static_cast<double>(g.order())).epsilon(1e-12));
    }
  }
  CHECK(connected > 50);
}

TEST_CASE("family builders") {
  CHECK(path_graph(1).size() == 0);
  CHECK(cycle_graph(3) == complete_graph(3));
  CHECK_THROWS(cycle_graph(2));
  CHECK(star_graph(4) == complete_bipartite_graph(1, 3));
  Graph k23 = complete_bipartite_graph(2, 3);
  CHECK(k23.degree(0) == 3);
  CHECK(k23.degree(4) == 2);
}

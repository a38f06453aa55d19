#include "doctest.h"
#include "lchord/error.hpp"
#include "lchord/generators.hpp"
#include "lchord/graph.hpp"

using namespace lchord;

namespace {

template <class F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError(Errc::syntax, 0, 0, "");
}

}  // namespace

TEST_CASE("edgelist round trip keeps the edge set") {
  const Graph g = parse_graph("# square\n4 4\n0 1\n1 2\n\n2 3\n3 0\n", GraphFormat::edgelist);
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  CHECK(g.adjacent(0, 3));
  CHECK_FALSE(g.adjacent(0, 2));
  const std::string text = serialize(g, GraphFormat::edgelist);
  CHECK(text == "4 4\n0 1\n0 3\n1 2\n2 3");
  CHECK(parse_graph(text, GraphFormat::edgelist) == g);
}

TEST_CASE("edgelist errors carry distinct codes and positions") {
  auto code = [](const char* text) {
    return parse_error_of([&] { parse_graph(text, GraphFormat::edgelist); });
  };
  const ParseError loop = code("3 1\n1 1\n");
  CHECK(loop.code() == Errc::self_loop);
  CHECK(loop.line() == 2);
  CHECK(code("3 2\n0 1\n1 0\n").code() == Errc::duplicate_edge);
  const ParseError range = code("3 1\n0 5\n");
  CHECK(range.code() == Errc::vertex_out_of_range);
  CHECK(range.line() == 2);
  CHECK(range.column() > 1);
  CHECK(code("3 2\n0 1\n").code() == Errc::edge_count_mismatch);
  CHECK(code("3 1\n0 1\n1 2\n").code() == Errc::edge_count_mismatch);
  CHECK(code("3 1\n0 1 2\n").code() == Errc::syntax);
  CHECK(code("x\n").code() == Errc::syntax);
}

TEST_CASE("json parsing reads labels and reports syntax positions") {
  const Graph g = parse_graph(R"({"n":3,"edges":[[0,1],[1,2]],"labels":{"0":"u","2":"v"}})", GraphFormat::json);
  CHECK(g.size() == 2);
  CHECK(g.find_label("u") == 0);
  CHECK(g.find_label("v") == 2);
  CHECK(g.name(1) == "1");
  const ParseError bad = parse_error_of([] { parse_graph("{\n\"n\": 3,\n\"edges\": [[0,1]\n", GraphFormat::json); });
  CHECK(bad.code() == Errc::syntax);
  CHECK(bad.line() >= 3);
  CHECK(parse_error_of([] { parse_graph(R"({"n":2,"edges":[[0,0]]})", GraphFormat::json); }).code() ==
        Errc::self_loop);
  CHECK(parse_error_of([] { parse_graph(R"({"n":2,"edges":[[0,1],[1,0]]})", GraphFormat::json); }).code() ==
        Errc::duplicate_edge);
  CHECK(parse_error_of([] { parse_graph(R"({"n":2,"edges":[[0,2]]})", GraphFormat::json); }).code() ==
        Errc::vertex_out_of_range);
  CHECK(parse_graph(serialize(g, GraphFormat::json), GraphFormat::json).labels() == g.labels());
}

TEST_CASE("dot output lists isolated vertices and quotes labels") {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}}, Labels{{0, "u"}});
  const std::string dot = serialize(g, GraphFormat::dot);
  CHECK(dot.find("\"u\" -- \"1\";") != std::string::npos);
  CHECK(dot.find("\"2\";") != std::string::npos);
}

TEST_CASE("induced subgraph remaps ids and rejects bad sets") {
  const Graph c5 = cycle_graph(5);
  const std::vector<Vertex> keep{0, 1, 2};
  const InducedSubgraph sub = induced_subgraph(c5, keep);
  CHECK(sub.graph.order() == 3);
  CHECK(sub.graph.size() == 2);
  CHECK(sub.new_to_old == keep);
  CHECK_THROWS_AS(induced_subgraph(c5, std::vector<Vertex>{}), Error);
  try {
    induced_subgraph(c5, std::vector<Vertex>{7});
    FAIL("expected unknown_vertex");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_vertex);
  }
}

TEST_CASE("apply_edits adds edges, deletes vertices and rejects conflicts") {
  const Graph c4 = cycle_graph(4);
  const Graph chorded = apply_edits(c4, EdgeSet({Edge(0, 2)}), {});
  CHECK(chorded.size() == 5);
  const Graph path = apply_edits(c4, EdgeSet{}, std::vector<Vertex>{3});
  CHECK(path.order() == 3);
  CHECK(path.size() == 2);
  auto code = [&](const EdgeSet& add, std::vector<Vertex> del) {
    try {
      apply_edits(c4, add, del);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::syntax;
  };
  CHECK(code(EdgeSet({Edge(0, 1)}), {}) == Errc::existing_edge);
  CHECK(code(EdgeSet({Edge(0, 9)}), {}) == Errc::unknown_vertex);
  CHECK(code(EdgeSet{}, {9}) == Errc::unknown_vertex);
  CHECK(code(EdgeSet({Edge(0, 2)}), {2}) == Errc::invalid_argument);
}

TEST_CASE("edge helpers") {
  const Graph c4 = cycle_graph(4);
  const Graph more = with_edges(c4, std::vector<Edge>{{0, 2}});
  CHECK(is_spanning_subgraph(c4, more));
  CHECK_FALSE(is_spanning_subgraph(more, c4));
  CHECK(without_edges(more, std::vector<Edge>{{0, 2}}) == c4);
  const Graph iso = isolate_vertices(c4, std::vector<Vertex>{0});
  CHECK(iso.order() == 4);
  CHECK(iso.degree(0) == 0);
  CHECK(iso.size() == 2);
  CHECK(sorted_unique({3, 1, 3, 2}) == std::vector<Vertex>{1, 2, 3});
}

/*
   Copyright 2026 The cayleylab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cayleylab/cayley.hpp"
#include "cayleylab/error.hpp"
#include "cayleylab/graph.hpp"
#include "oracles.hpp"

using namespace cayleylab;

namespace {

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos ? 1 : 0;
  return n;
}

CayleyGraph g_of(const char* spec, std::uint32_t p) { return build_graph(parse_ring_spec(spec), p); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("constructor rejects bad adjacency") {
    CHECK_THROWS_AS(PlainGraph(2, {{1}, {}}), PreconditionError);
    CHECK_THROWS_AS(PlainGraph(2, {{0}, {}}), PreconditionError);
    CHECK_THROWS_AS(PlainGraph(2, {{5}, {}}), PreconditionError);
  }

  TEST_CASE("families") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(cycle_graph(9).edge_count() == 9);
    CHECK(path_graph(4).edge_count() == 3);
    CHECK(complete_bipartite_graph(2, 3).edge_count() == 6);
    CHECK(empty_graph(4).vertex_count() == 4);
    CHECK(complement(complete_graph(6)) == empty_graph(6));
  }

  TEST_CASE("components and bipartiteness match naive search") {
    for (std::size_t n = 1; n <= 9; ++n) {
      for (const PlainGraph& g : {cycle_graph(std::max<std::size_t>(n, 3)), path_graph(n), complete_graph(n),
                                  empty_graph(n), complete_bipartite_graph(n, 2)}) {
        CHECK(is_connected(g) == oracle::connected(g, false));
        CHECK(is_anticonnected(g) == oracle::connected(g, true));
        CHECK(complement_components(g).size() == connected_components(complement(g)).size());
      }
    }
    CHECK(is_bipartite(cycle_graph(8)));
    CHECK_FALSE(is_bipartite(cycle_graph(9)));
    CHECK(is_bipartite(complete_bipartite_graph(3, 4)));
  }

  TEST_CASE("products") {
    const PlainGraph k2 = complete_graph(2);
    const PlainGraph t = tensor_product(k2, k2);
    CHECK(t.vertex_count() == 4);
    CHECK(t.edge_count() == 2);
    CHECK(connected_components(t).size() == 2);
    CHECK(tensor_product(empty_graph(1), cycle_graph(5)) == empty_graph(5));
    CHECK(wreath_product(k2, empty_graph(2)) == complete_bipartite_graph(2, 2));
    CHECK(wreath_product(cycle_graph(5), empty_graph(3)).edge_count() == 5 * 9);
  }

  TEST_CASE("edge list round trip") {
    const PlainGraph g = cycle_graph(5);
    std::ostringstream out;
    write_edge_list(g, out);
    CHECK(out.str() == "0 1\n0 4\n1 2\n2 3\n3 4\n");
    CHECK(read_edge_list(out.str()) == g);
    CHECK(read_edge_list("# c\n0 2\n\n2 1\n").edge_count() == 2);
    CHECK_THROWS_AS(read_edge_list("0 x\n"), SpecError);
    CHECK_THROWS_AS(read_edge_list("1 1\n"), SpecError);
    CHECK_THROWS_AS(read_edge_list("foo bar\n0 1\n"), SpecError);
    CHECK(read_edge_list("  \r\n0 1 # tail\n").edge_count() == 1);
  }
}

TEST_SUITE("cayley") {
  TEST_CASE("figures") {
    const CayleyGraph f13 = g_of("F(13,1)", 3);
    CHECK(f13.vertex_count() == 13);
    for (Vertex v = 0; v < 13; ++v) CHECK(f13.graph().degree(v) == 4);
    CHECK(connected_components(f13.graph()).size() == 1);
    CHECK_FALSE(is_bipartite(f13.graph()));

    const CayleyGraph z25 = g_of("Z/25", 5);
    CHECK(z25.vertex_count() == 25);
    for (Vertex v = 0; v < 25; ++v) CHECK(z25.graph().degree(v) == 4);

    CHECK(connected_components(g_of("F(2,4)", 5).graph()).size() == 4);
    CHECK(connected_components(g_of("Z/27", 3).graph()).size() == 1);
    CHECK_THROWS_AS(g_of("Z/8", 2), SymmetryError);
  }

  TEST_CASE("anticonnectivity and bipartiteness examples") {
    CHECK(g_of("F(5,1)", 3).graph() == complete_graph(5));
    CHECK_FALSE(is_anticonnected(g_of("F(5,1)", 3).graph()));
    CHECK(is_anticonnected(g_of("Z/9", 3).graph()));
    CHECK(is_anticonnected(g_of("Z/12", 5).graph()));
    CHECK(is_bipartite(g_of("F(2,1)", 2).graph()));
    CHECK(g_of("Z/9", 3).graph() == cycle_graph(9));
  }

  TEST_CASE("induced subgraphs") {
    const CayleyGraph f13 = g_of("F(13,1)", 3);
    const PlainGraph& g = f13.graph();
    const std::vector<Vertex> xs{0, 1, 2};
    CHECK(induced_subgraph(g, xs) == path_graph(3));
    std::vector<Vertex> all(13);
    for (Vertex v = 0; v < 13; ++v) all[v] = v;
    CHECK(induced_subgraph(g, all) == g);
  }

  TEST_CASE("adjacency agrees with brute-force p-th powers in Z/n") {
    for (std::uint64_t n : {9ULL, 25ULL, 27ULL, 49ULL, 63ULL, 100ULL}) {
      for (std::uint32_t p : {3U, 5U, 7U}) {
        const FiniteRing r = parse_ring_spec("Z/" + std::to_string(n));
        const CayleyGraph g = build_graph(r, p);
        const auto s = oracle::unit_powers_mod(n, p);
        for (std::uint64_t a = 0; a < n; ++a) {
          for (std::uint64_t b = 0; b < n; ++b) {
            const bool want = a != b && s.count((a + n - b) % n) > 0;
            CHECK(g.graph().adjacent(r.from_integer(a), r.from_integer(b)) == want);
          }
        }
      }
    }
  }

  TEST_CASE("export formats") {
    const CayleyGraph g = g_of("F(13,1)", 3);
    std::ostringstream dot, dot2, edges, js;
    write_graph(g, ExportFormat::Dot, dot);
    write_graph(g, ExportFormat::Dot, dot2);
    write_graph(g, ExportFormat::EdgeList, edges);
    write_graph(g, ExportFormat::Json, js);
    CHECK(dot.str() == dot2.str());
    CHECK(count_lines_with(dot.str(), " -- ") == 26);
    CHECK(count_lines_with(edges.str(), " ") == 26);
    const auto j = nlohmann::json::parse(js.str());
    CHECK(j["n"] == 13);
    CHECK(j["degree"] == 4);
    CHECK(j["adjacency"].size() == 13);
    CHECK(parse_export_format("edgelist") == ExportFormat::EdgeList);
    CHECK_THROWS_AS(parse_export_format("png"), SpecError);
  }
}

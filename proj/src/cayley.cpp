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

#include "cayleylab/cayley.hpp"

#include <ostream>

#include "json.hpp"

#include "cayleylab/error.hpp"

namespace cayleylab {

namespace {

std::vector<std::string> ring_labels(const FiniteRing& ring) {
  std::vector<std::string> labels(ring.size());
  for (Element x = 0; x < ring.size(); ++x) labels[x] = ring.label(x);
  return labels;
}

}  // namespace

PlainGraph cayley_graph(const FiniteRing& ring, std::span<const Element> connection) {
  std::vector<unsigned char> in(ring.size(), 0);
  for (Element s : connection) {
    if (s == 0) throw PreconditionError("connection set contains 0");
    in[s] = 1;
  }
  for (Element s : connection) {
    if (in[ring.neg(s)] == 0) throw SymmetryError("connection set is not closed under negation");
  }
  std::vector<std::vector<Vertex>> adj(ring.size());
  for (Element a = 0; a < ring.size(); ++a) {
    adj[a].reserve(connection.size());
    for (Element s : connection) adj[a].push_back(ring.add(a, s));
  }
  return PlainGraph(ring.size(), std::move(adj), ring_labels(ring));
}

CayleyGraph::CayleyGraph(FiniteRing ring, DifferenceSet connection_set)
    : ring_(std::move(ring)),
      connection_(std::move(connection_set)),
      graph_(cayley_graph(ring_, connection_.members())) {}

CayleyGraph build_graph(const FiniteRing& ring, std::uint32_t p) {
  DifferenceSet s = units_pth_powers(ring, p);
  if (!s.is_symmetric()) {
    throw SymmetryError("-1 is not a " + std::to_string(p) + "-th power of a unit in " + ring.spec_string() +
                        "; G_R(" + std::to_string(p) + ") would be directed");
  }
  return CayleyGraph(ring, std::move(s));
}

ExportFormat parse_export_format(const std::string& name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  if (name == "edgelist") return ExportFormat::EdgeList;
  throw SpecError("unknown format '" + name + "' (expected dot, json or edgelist)");
}

void write_dot(const CayleyGraph& g, std::ostream& out) {
  const PlainGraph& pg = g.graph();
  out << "graph \"G_{" << g.ring().spec_string() << "}(" << g.prime() << ")\" {\n";
  for (Vertex v = 0; v < pg.vertex_count(); ++v) out << "  " << v << " [label=\"" << pg.label(v) << "\"];\n";
  for (auto [u, v] : pg.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

void write_json(const CayleyGraph& g, std::ostream& out) {
  const PlainGraph& pg = g.graph();
  nlohmann::ordered_json j;
  j["spec"] = g.ring().spec_string();
  j["p"] = g.prime();
  j["n"] = pg.vertex_count();
  j["degree"] = g.degree();
  j["labels"] = pg.labels();
  j["adjacency"] = pg.adjacency();
  out << j.dump() << "\n";
}

void write_edge_list(const PlainGraph& g, std::ostream& out) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph(const CayleyGraph& g, ExportFormat format, std::ostream& out) {
  switch (format) {
    case ExportFormat::Dot:
      write_dot(g, out);
      break;
    case ExportFormat::Json:
      write_json(g, out);
      break;
    case ExportFormat::EdgeList:
      write_edge_list(g.graph(), out);
      break;
  }
}

}  // namespace cayleylab

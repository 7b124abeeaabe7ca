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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cayleylab/graph.hpp"
#include "cayleylab/ring.hpp"

namespace cayleylab {

/// G_R(p): vertices are ring elements (numbered in enumeration order),
/// a ~ b iff a - b lies in S = (R^x)^p.
class CayleyGraph {
 public:
  CayleyGraph(FiniteRing ring, DifferenceSet connection_set);

  const FiniteRing& ring() const { return ring_; }
  std::uint32_t prime() const { return connection_.prime(); }
  const DifferenceSet& connection_set() const { return connection_; }
  const PlainGraph& graph() const { return graph_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t degree() const { return connection_.size(); }
  /// Membership test on the difference; agrees with graph().adjacent().
  bool adjacent(Element a, Element b) const { return connection_.contains(ring_.sub(a, b)); }

 private:
  FiniteRing ring_;
  DifferenceSet connection_;
  PlainGraph graph_;
};

/// Throws SymmetryError when -1 is not in (R^x)^p.
CayleyGraph build_graph(const FiniteRing& ring, std::uint32_t p);

/// Cay(R, C) for an arbitrary symmetric connection set C not containing 0.
PlainGraph cayley_graph(const FiniteRing& ring, std::span<const Element> connection);

enum class ExportFormat { Dot, Json, EdgeList };

ExportFormat parse_export_format(const std::string& name);

/// DOT: undirected, one node line per vertex labelled with its ring
/// coordinates, one "u -- v;" line per edge with u < v.
void write_dot(const CayleyGraph& g, std::ostream& out);
/// JSON object {spec, p, n, degree, labels, adjacency}.
void write_json(const CayleyGraph& g, std::ostream& out);
/// One "u v" line per edge, u < v, lexicographic.
void write_edge_list(const PlainGraph& g, std::ostream& out);
void write_graph(const CayleyGraph& g, ExportFormat format, std::ostream& out);

}  // namespace cayleylab

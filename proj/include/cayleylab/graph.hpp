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
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cayleylab {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with sorted adjacency lists. Immutable.
class PlainGraph {
 public:
  PlainGraph() = default;
  /// Builds from adjacency lists; lists are sorted and deduplicated.
  /// Throws PreconditionError on self-loops, out-of-range vertices or
  /// asymmetric adjacency.
  PlainGraph(std::size_t vertex_count, std::vector<std::vector<Vertex>> adjacency,
             std::vector<std::string> labels = {});
  static PlainGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                               std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  const std::vector<std::vector<Vertex>>& adjacency() const { return adjacency_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;

  friend bool operator==(const PlainGraph& a, const PlainGraph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Dense bit-matrix view of a graph for O(1) adjacency tests and
/// word-parallel set operations on neighborhoods.
class BitAdjacency {
 public:
  explicit BitAdjacency(const PlainGraph& g);

  std::size_t vertex_count() const { return n_; }
  std::size_t words() const { return words_; }
  bool test(Vertex u, Vertex v) const { return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U; }
  std::span<const std::uint64_t> row(Vertex u) const { return {rows_.data() + u * words_, words_}; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Components as sorted vertex lists, ordered by least vertex.
std::vector<std::vector<Vertex>> connected_components(const PlainGraph& g);
bool is_connected(const PlainGraph& g);
bool is_bipartite(const PlainGraph& g);
/// Whether the complement is connected. Runs BFS over non-edges without
/// materializing the complement.
bool is_anticonnected(const PlainGraph& g);
/// Components of the complement, same ordering as connected_components.
std::vector<std::vector<Vertex>> complement_components(const PlainGraph& g);

PlainGraph complement(const PlainGraph& g);
/// Induced subgraph on X (sorted, deduplicated); vertex i of the result is
/// the i-th smallest member of X and keeps its label. Throws on empty X.
PlainGraph induced_subgraph(const PlainGraph& g, std::span<const Vertex> subset);
/// Vertex (a, b) has index a * |V(h)| + b.
PlainGraph tensor_product(const PlainGraph& g, const PlainGraph& h);
/// Vertex (a, b) has index a * |V(h)| + b.
PlainGraph wreath_product(const PlainGraph& g, const PlainGraph& h);

PlainGraph complete_graph(std::size_t n);
PlainGraph empty_graph(std::size_t n);
PlainGraph path_graph(std::size_t n);
PlainGraph cycle_graph(std::size_t n);
PlainGraph complete_bipartite_graph(std::size_t a, std::size_t b);

/// Parses "u v" lines ('#' starts a comment). The vertex count is one more
/// than the largest index mentioned.
PlainGraph read_edge_list(const std::string& text);

}  // namespace cayleylab

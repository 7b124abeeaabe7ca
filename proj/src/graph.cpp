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

#include "cayleylab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "cayleylab/error.hpp"

namespace cayleylab {

PlainGraph::PlainGraph(std::size_t vertex_count, std::vector<std::vector<Vertex>> adjacency,
                       std::vector<std::string> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
  adjacency_.resize(vertex_count);
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw PreconditionError("label count does not match vertex count");
  }
  std::size_t directed = 0;
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (Vertex w : list) {
      if (w >= vertex_count) throw PreconditionError("edge endpoint out of range");
      if (w == v) throw PreconditionError("self-loop at vertex " + std::to_string(v));
    }
    directed += list.size();
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    for (Vertex w : adjacency_[v]) {
      if (!std::binary_search(adjacency_[w].begin(), adjacency_[w].end(), v)) {
        throw PreconditionError("adjacency is not symmetric");
      }
    }
  }
  edge_count_ = directed / 2;
}

PlainGraph PlainGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges,
                                  std::vector<std::string> labels) {
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw PreconditionError("edge endpoint out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return PlainGraph(vertex_count, std::move(adj), std::move(labels));
}

bool PlainGraph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> PlainGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string PlainGraph::label(Vertex v) const { return labels_.empty() ? std::to_string(v) : labels_[v]; }

BitAdjacency::BitAdjacency(const PlainGraph& g)
    : n_(g.vertex_count()), words_((g.vertex_count() + 63) / 64), rows_(n_ * words_, 0) {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : g.neighbors(u)) rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

std::vector<std::vector<Vertex>> connected_components(const PlainGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] != 0) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (seen[w] == 0) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const PlainGraph& g) { return connected_components(g).size() <= 1; }

bool is_bipartite(const PlainGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> complement_components(const PlainGraph& g) {
  // BFS in the complement: keep the unvisited vertices in a list and, from
  // each dequeued vertex, move every unvisited non-neighbour into the queue.
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> unvisited(n);
  std::iota(unvisited.begin(), unvisited.end(), 0);
  std::vector<std::vector<Vertex>> out;
  while (!unvisited.empty()) {
    std::vector<Vertex> comp{unvisited.front()};
    unvisited.erase(unvisited.begin());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Vertex v = comp[i];
      std::vector<Vertex> keep;
      for (Vertex w : unvisited) {
        if (g.adjacent(v, w)) {
          keep.push_back(w);
        } else {
          comp.push_back(w);
        }
      }
      unvisited = std::move(keep);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_anticonnected(const PlainGraph& g) { return complement_components(g).size() <= 1; }

PlainGraph complement(const PlainGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && !g.adjacent(u, v)) adj[u].push_back(v);
    }
  }
  return PlainGraph(n, std::move(adj), g.labels());
}

PlainGraph induced_subgraph(const PlainGraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> xs(subset.begin(), subset.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.empty()) throw PreconditionError("induced_subgraph: empty vertex set");
  for (Vertex v : xs) {
    if (v >= g.vertex_count()) throw PreconditionError("induced_subgraph: vertex out of range");
  }
  std::vector<std::vector<Vertex>> adj(xs.size());
  std::vector<std::string> labels;
  for (Vertex i = 0; i < xs.size(); ++i) {
    for (Vertex j = 0; j < xs.size(); ++j) {
      if (i != j && g.adjacent(xs[i], xs[j])) adj[i].push_back(j);
    }
    labels.push_back(g.label(xs[i]));
  }
  return PlainGraph(xs.size(), std::move(adj), std::move(labels));
}

PlainGraph tensor_product(const PlainGraph& g, const PlainGraph& h) {
  const std::size_t m = h.vertex_count();
  std::vector<std::vector<Vertex>> adj(g.vertex_count() * m);
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = 0; b < m; ++b) {
      auto& list = adj[a * m + b];
      for (Vertex a2 : g.neighbors(a)) {
        for (Vertex b2 : h.neighbors(b)) list.push_back(static_cast<Vertex>(a2 * m + b2));
      }
    }
  }
  const std::size_t n = adj.size();
  return PlainGraph(n, std::move(adj));
}

PlainGraph wreath_product(const PlainGraph& g, const PlainGraph& h) {
  const std::size_t m = h.vertex_count();
  std::vector<std::vector<Vertex>> adj(g.vertex_count() * m);
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = 0; b < m; ++b) {
      auto& list = adj[a * m + b];
      for (Vertex a2 : g.neighbors(a)) {
        for (Vertex b2 = 0; b2 < m; ++b2) list.push_back(static_cast<Vertex>(a2 * m + b2));
      }
      for (Vertex b2 : h.neighbors(b)) list.push_back(static_cast<Vertex>(a * m + b2));
    }
  }
  const std::size_t n = adj.size();
  return PlainGraph(n, std::move(adj));
}

PlainGraph complete_graph(std::size_t n) {
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) adj[u].push_back(v);
    }
  }
  return PlainGraph(n, std::move(adj));
}

PlainGraph empty_graph(std::size_t n) { return PlainGraph(n, {}); }

PlainGraph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return PlainGraph::from_edges(n, e);
}

PlainGraph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(static_cast<Vertex>(n - 1), 0);
  return PlainGraph::from_edges(n, e);
}

PlainGraph complete_bipartite_graph(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(a + j));
  }
  return PlainGraph::from_edges(a + b, e);
}

PlainGraph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    long long u = 0;
    long long v = 0;
    std::string rest;
    if (!(ls >> u >> v) || (ls >> rest) || u < 0 || v < 0 || u == v) {
      throw SpecError("edge list line " + std::to_string(lineno) + ": expected 'u v' with u != v");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (edges.empty()) throw SpecError("edge list contains no edges");
  return PlainGraph::from_edges(n, edges);
}

}  // namespace cayleylab

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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayleylab/cayley.hpp"
#include "cayleylab/graph.hpp"
#include "cayleylab/ring.hpp"

namespace cayleylab {

// ---------------------------------------------------------------------------
// Homogeneous sets (modules)

struct HomogeneousSetReport {
  std::vector<Vertex> subset;
  bool is_homogeneous = true;
  /// Least outside vertex adjacent to some but not all of the subset.
  std::optional<Vertex> witness;
};

/// Exact check. Throws PreconditionError when X is empty or leaves V(G).
HomogeneousSetReport is_homogeneous_set(const PlainGraph& g, std::span<const Vertex> subset);

/// 2 <= |X| < |V|.
bool is_nontrivial(std::size_t subset_size, std::size_t vertex_count);

/// Smallest homogeneous set containing u and v: start from {u, v} and keep
/// adding a vertex that distinguishes the current set until none is left.
std::vector<Vertex> minimal_module_containing(const PlainGraph& g, Vertex u, Vertex v);

// ---------------------------------------------------------------------------
// Modular decomposition

enum class ModuleKind { Leaf, Parallel, Series, Prime };

struct ModuleNode {
  ModuleKind kind = ModuleKind::Leaf;
  std::vector<Vertex> vertices;      // sorted
  std::vector<std::size_t> children; // indices into ModularDecomposition::nodes
};

/// Tree of strong modules; nodes[0] is the root (all vertices).
struct ModularDecomposition {
  std::vector<ModuleNode> nodes;
};

ModularDecomposition modular_decomposition(const PlainGraph& g);

/// Smallest non-trivial homogeneous set, ties broken by the
/// lexicographically least sorted vertex list. nullopt iff G is prime.
std::optional<std::vector<Vertex>> smallest_nontrivial_module(const ModularDecomposition& md);

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictMethod { Oracle, Theorem };

struct PrimalityVerdict {
  bool is_prime = false;
  /// Empty when prime; otherwise a non-trivial homogeneous set.
  std::vector<Vertex> certificate;
  VerdictMethod method = VerdictMethod::Oracle;
  std::string citation;
  /// Conditions evaluated on the way to the verdict, in evaluation order.
  std::vector<std::string> clauses;
};

/// Graphs on at most two vertices are prime: no set X with 2 <= |X| < |V|.
PrimalityVerdict is_prime_graph_oracle(const PlainGraph& g);

// ---------------------------------------------------------------------------
// Theorem-side predicates on (R, p)

/// n | ell^m - 1 and n does not divide ell^a - 1 for 1 <= a < m.
bool is_primitive_divisor(std::uint64_t n, std::uint64_t ell, std::uint32_t m);

struct Prediction {
  bool value = false;
  std::vector<std::string> clauses;
};

/// Facts about one local factor that the predicates dispatch on. All set
/// comparisons (M = pR, p^2 R = 0) are made by enumeration.
struct FactorFacts {
  std::string spec;
  std::uint32_t size = 0;
  std::uint32_t residue_char = 0;
  std::uint32_t residue_degree = 0;
  std::uint32_t residue_field_size = 0;
  bool is_field = false;
  bool residue_char_is_p = false;
  bool maximal_is_pR = false;
  bool p2R_is_zero = false;
  /// From BFS on G_{R_i}(p).
  bool graph_connected = false;
  bool graph_bipartite = false;
};

/// Throws SymmetryError when -1 is not a p-th power of a unit.
std::vector<FactorFacts> factor_facts(const FiniteRing& ring, std::uint32_t p);

/// Connectivity of one local factor from its residue data alone.
Prediction predict_local_connected(const FactorFacts& f, std::uint32_t p);
Prediction predict_connected(const FiniteRing& ring, std::uint32_t p);
Prediction predict_anticonnected(const FiniteRing& ring, std::uint32_t p);
/// Theorem-side primality with a certificate built from the failing
/// condition (a homogeneous ideal, the component of 0, or {0, 1} for a
/// complete graph). The certificate is checked before returning.
PrimalityVerdict predict_prime(const CayleyGraph& g);
PrimalityVerdict predict_prime(const FiniteRing& ring, std::uint32_t p);

/// Product over factors of M_i (residue char != p) or p^2 R_i (residue
/// char p), checked to be homogeneous in G_R(p).
Ideal homogeneous_ideal_search(const CayleyGraph& g);
Ideal homogeneous_ideal_search(const FiniteRing& ring, std::uint32_t p);

// ---------------------------------------------------------------------------
// Theorem-vs-oracle sweep

struct CorpusEntry {
  std::string spec;
  std::uint32_t p = 0;
};

struct CrossValidationRow {
  std::string spec;
  std::uint32_t p = 0;
  std::size_t vertex_count = 0;
  std::size_t degree = 0;
  std::size_t components = 0;
  bool anticonnected = false;
  bool bipartite = false;
  bool predicted_connected = false;
  bool predicted_anticonnected = false;
  PrimalityVerdict theorem;
  PrimalityVerdict oracle;
  /// Human-readable reasons; empty iff the row matches.
  std::vector<std::string> mismatches;
};

struct CrossValidationReport {
  std::vector<CrossValidationRow> rows;
  std::size_t mismatch_count() const;
};

CrossValidationRow cross_validate_one(const CorpusEntry& entry);
/// Rows come back in corpus order whatever the worker count.
CrossValidationReport cross_validate(std::span<const CorpusEntry> corpus, unsigned workers = 1);

}  // namespace cayleylab

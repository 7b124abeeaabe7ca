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
#include <vector>

#include "cayleylab/graph.hpp"
#include "cayleylab/ring.hpp"

namespace cayleylab {

/// A multiplicative character of order p on F_q, stored as exponents:
/// chi(g^k) = zeta_p^(k mod p) for the least generator g.
class CharacterTable {
 public:
  /// Exponent returned for chi(0).
  static constexpr std::uint32_t kZero = UINT32_MAX;

  /// Throws PreconditionError unless `field` is a single finite field of
  /// characteristic other than p with p | q - 1.
  CharacterTable(const FiniteRing& field, std::uint32_t p);

  const FiniteRing& field() const { return field_; }
  const LocalRing& local() const { return field_.factor(0); }
  std::uint32_t order() const { return p_; }
  std::uint32_t size() const { return field_.size(); }
  Element generator() const { return generator_; }
  /// Discrete log base generator(); x must be non-zero.
  std::uint32_t log(Element x) const;
  /// Exponent e in [0, p) with chi(x) = zeta_p^e, or kZero for x = 0.
  std::uint32_t chi(Element x) const;

 private:
  FiniteRing field_;
  std::uint32_t p_;
  Element generator_ = 0;
  std::vector<std::uint32_t> log_;
};

/// Exact value of P_1 (which = 1) or P_0 (which = 0) at a p-th root of
/// unity given by its exponent. The zero sentinel selects nothing: both
/// return 0 there.
int selector(std::uint32_t exponent, int which);

struct K3Search {
  std::optional<Element> a;
  /// p does not divide q - 1, so G is complete and a is simply 2.
  bool complete = false;
  std::size_t searched = 0;
};

/// Least a = x^p outside {0, 1} with chi(1 - a) = 1; the triangle on
/// {0, 1, a} is checked against the connection set before returning.
/// `field` must be a single field of characteristic other than p.
K3Search find_k3(const FiniteRing& field, std::uint32_t p);

struct K3Count {
  std::size_t count = 0;
  /// (q - (p-1)^2 sqrt(q) - 2p) / p.
  double lower_bound = 0;
};

/// Number of x != 0 with chi(1 - x^p) = 1. Requires p | q - 1.
K3Count count_k3_witnesses(const FiniteRing& field, std::uint32_t p);

struct CharSum {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  /// counts[j] summands equal zeta_p^j.
  std::vector<std::uint64_t> counts;
  std::uint64_t zero_count = 0;
  /// |sum_j counts[j] zeta_p^j|.
  double magnitude = 0;
};

/// sum over a in F_q of chi^k(1 - a^p), with chi^k(0) = 0 for every k
/// (so k = 0 counts the a with a^p != 1).
CharSum character_sum(const CharacterTable& chi, std::uint32_t k);
CharSum character_sum(const FiniteRing& field, std::uint32_t p, std::uint32_t k);

struct CountIdentity {
  std::uint64_t witnesses = 0;
  /// sum over k of the character sums, a rational integer.
  std::int64_t total = 0;
  /// p * witnesses == total - p.
  bool holds = false;
};

/// Checks p |S| = sum_k sum_a chi^k(1 - a^p) - p exactly from the count
/// vectors. The "- p" (rather than "- 2p") is because chi^0(0) = 0 here.
CountIdentity k3_count_identity(const FiniteRing& field, std::uint32_t p);

struct EmbeddingWitness {
  std::uint64_t ell = 0;
  std::uint32_t p = 0;
  PlainGraph target;
  /// Exponent of target vertex i: a power of two, the powers 2^0 ..
  /// 2^(k-1) each used once.
  std::vector<std::uint64_t> exponents;
  Element y = 0;
  /// y^(a_i).
  std::vector<Element> images;
  /// Non-adjacent pairs i < j of the target.
  std::size_t non_edges = 0;
  /// |G| choose 2.
  std::size_t pairs = 0;
  /// y values examined before success.
  std::size_t searched = 0;
  bool verified = false;
};

/// Least y in F_ell with chi(y) = 1 and chi(y^(a_j - a_i) - 1) = 1 exactly
/// on the edges of target, skipping y with some y^(a_j - a_i) = 1. The
/// exponents 1, 2, 4, ... are handed to the target vertices in the
/// lexicographically least order that works (every order is tried for
/// targets of at most 8 vertices; larger ones keep the given order). The
/// images are re-checked against the connection set before returning.
/// Requires ell prime, ell != p, p | ell - 1 and a non-empty target.
std::optional<EmbeddingWitness> embed_induced_subgraph(const PlainGraph& target, std::uint64_t ell, std::uint32_t p);

/// embed_induced_subgraph over primes ell = 1 mod p, ell <= ell_max,
/// ascending; the first witness wins.
std::optional<EmbeddingWitness> find_embedding(const PlainGraph& target, std::uint32_t p, std::uint64_t ell_max);

struct BipartiteProbe {
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::size_t components = 0;
  bool bipartite = false;
};

/// G_{F_{2^m}}(p) for 2 <= m <= m_max with components and bipartiteness.
/// A disconnected bipartite graph (e.g. the matching G_{F_4}(3)) is
/// reported but is not the interesting case; callers look for a connected
/// bipartite one.
std::vector<BipartiteProbe> bipartite_char2_search(std::uint32_t p, std::uint32_t m_max);

}  // namespace cayleylab

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

#include <cmath>
#include <complex>
#include <numbers>

#include "cayleylab/cayley.hpp"
#include "cayleylab/charsearch.hpp"
#include "cayleylab/error.hpp"
#include "oracles.hpp"

using namespace cayleylab;

namespace {

FiniteRing fp(std::uint32_t ell) { return parse_ring_spec("F(" + std::to_string(ell) + ",1)"); }

// sum over a of chi^k(1 - a^p) in F_ell with complex arithmetic, chi built
// from a brute-force primitive root.
std::complex<double> naive_sum(std::uint64_t ell, std::uint64_t p, std::uint64_t k) {
  std::uint64_t g = 2;
  for (;; ++g) {
    std::uint64_t order = 1;
    for (std::uint64_t x = g; x != 1; x = x * g % ell) ++order;
    if (order == ell - 1) break;
  }
  std::vector<std::uint64_t> dlog(ell, 0);
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e + 1 < ell; ++e, x = x * g % ell) dlog[x] = e;
  std::complex<double> s = 0;
  for (std::uint64_t a = 0; a < ell; ++a) {
    const std::uint64_t v = (1 + ell - oracle::powmod(a, p, ell)) % ell;
    if (v == 0) continue;
    s += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(dlog[v] % p * k % p) / static_cast<double>(p));
  }
  return s;
}

}  // namespace

TEST_SUITE("charsearch") {
  TEST_CASE("character kernels") {
    const CharacterTable chi(fp(13), 3);
    std::vector<Element> kernel;
    for (Element x = 1; x < 13; ++x) {
      if (chi.chi(x) == 0) kernel.push_back(x);
    }
    CHECK(kernel == std::vector<Element>{1, 5, 8, 12});
    CHECK(chi.chi(0) == CharacterTable::kZero);

    const CharacterTable chi16(parse_ring_spec("F(2,4)"), 5);
    std::size_t k16 = 0;
    for (Element x = 1; x < 16; ++x) k16 += chi16.chi(x) == 0 ? 1 : 0;
    CHECK(k16 == 3);

    CHECK_THROWS_AS(CharacterTable(fp(5), 3), PreconditionError);
    CHECK_THROWS_AS(CharacterTable(parse_ring_spec("Z/25"), 3), PreconditionError);
  }

  TEST_CASE("selectors") {
    CHECK(selector(0, 1) == 1);
    CHECK(selector(0, 0) == 0);
    for (std::uint32_t e = 1; e < 7; ++e) {
      CHECK(selector(e, 1) == 0);
      CHECK(selector(e, 0) == 1);
    }
    CHECK(selector(CharacterTable::kZero, 0) == 0);
    CHECK(selector(CharacterTable::kZero, 1) == 0);
    CHECK_THROWS_AS(selector(0, 2), PreconditionError);
  }

  TEST_CASE("triangles through 0 and 1") {
    CHECK_FALSE(find_k3(fp(13), 3).a.has_value());
    const auto five = find_k3(fp(5), 3);
    CHECK(five.complete);
    CHECK(five.a == Element{2});

    const auto w = find_k3(fp(271), 3);
    REQUIRE(w.a.has_value());
    const auto cubes = oracle::unit_powers_mod(271, 3);
    CHECK(cubes.count(*w.a) == 1);
    CHECK(cubes.count((271 + 1 - *w.a) % 271) == 1);
  }

  TEST_CASE("witness counts") {
    const auto c = count_k3_witnesses(fp(271), 3);
    CHECK(c.lower_bound == doctest::Approx((271 - 4 * std::sqrt(271.0) - 6) / 3));
    CHECK(c.count >= 67);
    const auto cubes = oracle::unit_powers_mod(271, 3);
    std::size_t naive = 0;
    for (std::uint64_t x = 1; x < 271; ++x) naive += cubes.count((1 + 271 - oracle::powmod(x, 3, 271)) % 271);
    CHECK(c.count == naive);
    CHECK(count_k3_witnesses(fp(13), 3).count == 0);
    CHECK_THROWS_AS(count_k3_witnesses(fp(11), 3), PreconditionError);
  }

  TEST_CASE("character sums") {
    const auto s0 = character_sum(fp(13), 3, 0);
    CHECK(s0.zero_count == 3);
    CHECK(s0.counts[0] == 10);
    CHECK(s0.magnitude == doctest::Approx(10));
    CHECK(character_sum(fp(13), 3, 1).magnitude <= 2 * std::sqrt(13.0) + 1e-9);
    CHECK(character_sum(parse_ring_spec("F(2,4)"), 5, 1).magnitude <= 16 + 1e-9);
    CHECK_THROWS_AS(character_sum(fp(13), 3, 3), PreconditionError);

    for (std::uint64_t ell : {7ULL, 13ULL, 31ULL, 61ULL, 181ULL}) {
      for (std::uint32_t p : {3U, 5U}) {
        if ((ell - 1) % p != 0) continue;
        for (std::uint32_t k = 1; k < p; ++k) {
          const double want = std::abs(naive_sum(ell, p, k));
          CHECK(character_sum(fp(static_cast<std::uint32_t>(ell)), p, k).magnitude == doctest::Approx(want).epsilon(1e-9));
        }
      }
    }
  }

  TEST_CASE("count identity") {
    for (std::uint32_t ell : {7U, 13U, 31U, 271U, 331U}) {
      for (std::uint32_t p : {3U, 5U}) {
        if ((ell - 1) % p != 0) continue;
        const auto id = k3_count_identity(fp(ell), p);
        CHECK(id.holds);
        CHECK(static_cast<std::int64_t>(p * id.witnesses) == id.total - static_cast<std::int64_t>(p));
      }
    }
  }

  TEST_CASE("induced subgraph embedding") {
    const auto one = embed_induced_subgraph(empty_graph(1), 13, 3);
    REQUIRE(one.has_value());
    CHECK(one->y == 1);

    // in F_13 no cube y has y - 1 a cube, so the y^(2^i) construction
    // cannot produce an edge even though the graph has edges
    CHECK_FALSE(embed_induced_subgraph(complete_graph(2), 13, 3).has_value());
    const auto k2 = find_embedding(complete_graph(2), 3, 100);
    REQUIRE(k2.has_value());
    CHECK(k2->verified);
    const auto cubes_k2 = oracle::unit_powers_mod(k2->ell, 3);
    CHECK(cubes_k2.count((k2->images[1] + k2->ell - k2->images[0]) % k2->ell) == 1);

    const auto c5 = find_embedding(cycle_graph(5), 3, 200);
    REQUIRE(c5.has_value());
    CHECK(c5->ell <= 200);
    CHECK((c5->ell - 1) % 3 == 0);
    CHECK(c5->pairs == 10);
    CHECK(c5->non_edges == 5);
    const auto cubes = oracle::unit_powers_mod(c5->ell, 3);
    for (Vertex i = 0; i < 5; ++i) {
      CHECK(c5->images[i] == oracle::powmod(c5->y, c5->exponents[i], c5->ell));
      for (Vertex j = i + 1; j < 5; ++j) {
        const bool adj = cubes.count((c5->images[j] + c5->ell - c5->images[i]) % c5->ell) > 0;
        CHECK(adj == cycle_graph(5).adjacent(i, j));
      }
    }
    CHECK_THROWS_AS(embed_induced_subgraph(cycle_graph(5), 11, 3), PreconditionError);
    CHECK_THROWS_AS(embed_induced_subgraph(cycle_graph(5), 15, 3), PreconditionError);
  }

  TEST_CASE("bipartite graphs in characteristic 2") {
    const auto probes = bipartite_char2_search(3, 8);
    REQUIRE(probes.size() == 7);
    CHECK(probes[0].m == 2);
    CHECK(probes[0].bipartite);
    CHECK(probes[0].components == 2);
    for (const auto& b : probes) CHECK_FALSE((b.bipartite && b.components == 1));
  }
}

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

#include "cayleylab/error.hpp"
#include "cayleylab/numtheory.hpp"
#include "cayleylab/polyarith.hpp"
#include "cayleylab/structure.hpp"
#include "oracles.hpp"

using namespace cayleylab;

namespace {

// Row p of Pascal's triangle, built by additions only.
std::vector<mpz_class> pascal_row(std::uint32_t p) {
  std::vector<mpz_class> row{1};
  for (std::uint32_t i = 0; i < p; ++i) {
    std::vector<mpz_class> next(row.size() + 1, 0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      next[k] += row[k];
      next[k + 1] += row[k];
    }
    row = std::move(next);
  }
  return row;
}

IntPoly pow(const IntPoly& f, std::uint32_t e) {
  IntPoly r{1};
  for (std::uint32_t i = 0; i < e; ++i) r = r * f;
  return r;
}

}  // namespace

TEST_SUITE("polyarith") {
  TEST_CASE("f_p small cases") {
    CHECK(build_f_p(2) == IntPoly{0, 2});
    CHECK(build_f_p(3) == IntPoly{0, 3, 3});
    CHECK(build_f_p(5) == IntPoly{0, 5, 10, 10, 5});
    CHECK(build_f_p(3).to_string() == "3*x^2 + 3*x^1");
  }

  TEST_CASE("f_p coefficients are binomials") {
    for (std::uint32_t p : {7U, 31U, 101U, 211U}) {
      const auto row = pascal_row(p);
      const IntPoly f = build_f_p(p);
      CHECK(f.degree() == static_cast<int>(p) - 1);
      CHECK(f.coeff(0) == 0);
      for (std::uint32_t k = 1; k < p; ++k) CHECK(f.coeff(k) == row[k]);
      CHECK(build_h_p(p) * IntPoly{static_cast<long>(p)} == f);
    }
  }

  TEST_CASE("displayed factorizations") {
    const IntPoly x{0, 1};
    const IntPoly x1{1, 1};
    const IntPoly g11{1, 3, 7, 9, 7, 3, 1};
    CHECK(build_f_p(3) == IntPoly{3} * x * x1);
    CHECK(build_f_p(5) == IntPoly{5} * x * x1 * phi3());
    CHECK(build_f_p(7) == IntPoly{7} * x * x1 * pow(phi3(), 2));
    CHECK(build_f_p(11) == IntPoly{11} * x * x1 * phi3() * g11);
  }

  TEST_CASE("phi3 multiplicity") {
    CHECK(phi3_division_count(5) == 1);
    CHECK(phi3_division_count(7) == 2);
    CHECK(phi3_division_count(11) == 1);
    CHECK(phi3_division_count(13) == 2);
    CHECK(phi3_multiplicity(101) == 1);
    CHECK_THROWS_AS(phi3_multiplicity(3), PreconditionError);
  }

  TEST_CASE("g_p extraction") {
    CHECK(extract_g_p(5).g == IntPoly{1});
    CHECK(extract_g_p(7).g == IntPoly{1});
    const auto r11 = extract_g_p(11);
    CHECK(r11.g == IntPoly{1, 3, 7, 9, 7, 3, 1});
    CHECK(r11.m == 1);
    CHECK(r11.verified);
    for (std::uint32_t p : {13U, 59U, 97U}) {
      const auto r = extract_g_p(p);
      CHECK(r.verified);
      CHECK(r.g.degree() == static_cast<int>(p) - 3 - 2 * static_cast<int>(r.m));
      CHECK(IntPoly{static_cast<long>(p)} * IntPoly{0, 1} * IntPoly{1, 1} * pow(phi3(), r.m) * r.g == build_f_p(p));
    }
  }

  TEST_CASE("roots mod p") {
    const auto g59 = extract_g_p(59).g;
    const auto roots = roots_mod_p(g59, 59);
    CHECK(std::find(roots.begin(), roots.end(), 4U) != roots.end());
    CHECK(roots_mod_p(extract_g_p(61).g, 61).empty());
    CHECK(roots_mod_p(phi3(), 7) == std::vector<std::uint64_t>{2, 4});
    // evaluation mod p against exact evaluation
    for (std::uint64_t a = 0; a < 59; ++a) {
      const mpz_class exact = g59.eval(a);
      mpz_class r = exact % 59;
      if (r < 0) r += 59;
      CHECK(g59.eval_mod(a, 59) == r.get_ui());
    }
  }

  TEST_CASE("root primes") {
    CHECK(find_root_primes(500) == std::vector<std::uint32_t>{59, 79, 83, 179, 193, 227, 337, 419, 421, 443, 457});
    CHECK(find_root_primes(59).empty());
    CHECK(find_root_primes(100, 3) == std::vector<std::uint32_t>{59, 79, 83});
  }

  TEST_CASE("exact division and gcd") {
    const IntPoly a = IntPoly{-1, 1} * IntPoly{2, 1};
    const IntPoly b = IntPoly{-1, 1} * IntPoly{3, 1};
    CHECK(gcd_over_q(a, b) == IntPoly{-1, 1});
    CHECK(divide_exact(a, IntPoly{2, 1}) == IntPoly{-1, 1});
    CHECK_FALSE(divide_exact(a, IntPoly{5, 1}).has_value());
    CHECK(pseudo_remainder(IntPoly{1, 0, 1}, IntPoly{1, 2}) == IntPoly{5});
    const IntPoly big = IntPoly::monomial(mpz_class("123456789012345678901234567890"), 3) + IntPoly{7};
    CHECK(gcd_over_q(big * IntPoly{1, 1}, big * IntPoly{2, 1}) == big.primitive_part());
    CHECK(IntPoly{6, 4, 2}.content() == 2);
    CHECK(IntPoly{-6, -4}.primitive_part() == IntPoly{3, 2});
  }

  TEST_CASE("separability and rational roots") {
    CHECK(is_separable_over_q(extract_g_p(11).g));
    CHECK_FALSE(is_separable_over_q(IntPoly{0, 0, 1}));
    CHECK_FALSE(is_separable_over_q(build_h_p(7)));
    CHECK_FALSE(has_rational_root(extract_g_p(11).g));
    CHECK(has_rational_root(IntPoly{-1, 2}));
    CHECK(has_rational_root(IntPoly{3, -1, 0, 6}) == false);
    CHECK_THROWS_AS(is_separable_over_q(IntPoly{}), PreconditionError);
  }

  TEST_CASE("repeated roots of h_p mod p") {
    const auto r7 = repeated_roots_mod_p(7);
    REQUIRE(r7.size() == 2);
    CHECK(r7[0].residue == 2);
    CHECK(r7[0].multiplicity == 2);
    CHECK(r7[1].residue == 4);
    CHECK(repeated_roots_mod_p(5).empty());
    const auto r59 = repeated_roots_mod_p(59);
    CHECK(std::any_of(r59.begin(), r59.end(), [](const RootMultiplicity& m) { return m.residue == 4 && m.multiplicity == 2; }));
  }

  TEST_CASE("K3 criterion in rings of residue characteristic p") {
    const FiniteRing gr = parse_ring_spec("GR(49,2)");
    const auto w = check_k3_criterion(gr.factor(0), 7);
    REQUIRE(w.has_value());
    REQUIRE(w->triangle.size() == 3);
    const CayleyGraph g = build_graph(gr, 7);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) CHECK(g.graph().adjacent(w->triangle[i], w->triangle[j]));
    }
    CHECK_FALSE(check_k3_criterion(parse_ring_spec("Z/25").factor(0), 5).has_value());
    CHECK_FALSE(check_k3_criterion(parse_ring_spec("Z/9").factor(0), 3).has_value());
    // and Z/9 at p = 3 is C_9, which has no triangle at all
    CHECK(build_graph(parse_ring_spec("Z/9"), 3).graph() == cycle_graph(9));
  }
}

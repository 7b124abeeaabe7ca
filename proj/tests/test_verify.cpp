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

#include <sstream>

#include "cayleylab/error.hpp"
#include "cayleylab/verify.hpp"

using namespace cayleylab;

TEST_SUITE("verify") {
  TEST_CASE("ids") {
    CHECK(verify_ids().size() == 10);
    CHECK_THROWS_AS(run_verify("bogus", {}), SpecError);
  }

  TEST_CASE("root primes") {
    VerifyOptions o;
    o.limit = 500;
    const VerifyTable t = run_verify("rootprimes", o);
    CHECK(t.mismatches == 0);
    REQUIRE(t.rows.size() == 11);
    CHECK(t.rows[0][0] == "59");
    CHECK(t.rows[0][2] == "true");
    CHECK(t.rows[0].back() == "ok");
  }

  TEST_CASE("wreath") {
    VerifyOptions o;
    o.rings = "Z/125,Z/27";
    const VerifyTable t = run_verify("wreath", o);
    CHECK(t.mismatches == 0);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][3] == "Z/25");
    CHECK(t.rows[0][4] == "5");
    CHECK(t.rows[1][3] == "Z/9");

    const auto c = check_wreath(parse_ring_spec("GR(9,2)").factor(0));
    CHECK(c.isomorphic);
    CHECK(c.n == 1);
  }

  TEST_CASE("translates") {
    for (const char* spec : {"Z/27", "Z/125", "GR(9,2)", "Z/49", "Z/16"}) {
      const FiniteRing r = parse_ring_spec(spec);
      CHECK(count_translate_violations(r.factor(0), r.factor(0).residue_char()) == 0);
    }
    CHECK_THROWS_AS(count_translate_violations(parse_ring_spec("Z/27").factor(0), 5), PreconditionError);
  }

  TEST_CASE("small sweeps") {
    VerifyOptions o;
    o.corpus = "Z/9,F(13,1),Z/4 x Z/3,F(2,4)";
    for (const char* id : {"connectivity", "anticonnectivity", "primality", "homogeneous", "wreath"}) {
      CAPTURE(id);
      const VerifyTable t = run_verify(id, o);
      CHECK(t.mismatches == 0);
      CHECK_FALSE(t.rows.empty());
    }
    o.limit = 200;
    for (const char* id : {"weil", "k3bound", "phi3", "repeatedroots"}) {
      CAPTURE(id);
      CHECK(run_verify(id, o).mismatches == 0);
    }
  }

  TEST_CASE("csv quoting and flags") {
    VerifyTable t;
    t.header = {"a", "b", "status"};
    t.add({"x,y", "say \"hi\""}, true);
    t.add({"1", "2"}, false);
    std::ostringstream out;
    t.write_csv(out);
    CHECK(out.str() == "a,b,status\n\"x,y\",\"say \"\"hi\"\"\",ok\n1,2,MISMATCH\n");
    CHECK(t.mismatches == 1);
  }
}

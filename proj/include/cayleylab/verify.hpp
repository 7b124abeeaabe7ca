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
#include <string>
#include <vector>

#include "cayleylab/ring.hpp"

namespace cayleylab {

struct VerifyOptions {
  /// "default" or a comma separated list of ring specs.
  std::string corpus = "default";
  /// Explicit rings for the wreath and homogeneous checks; empty means
  /// the local rings of the corpus.
  std::string rings;
  std::vector<std::uint32_t> primes{2, 3, 5, 7};
  /// Sweep bound; 0 picks the per-check default.
  std::uint32_t limit = 0;
  unsigned workers = 0;
};

/// A CSV table whose last column is "status" (ok / MISMATCH).
struct VerifyTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t mismatches = 0;

  void add(std::vector<std::string> row, bool ok);
  void write_csv(std::ostream& out) const;
};

/// connectivity, anticonnectivity, primality, wreath, homogeneous, weil,
/// k3bound, phi3, rootprimes, repeatedroots.
const std::vector<std::string>& verify_ids();

/// Throws SpecError for an unknown id.
VerifyTable run_verify(const std::string& id, const VerifyOptions& options);

/// Primes below 500 for which g_p has a root mod p, as published.
const std::vector<std::uint32_t>& reference_root_primes();

/// Local R of residue characteristic p with M = pR: checks
/// G_R(p) == G_{R/p^2 R}(p) . E_n (n = |p^2 R|) edge for edge under
/// x -> (x mod p^2, index of x - lift(x mod p^2) in p^2 R).
struct WreathCheck {
  std::string quotient;
  std::size_t n = 0;
  std::size_t edges = 0;
  bool isomorphic = false;
};
WreathCheck check_wreath(const LocalRing& ring);

/// For a in M \ M^2: (a + S) and S are disjoint. Returns the number of
/// violating a. Requires residue characteristic p and M = pR.
std::size_t count_translate_violations(const LocalRing& ring, std::uint32_t p);

}  // namespace cayleylab

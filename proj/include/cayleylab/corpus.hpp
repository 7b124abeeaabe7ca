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
#include <vector>

#include "cayleylab/structure.hpp"

namespace cayleylab {

/// Local rings of the default sweep, smallest first: Z/ell^k (k >= 2) up
/// to 729, every F(ell,m) up to 256 and GR(ell^2,r) (r >= 2) up to 625.
std::vector<std::string> default_local_specs();

/// Pairwise products of default_local_specs() with at most max_size
/// elements, each unordered pair once.
std::vector<std::string> default_product_specs(std::uint32_t max_size = 1024);

/// Whether G_R(p) is undirected, i.e. -1 is a p-th power of a unit.
bool is_admissible(const std::string& spec, std::uint32_t p);

/// Every admissible (spec, p) pair, specs in the given order and primes
/// ascending within a spec.
std::vector<CorpusEntry> make_corpus(std::span<const std::string> specs, std::span<const std::uint32_t> primes);

/// Locals then products, primes {2, 3, 5, 7}.
std::vector<CorpusEntry> default_corpus();

/// "default", or a comma separated list of ring specs.
std::vector<CorpusEntry> corpus_from_arg(const std::string& arg, std::span<const std::uint32_t> primes);

}  // namespace cayleylab

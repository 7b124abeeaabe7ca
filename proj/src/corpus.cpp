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

#include "cayleylab/corpus.hpp"

#include <algorithm>

#include "cayleylab/numtheory.hpp"
#include "cayleylab/ring.hpp"

namespace cayleylab {

namespace {

struct Sized {
  std::uint32_t size;
  std::string spec;
};

std::vector<Sized> local_rings() {
  std::vector<Sized> out;
  for (std::uint32_t ell : primes_up_to(27)) {
    std::uint32_t n = ell * ell;
    for (std::uint32_t k = 2; n <= 729; ++k, n *= ell) out.push_back({n, "Z/" + std::to_string(n)});
  }
  for (std::uint32_t ell : primes_up_to(256)) {
    std::uint32_t q = ell;
    for (std::uint32_t m = 1; q <= 256; ++m, q *= ell) {
      out.push_back({q, "F(" + std::to_string(ell) + "," + std::to_string(m) + ")"});
    }
  }
  for (std::uint32_t ell : primes_up_to(25)) {
    const std::uint32_t c = ell * ell;
    std::uint32_t n = c * c;
    for (std::uint32_t r = 2; n <= 625; ++r, n *= c) {
      out.push_back({n, "GR(" + std::to_string(c) + "," + std::to_string(r) + ")"});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Sized& a, const Sized& b) { return a.size < b.size; });
  return out;
}

}  // namespace

std::vector<std::string> default_local_specs() {
  std::vector<std::string> out;
  for (auto& r : local_rings()) out.push_back(r.spec);
  return out;
}

std::vector<std::string> default_product_specs(std::uint32_t max_size) {
  const auto locals = local_rings();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < locals.size(); ++i) {
    for (std::size_t j = i; j < locals.size(); ++j) {
      if (static_cast<std::uint64_t>(locals[i].size) * locals[j].size > max_size) break;
      out.push_back(locals[i].spec + " x " + locals[j].spec);
    }
  }
  return out;
}

bool is_admissible(const std::string& spec, std::uint32_t p) {
  return is_minus_one_pth_power(parse_ring_spec(spec), p);
}

std::vector<CorpusEntry> make_corpus(std::span<const std::string> specs, std::span<const std::uint32_t> primes) {
  std::vector<std::uint32_t> ps(primes.begin(), primes.end());
  std::sort(ps.begin(), ps.end());
  std::vector<CorpusEntry> out;
  for (const auto& s : specs) {
    const FiniteRing ring = parse_ring_spec(s);
    for (std::uint32_t p : ps) {
      if (is_minus_one_pth_power(ring, p)) out.push_back({s, p});
    }
  }
  return out;
}

std::vector<CorpusEntry> default_corpus() {
  auto specs = default_local_specs();
  const auto products = default_product_specs();
  specs.insert(specs.end(), products.begin(), products.end());
  const std::uint32_t primes[] = {2, 3, 5, 7};
  return make_corpus(specs, primes);
}

std::vector<CorpusEntry> corpus_from_arg(const std::string& arg, std::span<const std::uint32_t> primes) {
  if (arg == "default") {
    auto specs = default_local_specs();
    const auto products = default_product_specs();
    specs.insert(specs.end(), products.begin(), products.end());
    return make_corpus(specs, primes);
  }
  const auto specs = split_spec_list(arg);
  return make_corpus(specs, primes);
}

}  // namespace cayleylab

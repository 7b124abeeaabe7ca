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
#include <utility>
#include <vector>

namespace cayleylab {

// Small-integer number theory. Everything here works on 64-bit values and
// uses trial division, which is plenty for rings of at most a few million
// elements.

bool is_prime(std::uint64_t n);

/// Primes in [2, limit], ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// (prime, exponent) pairs, primes ascending. factorize(1) is empty.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
};

/// Returns (ell, k) with n = ell^k, k >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Saturating integer power: returns nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace cayleylab

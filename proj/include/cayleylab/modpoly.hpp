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
#include <vector>

namespace cayleylab::modp {

/// Dense polynomial over F_ell, coefficient i multiplies x^i. Trimmed
/// representations have a non-zero last entry; the zero polynomial is empty.
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
int degree(const Poly& f);

Poly sub(Poly a, const Poly& b, std::uint64_t ell);
Poly mul(const Poly& a, const Poly& b, std::uint64_t ell);
Poly derivative(const Poly& f, std::uint64_t ell);

/// Remainder of a modulo b. b must be non-zero.
Poly rem(Poly a, const Poly& b, std::uint64_t ell);

/// Quotient and remainder of a by b. b must be non-zero.
void divmod(const Poly& a, const Poly& b, std::uint64_t ell, Poly& quot, Poly& rem_out);

/// Monic gcd.
Poly gcd(Poly a, Poly b, std::uint64_t ell);

std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t ell);

/// Exhaustive irreducibility test: no monic factor of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint64_t ell);

/// Least monic irreducible of the given degree, ordering candidates by
/// the integer sum a_i * ell^i over the non-leading coefficients.
Poly lowest_irreducible(std::uint64_t ell, std::uint32_t degree);

}  // namespace cayleylab::modp

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

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cayleylab/modpoly.hpp"
#include "cayleylab/ring.hpp"

namespace cayleylab {

/// Dense polynomial with arbitrary-precision integer coefficients;
/// coefficient i multiplies x^i. Always trimmed, so the zero polynomial
/// has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly monomial(const mpz_class& c, std::size_t deg);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  /// Zero past the degree.
  mpz_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }
  /// Throws PreconditionError on the zero polynomial.
  const mpz_class& leading() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  IntPoly derivative() const;
  /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
  mpz_class content() const;
  /// Divided by its content, leading coefficient made positive.
  IntPoly primitive_part() const;
  mpz_class eval(const mpz_class& x) const;
  /// Horner evaluation mod p.
  std::uint64_t eval_mod(std::uint64_t x, std::uint64_t p) const;
  /// Coefficients reduced into [0, p), trimmed.
  modp::Poly reduce_mod(std::uint64_t p) const;

  /// Sparse "coeff*x^deg" terms, highest degree first, e.g.
  /// "1*x^2 + 1*x^1 + 1*x^0". The zero polynomial prints as "0".
  std::string to_string() const;
  /// JSON array of the dense coefficients, low degree first, written as
  /// plain integers of any length.
  std::string to_json_array() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// a / b when b divides a in Z[x]; nullopt otherwise. b must be non-zero.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Primitive gcd over Q by a primitive pseudo-remainder sequence; the
/// result is primitive with positive leading coefficient.
IntPoly gcd_over_q(const IntPoly& a, const IntPoly& b);

/// x^2 + x + 1.
IntPoly phi3();
/// (1 + x)^p - x^p - 1.
IntPoly build_f_p(std::uint32_t p);
/// f_p / p.
IntPoly build_h_p(std::uint32_t p);

/// How many times x^2 + x + 1 divides f_p, found by repeated exact division.
std::uint32_t phi3_division_count(std::uint32_t p);
/// The division count, checked against 1 for p = 2 mod 3 and 2 for
/// p = 1 mod 3. Throws PreconditionError for p <= 3.
std::uint32_t phi3_multiplicity(std::uint32_t p);

struct FactorizationRecord {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  IntPoly g;
  /// p * x * (x + 1) * (x^2 + x + 1)^m * g reproduces f_p exactly.
  bool verified = false;
};

/// f_p = p x (x+1) (x^2+x+1)^m g_p. Throws PreconditionError for p <= 3
/// and InvariantViolation if a division leaves a remainder.
FactorizationRecord extract_g_p(std::uint32_t p);

/// All a in [0, p) with f(a) = 0 mod p, ascending.
std::vector<std::uint64_t> roots_mod_p(const IntPoly& f, std::uint64_t p);

/// Primes 3 < p < limit for which g_p has a root mod p, ascending.
std::vector<std::uint32_t> find_root_primes(std::uint32_t limit, unsigned workers = 1);

/// Whether gcd(f, f') is constant. A separable reduction modulo a prime
/// not dividing the leading coefficient settles it quickly; otherwise
/// falls back to gcd_over_q. Throws PreconditionError on zero.
bool is_separable_over_q(const IntPoly& f);

/// Rational root theorem search over +-d/e with d | f(0), e | lc(f).
/// Throws PreconditionError when those coefficients exceed 2^40.
bool has_rational_root(const IntPoly& f);

struct RootMultiplicity {
  std::uint64_t residue = 0;
  std::uint32_t multiplicity = 0;
};

/// Repeated roots of h_p over F_p. Each one is found from h_p(a) =
/// h_p'(a) = 0, has its multiplicity counted by division by (x - a), and
/// must lie in [1, p-2] with multiplicity 2 and h_p''(a) != 0; anything
/// else throws InvariantViolation. Throws PreconditionError for p <= 3.
std::vector<RootMultiplicity> repeated_roots_mod_p(std::uint32_t p);

struct K3Witness {
  Element a = 0;
  /// {0, 1, -a^p} in ring order of discovery.
  std::vector<Element> triangle;
};

/// Least a (in enumeration order) with a and a + 1 units and f_p(a) = 0
/// in R, after checking that {0, 1, -a^p} spans a triangle of G_R(p).
/// Requires R local of residue characteristic p, p odd and M = pR.
std::optional<K3Witness> check_k3_criterion(const LocalRing& ring, std::uint32_t p);

}  // namespace cayleylab

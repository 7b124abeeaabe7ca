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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayleylab {

/// Index of a ring element in the ring's enumeration order. For a local
/// factor Z/c[x]/(f) of degree r the index is sum a_i * c^i over the
/// reduced coefficient vector; for a product ring the first factor is the
/// most significant digit.
using Element = std::uint32_t;

/// Default upper bound on |R| accepted by constructors: 2^20, or the value
/// of CAYLEYLAB_MAX_RING_SIZE when that is set to a positive integer.
std::uint64_t default_max_ring_size();

enum class LocalKind { Integers, Field, Galois };

/// A finite local ring presented as Z/ell^k [x] / (f) with f monic of
/// degree r and irreducible mod ell. Z/ell^k is the r = 1, f = x case and
/// F_{ell^m} is the k = 1 case. Immutable after construction.
class LocalRing {
 public:
  /// Z/ell^k.
  static LocalRing integers(std::uint32_t ell, std::uint32_t k);
  /// F_{ell^m}, with the lowest irreducible of degree m as modulus.
  static LocalRing field(std::uint32_t ell, std::uint32_t m);
  /// GR(ell^k, r), with the lowest irreducible of degree r mod ell lifted
  /// to coefficients in [0, ell).
  static LocalRing galois(std::uint32_t ell, std::uint32_t k, std::uint32_t r);

  LocalKind kind() const { return kind_; }
  std::uint32_t residue_char() const { return ell_; }
  std::uint32_t exponent() const { return k_; }
  std::uint32_t degree() const { return r_; }
  /// Additive characteristic ell^k.
  std::uint32_t characteristic() const { return char_; }
  std::uint32_t size() const { return size_; }
  std::uint32_t residue_field_size() const { return residue_size_; }
  std::uint32_t unit_count() const { return size_ - size_ / residue_size_; }
  bool is_field() const { return k_ == 1; }
  /// Monic modulus, low degree first, length r + 1, reduced mod ell^k.
  const std::vector<std::uint32_t>& defining_poly() const { return poly_; }
  std::string spec_string() const;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(std::int64_t c) const;
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_unit(Element a) const;
  /// Throws PreconditionError for non-units.
  Element inverse(Element a) const;

  std::vector<std::uint32_t> coefficients(Element a) const;
  Element from_coefficients(std::span<const std::uint32_t> coeffs) const;
  std::string label(Element a) const;

  /// R / ell^j R for 1 <= j; j >= k returns a copy of this ring.
  LocalRing truncate(std::uint32_t j) const;
  /// The residue field R/M, presented as F_ell[x]/(f mod ell).
  LocalRing residue_field() const;
  /// Image of x under the coefficient-wise reduction R -> quotient, where
  /// quotient came from truncate() or residue_field() on this ring.
  Element reduce_to(const LocalRing& quotient, Element x) const;
  /// Lift with coefficients taken verbatim (a right inverse of reduce_to).
  Element lift_from(const LocalRing& quotient, Element y) const;

  friend bool operator==(const LocalRing& a, const LocalRing& b) {
    return a.kind_ == b.kind_ && a.ell_ == b.ell_ && a.k_ == b.k_ && a.r_ == b.r_ &&
           a.poly_ == b.poly_;
  }

 private:
  LocalRing(LocalKind kind, std::uint32_t ell, std::uint32_t k, std::uint32_t r,
            std::vector<std::uint32_t> poly);

  LocalKind kind_;
  std::uint32_t ell_;
  std::uint32_t k_;
  std::uint32_t r_;
  std::uint32_t char_;
  std::uint32_t size_;
  std::uint32_t residue_size_;
  std::vector<std::uint32_t> poly_;
};

/// A finite commutative ring as an ordered product of local rings.
class FiniteRing {
 public:
  /// Throws OversizeError when the product exceeds max_size.
  explicit FiniteRing(std::vector<LocalRing> factors,
                      std::uint64_t max_size = default_max_ring_size());

  const std::vector<LocalRing>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  const LocalRing& factor(std::size_t i) const { return factors_[i]; }
  bool is_local() const { return factors_.size() == 1; }
  std::uint32_t size() const { return size_; }
  std::uint32_t unit_count() const;
  const std::string& spec_string() const { return spec_; }

  Element zero() const { return 0; }
  Element one() const;
  Element from_integer(std::int64_t c) const;
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;
  bool is_unit(Element a) const;
  Element inverse(Element a) const;

  /// Coordinate of x in factor i.
  Element component(Element x, std::size_t i) const { return (x / stride_[i]) % factors_[i].size(); }
  std::vector<Element> split(Element x) const;
  Element combine(std::span<const Element> parts) const;
  std::string label(Element x) const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<LocalRing> factors_;
  std::vector<std::uint32_t> stride_;
  std::uint32_t size_ = 1;
  std::string spec_;
};

/// Parses `ring := atom ("x" atom)*` with atoms "Z/n", "F(l,m)" and
/// "GR(q,r)" (q a prime power, written either as an integer or as "p^k").
/// Whitespace is ignored. Z/n is split into its prime-power factors in
/// ascending prime order; atoms otherwise keep their written order.
FiniteRing parse_ring_spec(std::string_view spec,
                           std::uint64_t max_size = default_max_ring_size());

/// Splits a comma separated list of ring specs, ignoring commas nested
/// inside parentheses.
std::vector<std::string> split_spec_list(std::string_view list);

/// Cartesian product of per-factor subsets (each sorted), returned in ring
/// enumeration order.
std::vector<Element> product_set(const FiniteRing& ring, const std::vector<std::vector<Element>>& parts);

/// The connection set S = (R^x)^p of G_R(p).
class DifferenceSet {
 public:
  DifferenceSet(const FiniteRing& ring, std::uint32_t p, std::vector<Element> members);

  std::uint32_t prime() const { return p_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Element x) const { return x < member_.size() && member_[x] != 0; }
  /// Whether -1 lies in S, i.e. whether G_R(p) is undirected.
  bool is_symmetric() const { return symmetric_; }

 private:
  std::uint32_t p_;
  std::vector<Element> members_;
  std::vector<unsigned char> member_;
  bool symmetric_;
};

/// An ideal, stored as its sorted member list.
struct Ideal {
  std::string description;
  std::vector<Element> members;

  std::size_t size() const { return members.size(); }
  bool contains(Element x) const;
};

/// S = {x^p : x a unit}, computed factor by factor.
DifferenceSet units_pth_powers(const FiniteRing& ring, std::uint32_t p);
bool is_minus_one_pth_power(const FiniteRing& ring, std::uint32_t p);

/// Non-units of a local ring. Throws PreconditionError when d > 1.
Ideal maximal_ideal(const FiniteRing& ring);
Ideal maximal_ideal(const LocalRing& ring);
/// R * g.
Ideal ideal_generated(const FiniteRing& ring, Element g);
/// c * R.
Ideal scalar_ideal(const FiniteRing& ring, std::int64_t c);
/// Product of the maximal ideals of the factors.
Ideal jacobson_radical(const FiniteRing& ring);
/// Additive span of all products a * b with a in I, b in J.
Ideal ideal_product(const FiniteRing& ring, const Ideal& a, const Ideal& b);

/// The canonical projection of a local ring onto its residue field.
class ResidueMap {
 public:
  explicit ResidueMap(const LocalRing& ring);

  const FiniteRing& source() const { return source_; }
  const FiniteRing& residue_field() const { return field_; }
  Element project(Element x) const;
  Element lift(Element y) const;

 private:
  FiniteRing source_;
  FiniteRing field_;
};

ResidueMap residue_projection(const FiniteRing& local_ring);

}  // namespace cayleylab

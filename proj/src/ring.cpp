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

#include "cayleylab/ring.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "cayleylab/error.hpp"
#include "cayleylab/modpoly.hpp"
#include "cayleylab/numtheory.hpp"

namespace cayleylab {

namespace {

constexpr std::size_t kMaxDegree = 32;
using Digits = std::array<std::uint64_t, 2 * kMaxDegree>;

std::uint32_t checked_size(std::uint64_t base, std::uint32_t exp, const char* what) {
  auto v = checked_pow(base, exp);
  if (!v || *v > UINT32_MAX) throw OversizeError(std::string(what) + " is too large");
  return static_cast<std::uint32_t>(*v);
}

std::vector<std::uint32_t> to_u32(const modp::Poly& f, std::size_t len) {
  std::vector<std::uint32_t> out(len, 0);
  for (std::size_t i = 0; i < f.size() && i < len; ++i) out[i] = static_cast<std::uint32_t>(f[i]);
  return out;
}

}  // namespace

std::uint64_t default_max_ring_size() {
  constexpr std::uint64_t kDefault = 1ULL << 20;
  const char* env = std::getenv("CAYLEYLAB_MAX_RING_SIZE");
  if (env == nullptr) return kDefault;
  std::uint64_t v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) return kDefault;
  return v;
}

// ---------------------------------------------------------------------------
// LocalRing

LocalRing::LocalRing(LocalKind kind, std::uint32_t ell, std::uint32_t k, std::uint32_t r,
                     std::vector<std::uint32_t> poly)
    : kind_(kind), ell_(ell), k_(k), r_(r), poly_(std::move(poly)) {
  if (!is_prime(ell)) throw SpecError("residue characteristic " + std::to_string(ell) + " is not prime");
  if (k < 1 || r < 1) throw SpecError("exponent and degree must be at least 1");
  if (r > kMaxDegree) throw OversizeError("degree " + std::to_string(r) + " is too large");
  char_ = checked_size(ell, k, "characteristic");
  size_ = checked_size(char_, r, "ring");
  residue_size_ = checked_size(ell, r, "residue field");
}

LocalRing LocalRing::integers(std::uint32_t ell, std::uint32_t k) {
  return LocalRing(LocalKind::Integers, ell, k, 1, {0, 1});
}

LocalRing LocalRing::field(std::uint32_t ell, std::uint32_t m) {
  if (!is_prime(ell)) throw SpecError("field characteristic " + std::to_string(ell) + " is not prime");
  if (m < 1) throw SpecError("field degree must be at least 1");
  checked_size(ell, m, "field");
  return LocalRing(LocalKind::Field, ell, 1, m, to_u32(modp::lowest_irreducible(ell, m), m + 1));
}

LocalRing LocalRing::galois(std::uint32_t ell, std::uint32_t k, std::uint32_t r) {
  if (!is_prime(ell)) throw SpecError("Galois ring characteristic base " + std::to_string(ell) + " is not prime");
  if (r < 1 || k < 1) throw SpecError("Galois ring exponent and degree must be at least 1");
  checked_size(ell, k * r, "Galois ring");
  return LocalRing(LocalKind::Galois, ell, k, r, to_u32(modp::lowest_irreducible(ell, r), r + 1));
}

std::string LocalRing::spec_string() const {
  switch (kind_) {
    case LocalKind::Integers:
      return "Z/" + std::to_string(char_);
    case LocalKind::Field:
      return "F(" + std::to_string(ell_) + "," + std::to_string(r_) + ")";
    case LocalKind::Galois:
      return "GR(" + std::to_string(char_) + "," + std::to_string(r_) + ")";
  }
  return {};
}

Element LocalRing::from_integer(std::int64_t c) const {
  const auto m = static_cast<std::int64_t>(char_);
  return static_cast<Element>(((c % m) + m) % m);
}

Element LocalRing::add(Element a, Element b) const {
  if (r_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) + b) % char_);
  Element out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    const std::uint64_t d = (a % char_ + b % char_) % char_;
    out += static_cast<Element>(d * place);
    a /= char_;
    b /= char_;
    place *= char_;
  }
  return out;
}

Element LocalRing::neg(Element a) const {
  if (r_ == 1) return a == 0 ? 0 : char_ - a;
  Element out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    const std::uint64_t d = a % char_;
    out += static_cast<Element>(((char_ - d) % char_) * place);
    a /= char_;
    place *= char_;
  }
  return out;
}

Element LocalRing::sub(Element a, Element b) const {
  if (r_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) + char_ - b) % char_);
  return add(a, neg(b));
}

Element LocalRing::mul(Element a, Element b) const {
  const std::uint64_t c = char_;
  if (r_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % c);
  Digits da{};
  Digits db{};
  for (std::uint32_t i = 0; i < r_; ++i) {
    da[i] = a % c;
    db[i] = b % c;
    a /= char_;
    b /= char_;
  }
  Digits prod{};
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % c;
  }
  // Reduce with the monic modulus: x^r = -(f_0 + ... + f_{r-1} x^{r-1}).
  for (std::uint32_t d = 2 * r_ - 2; d >= r_; --d) {
    const std::uint64_t t = prod[d];
    if (t != 0) {
      for (std::uint32_t i = 0; i < r_; ++i) {
        prod[d - r_ + i] = (prod[d - r_ + i] + (c - t) * poly_[i]) % c;
      }
      prod[d] = 0;
    }
  }
  Element out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += static_cast<Element>(prod[i] * place);
    place *= c;
  }
  return out;
}

Element LocalRing::pow(Element a, std::uint64_t e) const {
  Element result = one();
  while (e != 0) {
    if (e & 1U) result = mul(result, a);
    e >>= 1U;
    if (e != 0) a = mul(a, a);
  }
  return result;
}

bool LocalRing::is_unit(Element a) const {
  for (std::uint32_t i = 0; i < r_; ++i) {
    if ((a % char_) % ell_ != 0) return true;
    a /= char_;
  }
  return false;
}

Element LocalRing::inverse(Element a) const {
  if (!is_unit(a)) throw PreconditionError("element " + label(a) + " of " + spec_string() + " is not a unit");
  return pow(a, unit_count() - 1);
}

std::vector<std::uint32_t> LocalRing::coefficients(Element a) const {
  std::vector<std::uint32_t> out(r_);
  for (std::uint32_t i = 0; i < r_; ++i) {
    out[i] = a % char_;
    a /= char_;
  }
  return out;
}

Element LocalRing::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  Element out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    const std::uint64_t d = i < coeffs.size() ? coeffs[i] % char_ : 0;
    out += static_cast<Element>(d * place);
    place *= char_;
  }
  return out;
}

std::string LocalRing::label(Element a) const {
  if (r_ == 1) return std::to_string(a);
  std::string s = "[";
  const auto c = coefficients(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(c[i]);
  }
  return s + "]";
}

LocalRing LocalRing::truncate(std::uint32_t j) const {
  if (j == 0) throw PreconditionError("cannot truncate to ell^0");
  if (j >= k_) return *this;
  const std::uint32_t m = static_cast<std::uint32_t>(ipow(ell_, j));
  std::vector<std::uint32_t> poly(poly_.size());
  for (std::size_t i = 0; i < poly_.size(); ++i) poly[i] = poly_[i] % m;
  const LocalKind kind = kind_ == LocalKind::Integers ? LocalKind::Integers : LocalKind::Galois;
  return LocalRing(kind, ell_, j, r_, std::move(poly));
}

LocalRing LocalRing::residue_field() const {
  std::vector<std::uint32_t> poly(poly_.size());
  for (std::size_t i = 0; i < poly_.size(); ++i) poly[i] = poly_[i] % ell_;
  return LocalRing(LocalKind::Field, ell_, 1, r_, std::move(poly));
}

Element LocalRing::reduce_to(const LocalRing& quotient, Element x) const {
  return quotient.from_coefficients(coefficients(x));
}

Element LocalRing::lift_from(const LocalRing& quotient, Element y) const {
  return from_coefficients(quotient.coefficients(y));
}

// ---------------------------------------------------------------------------
// FiniteRing

FiniteRing::FiniteRing(std::vector<LocalRing> factors, std::uint64_t max_size)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw SpecError("a ring needs at least one local factor");
  std::uint64_t total = 1;
  for (const auto& f : factors_) {
    total *= f.size();
    if (total > max_size) {
      throw OversizeError("ring has more than " + std::to_string(max_size) +
                          " elements (raise --max-ring-size or CAYLEYLAB_MAX_RING_SIZE)");
    }
  }
  if (total > UINT32_MAX) throw OversizeError("ring is too large");
  size_ = static_cast<std::uint32_t>(total);
  stride_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size() - 1; i > 0; --i) stride_[i - 1] = stride_[i] * factors_[i].size();
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i != 0) spec_ += " x ";
    spec_ += factors_[i].spec_string();
  }
}

std::uint32_t FiniteRing::unit_count() const {
  std::uint32_t n = 1;
  for (const auto& f : factors_) n *= f.unit_count();
  return n;
}

std::vector<Element> FiniteRing::split(Element x) const {
  std::vector<Element> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = component(x, i);
  return out;
}

Element FiniteRing::combine(std::span<const Element> parts) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x += parts[i] * stride_[i];
  return x;
}

Element FiniteRing::one() const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x += factors_[i].one() * stride_[i];
  return x;
}

Element FiniteRing::from_integer(std::int64_t c) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x += factors_[i].from_integer(c) * stride_[i];
  return x;
}

#define CAYLEYLAB_COMPONENTWISE2(name)                                                   \
  Element FiniteRing::name(Element a, Element b) const {                                 \
    if (factors_.size() == 1) return factors_[0].name(a, b);                             \
    Element x = 0;                                                                       \
    for (std::size_t i = 0; i < factors_.size(); ++i) {                                  \
      x += factors_[i].name(component(a, i), component(b, i)) * stride_[i];              \
    }                                                                                    \
    return x;                                                                            \
  }

CAYLEYLAB_COMPONENTWISE2(add)
CAYLEYLAB_COMPONENTWISE2(sub)
CAYLEYLAB_COMPONENTWISE2(mul)
#undef CAYLEYLAB_COMPONENTWISE2

Element FiniteRing::neg(Element a) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x += factors_[i].neg(component(a, i)) * stride_[i];
  return x;
}

Element FiniteRing::pow(Element a, std::uint64_t e) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x += factors_[i].pow(component(a, i), e) * stride_[i];
  return x;
}

bool FiniteRing::is_unit(Element a) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (!factors_[i].is_unit(component(a, i))) return false;
  }
  return true;
}

Element FiniteRing::inverse(Element a) const {
  Element x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x += factors_[i].inverse(component(a, i)) * stride_[i];
  return x;
}

std::string FiniteRing::label(Element x) const {
  if (factors_.size() == 1) return factors_[0].label(x);
  std::string s = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i != 0) s += ',';
    s += factors_[i].label(component(x, i));
  }
  return s + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  if (s.empty()) throw SpecError("malformed ring spec '" + std::string(whole) + "': expected an integer");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw SpecError("malformed ring spec '" + std::string(whole) + "': bad integer '" + std::string(s) + "'");
  }
  return v;
}

PrimePower parse_prime_power(std::string_view s, std::string_view whole) {
  const auto caret = s.find('^');
  if (caret != std::string_view::npos) {
    const std::uint64_t base = parse_uint(s.substr(0, caret), whole);
    const std::uint64_t exp = parse_uint(s.substr(caret + 1), whole);
    if (!is_prime(base)) throw SpecError("GR base " + std::to_string(base) + " is not prime");
    if (exp < 1 || exp > 64) throw SpecError("GR exponent must be in [1, 64]");
    return {base, static_cast<std::uint32_t>(exp)};
  }
  const std::uint64_t q = parse_uint(s, whole);
  auto pp = as_prime_power(q);
  if (!pp) throw SpecError("GR characteristic " + std::to_string(q) + " is not a prime power");
  return *pp;
}

// Splits "a,b" inside the parentheses of an atom like F(a,b).
std::pair<std::string_view, std::string_view> parse_pair(std::string_view atom, std::size_t open,
                                                         std::string_view whole) {
  if (atom.back() != ')') throw SpecError("malformed ring spec '" + std::string(whole) + "': missing ')'");
  const std::string_view inner = atom.substr(open + 1, atom.size() - open - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos) {
    throw SpecError("malformed ring spec '" + std::string(whole) + "': expected two arguments");
  }
  return {inner.substr(0, comma), inner.substr(comma + 1)};
}

std::uint64_t factor_size(const PrimePower& pp, std::uint64_t r) {
  auto v = checked_pow(pp.prime, static_cast<std::uint32_t>(pp.exponent * r));
  if (!v) throw OversizeError("ring is too large");
  return *v;
}

}  // namespace

FiniteRing parse_ring_spec(std::string_view spec, std::uint64_t max_size) {
  std::string compact;
  for (char c : spec) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw SpecError("empty ring spec");

  // Collect atoms separated by 'x' at parenthesis depth 0.
  std::vector<std::string_view> atoms;
  const std::string_view whole(compact);
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < whole.size(); ++i) {
    if (whole[i] == '(') ++depth;
    if (whole[i] == ')') --depth;
    if (depth < 0) throw SpecError("malformed ring spec '" + std::string(spec) + "': unbalanced ')'");
    if (depth == 0 && whole[i] == 'x') {
      atoms.push_back(whole.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw SpecError("malformed ring spec '" + std::string(spec) + "': unbalanced '('");
  atoms.push_back(whole.substr(start));

  // First pass: validate and size everything so oversize requests fail
  // before any irreducible-polynomial search runs.
  struct Pending {
    LocalKind kind;
    PrimePower pp;
    std::uint32_t degree;
  };
  std::vector<Pending> pending;
  std::uint64_t total = 1;
  for (std::string_view atom : atoms) {
    if (atom.empty()) throw SpecError("malformed ring spec '" + std::string(spec) + "': empty factor");
    if (atom.substr(0, 2) == "Z/") {
      const std::uint64_t n = parse_uint(atom.substr(2), whole);
      if (n < 2) throw SpecError("Z/n needs n >= 2 (got " + std::to_string(n) + ")");
      for (auto [prime, e] : factorize(n)) pending.push_back({LocalKind::Integers, {prime, e}, 1});
    } else if (atom.substr(0, 2) == "F(") {
      auto [l, m] = parse_pair(atom, 1, whole);
      const std::uint64_t ell = parse_uint(l, whole);
      const std::uint64_t deg = parse_uint(m, whole);
      if (!is_prime(ell)) throw SpecError("F(l,m): " + std::to_string(ell) + " is not prime");
      if (deg < 1 || deg > kMaxDegree) throw SpecError("F(l,m): m must be in [1, 32]");
      pending.push_back({LocalKind::Field, {ell, 1}, static_cast<std::uint32_t>(deg)});
    } else if (atom.substr(0, 3) == "GR(") {
      auto [q, r] = parse_pair(atom, 2, whole);
      const PrimePower pp = parse_prime_power(q, whole);
      const std::uint64_t deg = parse_uint(r, whole);
      if (deg < 1 || deg > kMaxDegree) throw SpecError("GR(q,r): r must be in [1, 32]");
      pending.push_back({LocalKind::Galois, pp, static_cast<std::uint32_t>(deg)});
    } else {
      throw SpecError("malformed ring spec '" + std::string(spec) + "': unknown factor '" + std::string(atom) + "'");
    }
  }
  for (const auto& p : pending) {
    total *= factor_size(p.pp, p.degree);
    if (total > max_size) {
      throw OversizeError("ring '" + std::string(spec) + "' has more than " + std::to_string(max_size) +
                          " elements (raise --max-ring-size or CAYLEYLAB_MAX_RING_SIZE)");
    }
  }

  std::vector<LocalRing> factors;
  for (const auto& p : pending) {
    const auto ell = static_cast<std::uint32_t>(p.pp.prime);
    switch (p.kind) {
      case LocalKind::Integers:
        factors.push_back(LocalRing::integers(ell, p.pp.exponent));
        break;
      case LocalKind::Field:
        factors.push_back(LocalRing::field(ell, p.degree));
        break;
      case LocalKind::Galois:
        factors.push_back(LocalRing::galois(ell, p.pp.exponent, p.degree));
        break;
    }
  }
  return FiniteRing(std::move(factors), max_size);
}

std::vector<std::string> split_spec_list(std::string_view list) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : list) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  const auto space = [](unsigned char c) { return std::isspace(c) != 0; };
  for (auto& s : out) {
    while (!s.empty() && space(s.back())) s.pop_back();
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), space));
  }
  std::erase_if(out, [](const std::string& s) { return s.empty(); });
  return out;
}

// ---------------------------------------------------------------------------
// Connection sets and ideals

DifferenceSet::DifferenceSet(const FiniteRing& ring, std::uint32_t p, std::vector<Element> members)
    : p_(p), members_(std::move(members)), member_(ring.size(), 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Element x : members_) member_[x] = 1;
  symmetric_ = contains(ring.neg(ring.one()));
}

bool Ideal::contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }

std::vector<Element> product_set(const FiniteRing& ring, const std::vector<std::vector<Element>>& parts) {
  std::vector<Element> out{0};
  std::uint32_t stride = ring.size();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    stride /= ring.factor(i).size();
    std::vector<Element> next;
    next.reserve(out.size() * parts[i].size());
    for (Element base : out) {
      for (Element y : parts[i]) next.push_back(base + y * stride);
    }
    out = std::move(next);
  }
  return out;
}

DifferenceSet units_pth_powers(const FiniteRing& ring, std::uint32_t p) {
  if (!is_prime(p)) throw SpecError("p = " + std::to_string(p) + " is not prime");
  std::vector<std::vector<Element>> parts;
  for (const auto& f : ring.factors()) {
    std::vector<unsigned char> hit(f.size(), 0);
    for (Element x = 0; x < f.size(); ++x) {
      if (f.is_unit(x)) hit[f.pow(x, p)] = 1;
    }
    std::vector<Element> s;
    for (Element x = 0; x < f.size(); ++x) {
      if (hit[x] != 0) s.push_back(x);
    }
    parts.push_back(std::move(s));
  }
  return DifferenceSet(ring, p, product_set(ring, parts));
}

bool is_minus_one_pth_power(const FiniteRing& ring, std::uint32_t p) {
  // Componentwise: -1 is a p-th power of a unit iff it is one in each factor.
  for (const auto& f : ring.factors()) {
    const Element minus_one = f.neg(f.one());
    bool found = false;
    for (Element x = 0; x < f.size() && !found; ++x) {
      found = f.is_unit(x) && f.pow(x, p) == minus_one;
    }
    if (!found) return false;
  }
  return true;
}

Ideal maximal_ideal(const LocalRing& ring) {
  Ideal out{"M(" + ring.spec_string() + ")", {}};
  for (Element x = 0; x < ring.size(); ++x) {
    if (!ring.is_unit(x)) out.members.push_back(x);
  }
  return out;
}

Ideal maximal_ideal(const FiniteRing& ring) {
  if (!ring.is_local()) {
    throw PreconditionError("maximal_ideal: " + ring.spec_string() + " is not local");
  }
  return maximal_ideal(ring.factor(0));
}

Ideal ideal_generated(const FiniteRing& ring, Element g) {
  std::vector<unsigned char> hit(ring.size(), 0);
  for (Element r = 0; r < ring.size(); ++r) hit[ring.mul(r, g)] = 1;
  Ideal out{"(" + ring.label(g) + ")", {}};
  for (Element x = 0; x < ring.size(); ++x) {
    if (hit[x] != 0) out.members.push_back(x);
  }
  return out;
}

Ideal scalar_ideal(const FiniteRing& ring, std::int64_t c) {
  Ideal out = ideal_generated(ring, ring.from_integer(c));
  out.description = std::to_string(c) + "R";
  return out;
}

Ideal jacobson_radical(const FiniteRing& ring) {
  std::vector<std::vector<Element>> parts;
  for (const auto& f : ring.factors()) parts.push_back(maximal_ideal(f).members);
  return Ideal{"J(" + ring.spec_string() + ")", product_set(ring, parts)};
}

Ideal ideal_product(const FiniteRing& ring, const Ideal& a, const Ideal& b) {
  std::vector<unsigned char> in(ring.size(), 0);
  std::vector<Element> frontier;
  in[0] = 1;
  frontier.push_back(0);
  std::vector<Element> gens;
  for (Element x : a.members) {
    for (Element y : b.members) {
      const Element z = ring.mul(x, y);
      if (in[z] == 0) {
        in[z] = 1;
        gens.push_back(z);
        frontier.push_back(z);
      }
    }
  }
  // Additive closure of the product set.
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    for (Element g : gens) {
      const Element z = ring.add(frontier[i], g);
      if (in[z] == 0) {
        in[z] = 1;
        frontier.push_back(z);
      }
    }
  }
  Ideal out{a.description + "*" + b.description, {}};
  for (Element x = 0; x < ring.size(); ++x) {
    if (in[x] != 0) out.members.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Residue map

ResidueMap::ResidueMap(const LocalRing& ring)
    : source_(FiniteRing({ring}, UINT32_MAX)), field_(FiniteRing({ring.residue_field()}, UINT32_MAX)) {}

Element ResidueMap::project(Element x) const { return source_.factor(0).reduce_to(field_.factor(0), x); }

Element ResidueMap::lift(Element y) const { return source_.factor(0).lift_from(field_.factor(0), y); }

ResidueMap residue_projection(const FiniteRing& local_ring) {
  if (!local_ring.is_local()) {
    throw PreconditionError("residue_projection: " + local_ring.spec_string() + " is not local");
  }
  return ResidueMap(local_ring.factor(0));
}

}  // namespace cayleylab

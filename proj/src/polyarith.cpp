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

#include "cayleylab/polyarith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "cayleylab/error.hpp"
#include "cayleylab/numtheory.hpp"
#include "cayleylab/parallel.hpp"

namespace cayleylab {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t deg) {
  std::vector<mpz_class> v(deg + 1, 0);
  v[deg] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const mpz_class& c, const IntPoly& a) {
  std::vector<mpz_class> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  if (coeffs_.back() < 0) c = -c;
  std::vector<mpz_class> v(coeffs_);
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::uint64_t IntPoly::eval_mod(std::uint64_t x, std::uint64_t p) const {
  return modp::eval(reduce_mod(p), x % p, p);
}

modp::Poly IntPoly::reduce_mod(std::uint64_t p) const {
  modp::Poly out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i] = mpz_fdiv_ui(coeffs_[i].get_mpz_t(), static_cast<unsigned long>(p));
  }
  modp::trim(out);
  return out;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    if (s.empty()) {
      s += c.get_str();
    } else {
      s += c < 0 ? " - " : " + ";
      s += mpz_class(abs(c)).get_str();
    }
    s += "*x^" + std::to_string(k);
  }
  return s;
}

std::string IntPoly::to_json_array() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) s += ',';
    s += coeffs_[i].get_str();
  }
  return s + "]";
}

// ---------------------------------------------------------------------------

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r(a.coefficients());
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<mpz_class> q(r.size() - db, 0);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), bc[db].get_mpz_t());
    q[k - db] = t;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const mpz_class lc = b.leading();
  const int db = b.degree();
  int e = a.degree() - db + 1;
  IntPoly r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const IntPoly term = IntPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db));
    r = lc * r - term * b;
    --e;
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
  return scale * r;
}

IntPoly gcd_over_q(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return x.primitive_part();
}

// ---------------------------------------------------------------------------

IntPoly phi3() { return IntPoly{1, 1, 1}; }

IntPoly build_f_p(std::uint32_t p) {
  if (p < 2) throw PreconditionError("f_p needs p >= 2");
  std::vector<mpz_class> v(p, 0);
  for (std::uint32_t i = 1; i < p; ++i) mpz_bin_uiui(v[i].get_mpz_t(), p, i);
  return IntPoly(std::move(v));
}

IntPoly build_h_p(std::uint32_t p) {
  auto h = divide_exact(build_f_p(p), IntPoly{static_cast<long>(p)});
  if (!h) throw InvariantViolation("f_" + std::to_string(p) + " is not divisible by " + std::to_string(p));
  return *h;
}

std::uint32_t phi3_division_count(std::uint32_t p) {
  IntPoly h = build_h_p(p);
  const IntPoly phi = phi3();
  std::uint32_t m = 0;
  while (auto q = divide_exact(h, phi)) {
    h = std::move(*q);
    ++m;
  }
  return m;
}

std::uint32_t phi3_multiplicity(std::uint32_t p) {
  if (p <= 3 || !is_prime(p)) throw PreconditionError("phi3 multiplicity needs a prime p > 3");
  const std::uint32_t m = phi3_division_count(p);
  const std::uint32_t expected = p % 3 == 2 ? 1 : 2;
  if (m != expected) {
    throw InvariantViolation("x^2+x+1 divides f_" + std::to_string(p) + " " + std::to_string(m) +
                             " times, expected " + std::to_string(expected));
  }
  return m;
}

FactorizationRecord extract_g_p(std::uint32_t p) {
  if (p <= 3 || !is_prime(p)) throw PreconditionError("g_p needs a prime p > 3");
  const IntPoly f = build_f_p(p);
  FactorizationRecord rec;
  rec.p = p;
  rec.m = phi3_multiplicity(p);
  IntPoly rest = build_h_p(p);
  auto divide = [&](const IntPoly& d, const std::string& what) {
    auto q = divide_exact(rest, d);
    if (!q) throw InvariantViolation(what + " does not divide f_" + std::to_string(p));
    rest = std::move(*q);
  };
  divide(IntPoly{0, 1}, "x");
  divide(IntPoly{1, 1}, "x + 1");
  for (std::uint32_t i = 0; i < rec.m; ++i) divide(phi3(), "x^2 + x + 1");
  if (divide_exact(rest, phi3())) throw InvariantViolation("x^2 + x + 1 still divides g_" + std::to_string(p));
  rec.g = rest;

  IntPoly back = IntPoly{static_cast<long>(p)} * IntPoly{0, 1} * IntPoly{1, 1};
  for (std::uint32_t i = 0; i < rec.m; ++i) back = back * phi3();
  back = back * rec.g;
  rec.verified = back == f;
  if (!rec.verified) throw InvariantViolation("re-multiplication of g_" + std::to_string(p) + " does not give f_p");
  return rec;
}

std::vector<std::uint64_t> roots_mod_p(const IntPoly& f, std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  const modp::Poly g = f.reduce_mod(p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < p; ++a) {
    if (modp::eval(g, a, p) == 0) out.push_back(a);
  }
  return out;
}

std::vector<std::uint32_t> find_root_primes(std::uint32_t limit, unsigned workers) {
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t p : primes_up_to(limit == 0 ? 0 : limit - 1)) {
    if (p > 3) candidates.push_back(p);
  }
  const auto hits = parallel_map(candidates.size(), workers == 0 ? default_workers() : workers, [&](std::size_t i) {
    const std::uint32_t p = candidates[i];
    return !roots_mod_p(extract_g_p(p).g, p).empty();
  });
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (hits[i]) out.push_back(candidates[i]);
  }
  return out;
}

bool is_separable_over_q(const IntPoly& f) {
  if (f.is_zero()) throw PreconditionError("separability of the zero polynomial");
  if (f.degree() <= 0) return true;
  const IntPoly df = f.derivative();
  int tried = 0;
  for (std::uint64_t q = 1000003; tried < 8; q += 2) {
    if (!is_prime(q)) continue;
    ++tried;
    if (mpz_fdiv_ui(f.leading().get_mpz_t(), static_cast<unsigned long>(q)) == 0) continue;
    const modp::Poly fq = f.reduce_mod(q);
    const modp::Poly dq = df.reduce_mod(q);
    if (dq.empty()) continue;
    if (modp::degree(modp::gcd(fq, dq, q)) == 0) return true;
  }
  return gcd_over_q(f, df).degree() == 0;
}

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [prime, e] : factorize(n)) {
    const std::size_t size = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t small_abs(const mpz_class& c) {
  const mpz_class a = abs(c);
  if (mpz_sizeinbase(a.get_mpz_t(), 2) > 40) throw PreconditionError("coefficient too large for a rational-root search");
  return a.get_ui();
}

}  // namespace

bool has_rational_root(const IntPoly& f) {
  if (f.is_zero()) throw PreconditionError("rational roots of the zero polynomial");
  if (f.degree() == 0) return false;
  if (f.coeff(0) == 0) return true;
  const auto nums = divisors(small_abs(f.coeff(0)));
  const auto dens = divisors(small_abs(f.leading()));
  const auto deg = static_cast<std::size_t>(f.degree());
  for (std::uint64_t d : nums) {
    for (std::uint64_t e : dens) {
      if (std::gcd(d, e) != 1) continue;
      for (int sign : {1, -1}) {
        // e^deg * f(sign * d / e)
        mpz_class acc = 0;
        mpz_class num = sign * mpz_class(d);
        mpz_class den = mpz_class(e);
        mpz_class dpow = 1;
        mpz_class epow;
        mpz_pow_ui(epow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(deg));
        for (std::size_t i = 0; i <= deg; ++i) {
          acc += f.coeff(i) * dpow * epow;
          dpow *= num;
          if (i < deg) mpz_divexact(epow.get_mpz_t(), epow.get_mpz_t(), den.get_mpz_t());
        }
        if (acc == 0) return true;
      }
    }
  }
  return false;
}

std::vector<RootMultiplicity> repeated_roots_mod_p(std::uint32_t p) {
  if (p <= 3 || !is_prime(p)) throw PreconditionError("repeated roots need a prime p > 3");
  const modp::Poly h = build_h_p(p).reduce_mod(p);
  const modp::Poly dh = modp::derivative(h, p);
  const modp::Poly ddh = modp::derivative(dh, p);
  std::vector<RootMultiplicity> out;
  for (std::uint64_t a = 0; a < p; ++a) {
    if (modp::eval(h, a, p) != 0 || modp::eval(dh, a, p) != 0) continue;
    const modp::Poly lin{(p - a) % p, 1};
    modp::Poly rest = h;
    std::uint32_t mult = 0;
    for (;;) {
      modp::Poly q;
      modp::Poly r;
      modp::divmod(rest, lin, p, q, r);
      if (!r.empty()) break;
      rest = std::move(q);
      ++mult;
    }
    const std::string where = "h_" + std::to_string(p) + " at " + std::to_string(a);
    if (a == 0 || a == p - 1) throw InvariantViolation("repeated root of " + where + " lies in {0, -1}");
    if (mult != 2) throw InvariantViolation("multiplicity " + std::to_string(mult) + " for " + where);
    if (modp::eval(ddh, a, p) == 0) throw InvariantViolation("second derivative vanishes for " + where);
    out.push_back({a, mult});
  }
  return out;
}

std::optional<K3Witness> check_k3_criterion(const LocalRing& ring, std::uint32_t p) {
  if (ring.residue_char() != p) throw PreconditionError("K3 criterion needs residue characteristic p");
  if (p == 2) throw PreconditionError("K3 criterion needs p odd");
  const FiniteRing r({ring}, ring.size());
  if (maximal_ideal(ring).members != scalar_ideal(r, p).members) {
    throw PreconditionError("K3 criterion needs M = pR in " + ring.spec_string());
  }
  const DifferenceSet s = units_pth_powers(r, p);
  for (Element a = 0; a < ring.size(); ++a) {
    const Element a1 = ring.add(a, ring.one());
    if (!ring.is_unit(a) || !ring.is_unit(a1)) continue;
    const Element ap = ring.pow(a, p);
    if (ring.sub(ring.sub(ring.pow(a1, p), ap), ring.one()) != 0) continue;
    K3Witness w{a, {ring.zero(), ring.one(), ring.neg(ap)}};
    const auto& t = w.triangle;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (t[i] == t[j] || !s.contains(ring.sub(t[i], t[j]))) {
          throw InvariantViolation("{0, 1, -a^p} is not a triangle for a = " + ring.label(a));
        }
      }
    }
    return w;
  }
  return std::nullopt;
}

}  // namespace cayleylab

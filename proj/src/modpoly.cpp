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

#include "cayleylab/modpoly.hpp"

#include <algorithm>

#include "cayleylab/error.hpp"
#include "cayleylab/numtheory.hpp"

namespace cayleylab::modp {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) {
  for (std::size_t i = f.size(); i > 0; --i) {
    if (f[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

Poly sub(Poly a, const Poly& b, std::uint64_t ell) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + ell - b[i] % ell) % ell;
  trim(a);
  return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t ell) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], ell)) % ell;
    }
  }
  trim(out);
  return out;
}

Poly derivative(const Poly& f, std::uint64_t ell) {
  if (f.size() <= 1) return {};
  Poly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mulmod(f[i], i % ell, ell);
  trim(out);
  return out;
}

void divmod(const Poly& a, const Poly& b, std::uint64_t ell, Poly& quot, Poly& rem_out) {
  const int db = degree(b);
  if (db < 0) throw PreconditionError("modp::divmod: division by zero polynomial");
  rem_out = a;
  trim(rem_out);
  const int da = degree(rem_out);
  quot.assign(da >= db ? static_cast<std::size_t>(da - db + 1) : 0, 0);
  const std::uint64_t inv_lead = powmod(b[db], ell - 2, ell);
  for (int d = da; d >= db; --d) {
    const std::uint64_t c = mulmod(rem_out[d], inv_lead, ell);
    if (c == 0) continue;
    quot[d - db] = c;
    for (int i = 0; i <= db; ++i) {
      rem_out[d - db + i] = (rem_out[d - db + i] + ell - mulmod(c, b[i], ell)) % ell;
    }
  }
  trim(rem_out);
  trim(quot);
}

Poly rem(Poly a, const Poly& b, std::uint64_t ell) {
  Poly q;
  Poly r;
  divmod(a, b, ell, q, r);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t ell) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, ell);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const std::uint64_t inv = powmod(a.back(), ell - 2, ell);
  for (auto& c : a) c = mulmod(c, inv, ell);
  return a;
}

std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t ell) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i > 0; --i) acc = (mulmod(acc, x, ell) + f[i - 1]) % ell;
  return acc;
}

bool is_irreducible(const Poly& f, std::uint64_t ell) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  // Enumerate monic candidates x^d + (lower part given by an index in base ell).
  for (int d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(ell, static_cast<std::uint32_t>(d));
    Poly g(static_cast<std::size_t>(d) + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = t % ell;
        t /= ell;
      }
      if (rem(f, g, ell).empty()) return false;
    }
  }
  return true;
}

Poly lowest_irreducible(std::uint64_t ell, std::uint32_t degree_wanted) {
  const std::uint64_t count = ipow(ell, degree_wanted);
  Poly f(static_cast<std::size_t>(degree_wanted) + 1, 0);
  f[degree_wanted] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < degree_wanted; ++i) {
      f[i] = t % ell;
      t /= ell;
    }
    if (is_irreducible(f, ell)) return f;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

}  // namespace cayleylab::modp

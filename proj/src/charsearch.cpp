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

#include "cayleylab/charsearch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cayleylab/cayley.hpp"
#include "cayleylab/error.hpp"
#include "cayleylab/numtheory.hpp"

namespace cayleylab {

namespace {

const LocalRing& require_field(const FiniteRing& field, std::uint32_t p) {
  if (!field.is_local() || !field.factor(0).is_field()) {
    throw PreconditionError(field.spec_string() + " is not a finite field");
  }
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (field.factor(0).residue_char() == p) {
    throw PreconditionError("characteristic of " + field.spec_string() + " equals p");
  }
  return field.factor(0);
}

// Targets up to this many vertices are tried under every labeling.
constexpr std::size_t kMaxRelabel = 8;

double magnitude_of(const std::vector<std::uint64_t>& counts) {
  const double p = static_cast<double>(counts.size());
  double re = 0;
  double im = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const double t = 2 * std::numbers::pi * static_cast<double>(j) / p;
    re += static_cast<double>(counts[j]) * std::cos(t);
    im += static_cast<double>(counts[j]) * std::sin(t);
  }
  return std::hypot(re, im);
}

}  // namespace

CharacterTable::CharacterTable(const FiniteRing& field, std::uint32_t p) : field_(field), p_(p) {
  const LocalRing& f = require_field(field, p);
  const std::uint32_t q = f.size();
  if ((q - 1) % p != 0) {
    throw PreconditionError("no character of order " + std::to_string(p) + " on " + field.spec_string() + " since " +
                            std::to_string(p) + " does not divide " + std::to_string(q - 1));
  }
  const auto primes = factorize(q - 1);
  for (Element x = 1; x < q; ++x) {
    bool generates = true;
    for (auto [r, e] : primes) {
      if (f.pow(x, (q - 1) / r) == f.one()) {
        generates = false;
        break;
      }
    }
    if (generates) {
      generator_ = x;
      break;
    }
  }
  log_.assign(q, kZero);
  Element cur = f.one();
  for (std::uint32_t k = 0; k + 1 < q; ++k) {
    log_[cur] = k;
    cur = f.mul(cur, generator_);
  }
  if (cur != f.one()) throw InvariantViolation("generator of " + field.spec_string() + " has the wrong order");
}

std::uint32_t CharacterTable::log(Element x) const {
  if (x == 0 || x >= log_.size()) throw PreconditionError("discrete log of 0");
  return log_[x];
}

std::uint32_t CharacterTable::chi(Element x) const { return x == 0 ? kZero : log_[x] % p_; }

int selector(std::uint32_t exponent, int which) {
  if (which != 0 && which != 1) throw PreconditionError("selector index must be 0 or 1");
  if (exponent == CharacterTable::kZero) return 0;
  const int p1 = exponent == 0 ? 1 : 0;
  return which == 1 ? p1 : 1 - p1;
}

K3Search find_k3(const FiniteRing& field, std::uint32_t p) {
  const LocalRing& f = require_field(field, p);
  const DifferenceSet s = units_pth_powers(field, p);
  if (!s.is_symmetric()) throw SymmetryError("-1 is not a p-th power in " + field.spec_string());
  K3Search out;
  auto triangle = [&](Element a) {
    return a != 0 && a != 1 && s.contains(f.one()) && s.contains(a) && s.contains(f.sub(f.one(), a));
  };
  if ((f.size() - 1) % p != 0) {
    out.complete = true;
    if (f.size() >= 3) {
      out.a = 2;
      out.searched = 1;
      if (!triangle(2)) throw InvariantViolation("complete graph without a triangle on {0, 1, 2}");
    }
    return out;
  }
  const CharacterTable chi(field, p);
  for (Element a : s.members()) {
    ++out.searched;
    if (a == 0 || a == 1) continue;
    if (chi.chi(f.sub(f.one(), a)) != 0) continue;
    if (!triangle(a)) throw InvariantViolation("character and connection set disagree at " + f.label(a));
    out.a = a;
    return out;
  }
  return out;
}

K3Count count_k3_witnesses(const FiniteRing& field, std::uint32_t p) {
  const CharacterTable chi(field, p);
  const LocalRing& f = chi.local();
  K3Count out;
  for (Element x = 1; x < f.size(); ++x) {
    if (chi.chi(f.sub(f.one(), f.pow(x, p))) == 0) ++out.count;
  }
  const double q = f.size();
  const double pd = p;
  out.lower_bound = (q - (pd - 1) * (pd - 1) * std::sqrt(q) - 2 * pd) / pd;
  return out;
}

CharSum character_sum(const CharacterTable& chi, std::uint32_t k) {
  const std::uint32_t p = chi.order();
  if (k >= p) throw PreconditionError("character power k must lie in [0, p)");
  const LocalRing& f = chi.local();
  CharSum out;
  out.p = p;
  out.k = k;
  out.counts.assign(p, 0);
  for (Element a = 0; a < f.size(); ++a) {
    const std::uint32_t e = chi.chi(f.sub(f.one(), f.pow(a, p)));
    if (e == CharacterTable::kZero) {
      ++out.zero_count;
    } else {
      ++out.counts[(static_cast<std::uint64_t>(e) * k) % p];
    }
  }
  out.magnitude = magnitude_of(out.counts);
  return out;
}

CharSum character_sum(const FiniteRing& field, std::uint32_t p, std::uint32_t k) {
  return character_sum(CharacterTable(field, p), k);
}

CountIdentity k3_count_identity(const FiniteRing& field, std::uint32_t p) {
  const CharacterTable chi(field, p);
  std::vector<std::uint64_t> total(p, 0);
  for (std::uint32_t k = 0; k < p; ++k) {
    const CharSum s = character_sum(chi, k);
    for (std::uint32_t j = 0; j < p; ++j) total[j] += s.counts[j];
  }
  CountIdentity out;
  out.witnesses = count_k3_witnesses(field, p).count;
  bool rational = true;
  for (std::uint32_t j = 2; j < p; ++j) rational = rational && total[j] == total[1];
  // sum_j c_j zeta^j with c_1 = ... = c_{p-1} equals c_0 - c_1.
  out.total = static_cast<std::int64_t>(total[0]) - static_cast<std::int64_t>(p > 1 ? total[1] : 0);
  out.holds = rational && static_cast<std::int64_t>(p * out.witnesses) == out.total - static_cast<std::int64_t>(p);
  return out;
}

std::optional<EmbeddingWitness> embed_induced_subgraph(const PlainGraph& target, std::uint64_t ell, std::uint32_t p) {
  const std::size_t k = target.vertex_count();
  if (k == 0) throw PreconditionError("target graph is empty");
  if (!is_prime(ell)) throw PreconditionError(std::to_string(ell) + " is not prime");
  if (ell == p || (ell - 1) % p != 0) throw PreconditionError("embedding needs ell != p and p | ell - 1");
  if (ell > UINT32_MAX) throw OversizeError("ell is too large");
  if (k > 62) throw OversizeError("target graph is too large");
  const FiniteRing field({LocalRing::field(static_cast<std::uint32_t>(ell), 1)}, ell);
  const CharacterTable chi(field, p);
  const LocalRing& f = chi.local();
  const std::uint64_t group = ell - 1;

  EmbeddingWitness w;
  w.ell = ell;
  w.p = p;
  w.target = target;
  w.pairs = k * (k - 1) / 2;
  w.non_edges = w.pairs - target.edge_count();

  // slot s carries the exponent 2^s; pattern[s][t] records whether the
  // images of slots s and t would be adjacent.
  std::vector<std::vector<unsigned char>> pattern(k, std::vector<unsigned char>(k, 0));
  std::vector<std::size_t> slot(k);
  for (Element y = 1; y < ell; ++y) {
    ++w.searched;
    if (chi.chi(y) != 0) continue;
    bool in_t = false;
    std::size_t edges = 0;
    for (std::size_t s = 0; s < k && !in_t; ++s) {
      for (std::size_t t = s + 1; t < k; ++t) {
        const Element v = f.pow(y, ((std::uint64_t{1} << t) - (std::uint64_t{1} << s)) % group);
        if (v == f.one()) {
          in_t = true;  // exceptional set: some y^(a_j - a_i) = 1
          break;
        }
        const bool adj = chi.chi(f.sub(v, f.one())) == 0;
        pattern[s][t] = pattern[t][s] = adj ? 1 : 0;
        edges += adj ? 1 : 0;
      }
    }
    if (in_t || edges != target.edge_count()) continue;
    for (std::size_t i = 0; i < k; ++i) slot[i] = i;
    bool match = false;
    do {
      match = true;
      for (std::size_t i = 0; i < k && match; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          if ((pattern[slot[i]][slot[j]] != 0) != target.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j))) {
            match = false;
            break;
          }
        }
      }
    } while (!match && k <= kMaxRelabel && std::next_permutation(slot.begin(), slot.end()));
    if (!match) continue;

    w.y = y;
    for (std::size_t i = 0; i < k; ++i) {
      w.exponents.push_back(std::uint64_t{1} << slot[i]);
      w.images.push_back(f.pow(y, w.exponents.back() % group));
    }
    const DifferenceSet s = units_pth_powers(field, p);
    bool good = true;
    for (std::size_t i = 0; i < k && good; ++i) {
      for (std::size_t j = i + 1; j < k && good; ++j) {
        const bool adj = s.contains(f.sub(w.images[j], w.images[i]));
        good = w.images[i] != w.images[j] && adj == target.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
    if (!good) throw InvariantViolation("embedding witness y = " + std::to_string(y) + " fails re-verification");
    w.verified = true;
    return w;
  }
  return std::nullopt;
}

std::optional<EmbeddingWitness> find_embedding(const PlainGraph& target, std::uint32_t p, std::uint64_t ell_max) {
  if (ell_max > UINT32_MAX) throw OversizeError("ell_max is too large");
  for (std::uint32_t ell : primes_up_to(static_cast<std::uint32_t>(ell_max))) {
    if (ell == p || (ell - 1) % p != 0) continue;
    if (auto w = embed_induced_subgraph(target, ell, p)) return w;
  }
  return std::nullopt;
}

std::vector<BipartiteProbe> bipartite_char2_search(std::uint32_t p, std::uint32_t m_max) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  std::vector<BipartiteProbe> out;
  for (std::uint32_t m = 2; m <= m_max; ++m) {
    const FiniteRing field({LocalRing::field(2, m)});
    const CayleyGraph g = build_graph(field, p);
    out.push_back({m, field.size(), connected_components(g.graph()).size(), is_bipartite(g.graph())});
  }
  return out;
}

}  // namespace cayleylab

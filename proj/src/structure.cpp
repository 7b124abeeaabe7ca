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

#include "cayleylab/structure.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "cayleylab/error.hpp"
#include "cayleylab/numtheory.hpp"
#include "cayleylab/parallel.hpp"

namespace cayleylab {

namespace {

using Words = std::vector<std::uint64_t>;

void set_bit(Words& w, Vertex v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
void clear_bit(Words& w, Vertex v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
bool test_bit(const Words& w, Vertex v) { return (w[v / 64] >> (v % 64)) & 1U; }

Words to_words(std::span<const Vertex> vs, std::size_t words) {
  Words out(words, 0);
  for (Vertex v : vs) set_bit(out, v);
  return out;
}

std::size_t popcount(const Words& w) {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

std::vector<Vertex> to_vertices(const Words& w) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::uint64_t s = w[i]; s != 0; s &= s - 1) {
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(s))));
    }
  }
  return out;
}

// Smallest module of G[domain] containing u and v. `full` holds the domain
// vertices adjacent to everything added so far, `none` those adjacent to
// nothing; anything else outside the set is a splitter and must join.
Words closure(const BitAdjacency& adj, const Words& domain, Vertex u, Vertex v) {
  const std::size_t w = adj.words();
  Words in(w, 0);
  Words full(w);
  Words none(w);
  const auto ru = adj.row(u);
  for (std::size_t i = 0; i < w; ++i) {
    full[i] = domain[i] & ru[i];
    none[i] = domain[i] & ~ru[i];
  }
  set_bit(in, u);
  auto add = [&](Vertex x) {
    set_bit(in, x);
    const auto r = adj.row(x);
    for (std::size_t i = 0; i < w; ++i) {
      full[i] &= r[i];
      none[i] &= ~r[i];
    }
  };
  add(v);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < w; ++i) {
      std::uint64_t s = domain[i] & ~(in[i] | full[i] | none[i]);
      while (s != 0) {
        add(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(s))));
        changed = true;
        s &= s - 1;
        s &= ~in[i];
      }
    }
  }
  return in;
}

class Decomposer {
 public:
  explicit Decomposer(const PlainGraph& g) : adj_(g), n_(g.vertex_count()) {}

  ModularDecomposition run() {
    ModularDecomposition md;
    std::vector<Vertex> all(n_);
    for (std::size_t i = 0; i < n_; ++i) all[i] = static_cast<Vertex>(i);
    md.nodes.push_back(ModuleNode{ModuleKind::Leaf, std::move(all), {}});
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t idx = stack.back();
      stack.pop_back();
      const std::vector<Vertex> d = md.nodes[idx].vertices;
      if (d.size() <= 1) continue;
      const Words dom = to_words(d, adj_.words());
      ModuleKind kind = ModuleKind::Parallel;
      auto parts = components(d, dom, false);
      if (parts.size() == 1) {
        kind = ModuleKind::Series;
        parts = components(d, dom, true);
        if (parts.size() == 1) {
          kind = ModuleKind::Prime;
          parts = prime_children(d, dom);
        }
      }
      md.nodes[idx].kind = kind;
      for (auto& part : parts) {
        md.nodes.push_back(ModuleNode{ModuleKind::Leaf, std::move(part), {}});
        md.nodes[idx].children.push_back(md.nodes.size() - 1);
        stack.push_back(md.nodes.size() - 1);
      }
    }
    return md;
  }

 private:
  // Components of G[d] (or of its complement), sorted, by least vertex.
  std::vector<std::vector<Vertex>> components(const std::vector<Vertex>& d, const Words& dom, bool co) const {
    Words unvisited = dom;
    std::vector<std::vector<Vertex>> out;
    for (Vertex s : d) {
      if (!test_bit(unvisited, s)) continue;
      clear_bit(unvisited, s);
      std::vector<Vertex> comp{s};
      for (std::size_t k = 0; k < comp.size(); ++k) {
        const auto row = adj_.row(comp[k]);
        for (std::size_t i = 0; i < row.size(); ++i) {
          std::uint64_t nb = (co ? ~row[i] : row[i]) & unvisited[i];
          unvisited[i] &= ~nb;
          for (; nb != 0; nb &= nb - 1) {
            comp.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(nb))));
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  // Children of a prime node: refine d \ {v0} into the maximal modules not
  // containing v0, then glue to v0 every class whose closure with v0 stays
  // proper.
  std::vector<std::vector<Vertex>> prime_children(const std::vector<Vertex>& d, const Words& dom) const {
    const Vertex v0 = d.front();
    std::vector<std::vector<Vertex>> classes{std::vector<Vertex>(d.begin() + 1, d.end())};
    std::vector<std::uint32_t> cls(n_, std::numeric_limits<std::uint32_t>::max());
    for (Vertex x : classes[0]) cls[x] = 0;
    std::vector<Vertex> queue{v0};
    std::vector<unsigned char> queued(n_, 0);
    queued[v0] = 1;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    while (!queue.empty()) {
      const Vertex x = queue.back();
      queue.pop_back();
      queued[x] = 0;
      const std::size_t count = classes.size();
      for (std::size_t c = 0; c < count; ++c) {
        if (c == cls[x] || classes[c].size() <= 1) continue;
        a.clear();
        b.clear();
        for (Vertex y : classes[c]) (adj_.test(x, y) ? a : b).push_back(y);
        if (a.empty() || b.empty()) continue;
        classes[c] = a;
        classes.push_back(b);
        for (Vertex y : b) cls[y] = static_cast<std::uint32_t>(classes.size() - 1);
        for (Vertex y : classes[c]) {
          if (queued[y] == 0) {
            queued[y] = 1;
            queue.push_back(y);
          }
        }
        for (Vertex y : b) {
          if (queued[y] == 0) {
            queued[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
    std::vector<Vertex> with_v0{v0};
    std::vector<std::vector<Vertex>> out;
    for (auto& k : classes) {
      const Words m = closure(adj_, dom, v0, k.front());
      if (popcount(m) < d.size()) {
        with_v0.insert(with_v0.end(), k.begin(), k.end());
      } else {
        out.push_back(std::move(k));
      }
    }
    std::sort(with_v0.begin(), with_v0.end());
    out.push_back(std::move(with_v0));
    for (auto& k : out) std::sort(k.begin(), k.end());
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.front() < r.front(); });
    return out;
  }

  BitAdjacency adj_;
  std::size_t n_;
};

std::string yes_no(bool v, const std::string& holds, const std::string& fails) { return v ? holds : fails; }

std::vector<Vertex> merge_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FiniteRing single(const LocalRing& f) { return FiniteRing({f}, f.size()); }

}  // namespace

// ---------------------------------------------------------------------------

HomogeneousSetReport is_homogeneous_set(const PlainGraph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw PreconditionError("homogeneous-set check needs a non-empty subset");
  const std::size_t n = g.vertex_count();
  std::vector<unsigned char> in(n, 0);
  HomogeneousSetReport report;
  for (Vertex v : subset) {
    if (v >= n) throw PreconditionError("vertex " + std::to_string(v) + " is not in the graph");
    if (in[v] == 0) report.subset.push_back(v);
    in[v] = 1;
  }
  std::sort(report.subset.begin(), report.subset.end());
  const std::size_t size = report.subset.size();
  for (Vertex v = 0; v < n; ++v) {
    if (in[v] != 0) continue;
    std::size_t hits = 0;
    for (Vertex u : g.neighbors(v)) hits += in[u];
    if (hits != 0 && hits != size) {
      report.is_homogeneous = false;
      report.witness = v;
      break;
    }
  }
  return report;
}

bool is_nontrivial(std::size_t subset_size, std::size_t vertex_count) {
  return subset_size >= 2 && subset_size < vertex_count;
}

std::vector<Vertex> minimal_module_containing(const PlainGraph& g, Vertex u, Vertex v) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) throw PreconditionError("vertex out of range");
  if (u == v) throw PreconditionError("minimal module needs two distinct vertices");
  const BitAdjacency adj(g);
  Words all(adj.words(), 0);
  for (Vertex x = 0; x < n; ++x) set_bit(all, x);
  return to_vertices(closure(adj, all, u, v));
}

ModularDecomposition modular_decomposition(const PlainGraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("modular decomposition of the empty graph");
  return Decomposer(g).run();
}

std::optional<std::vector<Vertex>> smallest_nontrivial_module(const ModularDecomposition& md) {
  const std::size_t n = md.nodes.front().vertices.size();
  if (n <= 2) return std::nullopt;
  auto degenerate = [](const ModuleNode& node) {
    return node.kind == ModuleKind::Parallel || node.kind == ModuleKind::Series;
  };
  auto pair_allowed = [&](std::size_t idx) {
    return degenerate(md.nodes[idx]) && !(idx == 0 && md.nodes[idx].children.size() == 2);
  };
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < md.nodes.size(); ++i) {
    const auto& node = md.nodes[i];
    if (i != 0 && node.vertices.size() >= 2) best = std::min(best, node.vertices.size());
    if (pair_allowed(i)) {
      std::vector<std::size_t> sizes;
      for (auto c : node.children) sizes.push_back(md.nodes[c].vertices.size());
      std::partial_sort(sizes.begin(), sizes.begin() + 2, sizes.end());
      best = std::min(best, sizes[0] + sizes[1]);
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  std::optional<std::vector<Vertex>> out;
  auto offer = [&](std::vector<Vertex> cand) {
    if (!out || cand < *out) out = std::move(cand);
  };
  for (std::size_t i = 0; i < md.nodes.size(); ++i) {
    const auto& node = md.nodes[i];
    if (i != 0 && node.vertices.size() == best) offer(node.vertices);
    if (!pair_allowed(i)) continue;
    const auto& ch = node.children;
    for (std::size_t x = 0; x < ch.size(); ++x) {
      const auto& cx = md.nodes[ch[x]].vertices;
      if (cx.size() >= best) continue;
      for (std::size_t y = x + 1; y < ch.size(); ++y) {
        const auto& cy = md.nodes[ch[y]].vertices;
        if (cx.size() + cy.size() == best) offer(merge_sorted(cx, cy));
      }
    }
  }
  return out;
}

PrimalityVerdict is_prime_graph_oracle(const PlainGraph& g) {
  PrimalityVerdict v;
  v.method = VerdictMethod::Oracle;
  v.citation = "modular decomposition (pairwise minimal-module closure)";
  if (g.vertex_count() <= 2) {
    v.is_prime = true;
    v.clauses.push_back("at most two vertices: no subset X with 2 <= |X| < |V|");
    return v;
  }
  const auto md = modular_decomposition(g);
  auto cert = smallest_nontrivial_module(md);
  if (!cert) {
    v.is_prime = true;
    v.clauses.push_back("every strong module is trivial");
    return v;
  }
  v.is_prime = false;
  v.certificate = std::move(*cert);
  v.clauses.push_back("smallest non-trivial module has " + std::to_string(v.certificate.size()) + " vertices");
  return v;
}

// ---------------------------------------------------------------------------

bool is_primitive_divisor(std::uint64_t n, std::uint64_t ell, std::uint32_t m) {
  if (n == 0 || m == 0) throw PreconditionError("primitive divisor needs n >= 1 and m >= 1");
  if (powmod(ell, m, n) != 1 % n) return false;
  for (std::uint32_t a = 1; a < m; ++a) {
    if (powmod(ell, a, n) == 1 % n) return false;
  }
  return true;
}

std::vector<FactorFacts> factor_facts(const FiniteRing& ring, std::uint32_t p) {
  std::vector<FactorFacts> out;
  for (const LocalRing& f : ring.factors()) {
    const FiniteRing r = single(f);
    const DifferenceSet s = units_pth_powers(r, p);
    if (!s.is_symmetric()) {
      throw SymmetryError("-1 is not a " + std::to_string(p) + "-th power of a unit in " + f.spec_string());
    }
    FactorFacts ff;
    ff.spec = f.spec_string();
    ff.size = f.size();
    ff.residue_char = f.residue_char();
    ff.residue_degree = f.degree();
    ff.residue_field_size = f.residue_field_size();
    const Ideal m = maximal_ideal(f);
    ff.is_field = m.size() == 1;
    ff.residue_char_is_p = f.residue_char() == p;
    ff.maximal_is_pR = m.members == scalar_ideal(r, p).members;
    ff.p2R_is_zero = scalar_ideal(r, static_cast<std::int64_t>(p) * p).size() == 1;
    const PlainGraph g = cayley_graph(r, s.members());
    ff.graph_connected = is_connected(g);
    ff.graph_bipartite = is_bipartite(g);
    out.push_back(std::move(ff));
  }
  return out;
}

Prediction predict_local_connected(const FactorFacts& f, std::uint32_t p) {
  Prediction out;
  const std::string tag = f.spec + ": ";
  if (!f.residue_char_is_p) {
    const std::uint64_t q = f.residue_field_size;
    if ((q - 1) % p != 0) {
      out.value = true;
      out.clauses.push_back(tag + "p does not divide q-1, residue graph is complete");
      return out;
    }
    const bool prim = is_primitive_divisor((q - 1) / p, f.residue_char, f.residue_degree);
    out.value = prim;
    out.clauses.push_back(tag + yes_no(prim, "(q-1)/p is a primitive divisor of q-1",
                                       "(q-1)/p is not a primitive divisor of q-1"));
    return out;
  }
  out.value = f.maximal_is_pR;
  out.clauses.push_back(tag + yes_no(f.maximal_is_pR, "M = pR", "M != pR"));
  return out;
}

Prediction predict_connected(const FiniteRing& ring, std::uint32_t p) {
  const auto facts = factor_facts(ring, p);
  Prediction out;
  bool all = true;
  std::size_t bipartite = 0;
  for (const auto& f : facts) {
    auto local = predict_local_connected(f, p);
    all = all && local.value;
    out.clauses.insert(out.clauses.end(), local.clauses.begin(), local.clauses.end());
    if (f.graph_bipartite) ++bipartite;
  }
  if (facts.size() == 1) {
    out.value = all;
    return out;
  }
  out.value = all && bipartite <= 1;
  out.clauses.push_back(std::to_string(bipartite) + " bipartite factor graph(s)" +
                        (bipartite <= 1 ? "" : ", tensor product splits"));
  return out;
}

Prediction predict_anticonnected(const FiniteRing& ring, std::uint32_t p) {
  const auto facts = factor_facts(ring, p);
  Prediction out;
  if (facts.size() >= 2) {
    out.value = true;
    out.clauses.push_back("tensor product of two or more factor graphs is always anticonnected");
    return out;
  }
  const FactorFacts& f = facts.front();
  const auto conn = predict_local_connected(f, p);
  out.clauses = conn.clauses;
  if (!conn.value) {
    out.value = true;
    out.clauses.push_back("disconnected graphs are anticonnected");
    return out;
  }
  if (!f.residue_char_is_p) {
    out.value = (f.residue_field_size - 1) % p == 0;
    out.clauses.push_back(yes_no(out.value, "p | q-1, so S is a proper subgroup of the units",
                                 "p does not divide q-1, so S is every unit"));
    return out;
  }
  out.value = !f.is_field;
  out.clauses.push_back(yes_no(out.value, "connected and not a field", "connected field: complete graph"));
  return out;
}

Ideal homogeneous_ideal_search(const CayleyGraph& g) {
  const FiniteRing& ring = g.ring();
  const std::uint32_t p = g.prime();
  std::vector<std::vector<Element>> parts;
  std::string desc;
  for (std::size_t i = 0; i < ring.factor_count(); ++i) {
    const LocalRing& f = ring.factor(i);
    if (i != 0) desc += " x ";
    if (f.residue_char() != p) {
      parts.push_back(maximal_ideal(f).members);
      desc += "M(" + f.spec_string() + ")";
    } else {
      parts.push_back(scalar_ideal(single(f), static_cast<std::int64_t>(p) * p).members);
      desc += "p^2 " + f.spec_string();
    }
  }
  Ideal out{desc, product_set(ring, parts)};
  if (!is_homogeneous_set(g.graph(), out.members).is_homogeneous) {
    throw InvariantViolation("ideal " + desc + " is not homogeneous in G_{" + ring.spec_string() + "}(" +
                             std::to_string(p) + ")");
  }
  return out;
}

Ideal homogeneous_ideal_search(const FiniteRing& ring, std::uint32_t p) {
  return homogeneous_ideal_search(build_graph(ring, p));
}

PrimalityVerdict predict_prime(const CayleyGraph& g) {
  const FiniteRing& ring = g.ring();
  const std::uint32_t p = g.prime();
  const auto facts = factor_facts(ring, p);
  PrimalityVerdict v;
  v.method = VerdictMethod::Theorem;
  auto clause = [&](bool ok, const std::string& holds, const std::string& fails) {
    v.clauses.push_back(ok ? holds : "FAILS: " + fails);
    return ok;
  };

  if (ring.size() <= 2) {
    v.is_prime = true;
    v.citation = "graphs on at most two vertices have no non-trivial homogeneous set";
    v.clauses.push_back("|R| <= 2");
    return v;
  }

  bool prime = true;
  if (facts.size() == 1) {
    const FactorFacts& f = facts.front();
    if (!f.residue_char_is_p) {
      v.citation = "local ring with p invertible: prime iff R is a field, p | q-1 and (q-1)/p is a "
                   "primitive divisor of q-1";
      const std::uint64_t q = f.residue_field_size;
      prime = clause(f.is_field, "R is a field", "R is not a field (M is a homogeneous set)") && prime;
      const bool divides = (q - 1) % p == 0;
      prime = clause(divides, "p | q-1", "p does not divide q-1 (complete graph)") && prime;
      if (divides) {
        prime = clause(is_primitive_divisor((q - 1) / p, f.residue_char, f.residue_degree),
                       "(q-1)/p is a primitive divisor of q-1",
                       "(q-1)/p is not a primitive divisor of q-1 (disconnected)") &&
                prime;
      }
    } else {
      v.citation = "local ring of residue characteristic p: prime iff R is not a field, M = pR and p^2 R = 0";
      prime = clause(!f.is_field, "R is not a field", "R is a field (complete graph)") && prime;
      prime = clause(f.maximal_is_pR, "M = pR", "M != pR (disconnected)") && prime;
      prime = clause(f.p2R_is_zero, "p^2 R = 0", "p^2 R != 0 (p^2 R is a homogeneous set)") && prime;
    }
  } else {
    v.citation = "product of local rings: prime iff every factor graph and G are connected, factors with "
                 "p invertible are fields, and the others have M_i = pR_i and p^2 R_i = 0";
    bool factors_connected = true;
    for (const auto& f : facts) factors_connected = predict_local_connected(f, p).value && factors_connected;
    prime = clause(factors_connected, "every factor graph is connected", "some factor graph is disconnected") &&
            prime;
    prime = clause(predict_connected(ring, p).value, "G is connected", "G is disconnected") && prime;
    for (const auto& f : facts) {
      if (!f.residue_char_is_p) {
        prime = clause(f.is_field, f.spec + " is a field", f.spec + " is not a field") && prime;
      } else {
        prime = clause(f.maximal_is_pR && f.p2R_is_zero, f.spec + ": M = pR and p^2 R = 0",
                       f.spec + ": M != pR or p^2 R != 0") &&
                prime;
      }
    }
    if (p == 2) {
      std::size_t f2 = 0;
      bool fields = true;
      for (const auto& f : facts) {
        if (f.size == 2) ++f2;
        fields = fields && f.is_field;
      }
      const bool special = f2 <= 1 && fields;
      v.clauses.push_back(std::string("p = 2 form: ") + (f2 <= 1 ? "at most one factor is F_2" : "two or more F_2 factors") +
                          ", " + (fields ? "every factor is a field" : "some factor is not a field"));
      if (special != prime) {
        throw InvariantViolation("p = 2 primality form disagrees with the general criterion on " +
                                 ring.spec_string());
      }
    }
  }
  v.is_prime = prime;
  if (prime) return v;

  const PlainGraph& pg = g.graph();
  const Ideal j = homogeneous_ideal_search(g);
  if (j.size() >= 2) {
    v.certificate = j.members;
    v.clauses.push_back("certificate: homogeneous ideal " + j.description);
  } else if (!is_connected(pg)) {
    v.certificate = connected_components(pg).front();
    v.clauses.push_back("certificate: connected component of 0");
  } else {
    for (auto& c : complement_components(pg)) {
      if (c.size() >= 2) {
        v.certificate = std::move(c);
        break;
      }
    }
    if (v.certificate.empty()) v.certificate = {0, 1};
    v.clauses.push_back("certificate: component of 0 in the complement");
  }
  if (!is_nontrivial(v.certificate.size(), pg.vertex_count()) ||
      !is_homogeneous_set(pg, v.certificate).is_homogeneous) {
    throw InvariantViolation("no valid certificate for non-prime verdict on " + ring.spec_string());
  }
  return v;
}

PrimalityVerdict predict_prime(const FiniteRing& ring, std::uint32_t p) { return predict_prime(build_graph(ring, p)); }

// ---------------------------------------------------------------------------

std::size_t CrossValidationReport::mismatch_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.mismatches.empty(); }));
}

CrossValidationRow cross_validate_one(const CorpusEntry& entry) {
  CrossValidationRow row;
  row.spec = entry.spec;
  row.p = entry.p;
  try {
    const FiniteRing ring = parse_ring_spec(entry.spec);
    row.spec = ring.spec_string();
    const CayleyGraph g = build_graph(ring, entry.p);
    const PlainGraph& pg = g.graph();
    row.vertex_count = pg.vertex_count();
    row.degree = g.degree();
    row.components = connected_components(pg).size();
    row.anticonnected = is_anticonnected(pg);
    row.bipartite = is_bipartite(pg);
    row.predicted_connected = predict_connected(ring, entry.p).value;
    row.predicted_anticonnected = predict_anticonnected(ring, entry.p).value;
    row.theorem = predict_prime(g);
    row.oracle = is_prime_graph_oracle(pg);
    if (row.predicted_connected != (row.components == 1)) row.mismatches.push_back("connectivity");
    if (row.predicted_anticonnected != row.anticonnected) row.mismatches.push_back("anticonnectivity");
    if (row.theorem.is_prime != row.oracle.is_prime) row.mismatches.push_back("primality");
    for (const auto* v : {&row.theorem, &row.oracle}) {
      if (v->is_prime) continue;
      if (!is_nontrivial(v->certificate.size(), pg.vertex_count()) ||
          !is_homogeneous_set(pg, v->certificate).is_homogeneous) {
        row.mismatches.push_back("certificate");
      }
    }
    if (row.vertex_count > 2 && row.theorem.is_prime && (!row.predicted_connected || !row.anticonnected)) {
      row.mismatches.push_back("prime but not connected and anticonnected");
    }
  } catch (const Error& e) {
    row.mismatches.push_back(std::string("error: ") + e.what());
  }
  return row;
}

CrossValidationReport cross_validate(std::span<const CorpusEntry> corpus, unsigned workers) {
  CrossValidationReport report;
  report.rows = parallel_map(corpus.size(), workers == 0 ? default_workers() : workers,
                             [&](std::size_t i) { return cross_validate_one(corpus[i]); });
  return report;
}

}  // namespace cayleylab

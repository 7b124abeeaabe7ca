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

#include "cayleylab/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "cayleylab/cayley.hpp"
#include "cayleylab/charsearch.hpp"
#include "cayleylab/corpus.hpp"
#include "cayleylab/error.hpp"
#include "cayleylab/numtheory.hpp"
#include "cayleylab/parallel.hpp"
#include "cayleylab/polyarith.hpp"
#include "cayleylab/structure.hpp"

namespace cayleylab {

namespace {

constexpr double kWeilTolerance = 1e-6;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string yn(bool b) { return b ? "true" : "false"; }

template <typename T>
std::string joined(const std::vector<T>& xs, const char* sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

std::string fixed(double x, int digits = 6) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << x;
  return out.str();
}

unsigned workers_of(const VerifyOptions& o) { return o.workers == 0 ? default_workers() : o.workers; }

std::uint32_t limit_or(const VerifyOptions& o, std::uint32_t fallback) { return o.limit == 0 ? fallback : o.limit; }

std::vector<CorpusEntry> corpus_of(const VerifyOptions& o) { return corpus_from_arg(o.corpus, o.primes); }

std::vector<std::string> local_specs_of(const VerifyOptions& o) {
  if (!o.rings.empty()) return split_spec_list(o.rings);
  if (o.corpus != "default") return split_spec_list(o.corpus);
  return default_local_specs();
}

struct GraphFacts {
  std::size_t vertices = 0;
  std::size_t degree = 0;
  std::size_t components = 0;
  bool anticonnected = false;
  Prediction predicted;
};

VerifyTable verify_connectivity(const VerifyOptions& o, bool anti) {
  const auto corpus = corpus_of(o);
  const auto facts = parallel_map(corpus.size(), workers_of(o), [&](std::size_t i) {
    const FiniteRing ring = parse_ring_spec(corpus[i].spec);
    const CayleyGraph g = build_graph(ring, corpus[i].p);
    GraphFacts f;
    f.vertices = g.vertex_count();
    f.degree = g.degree();
    f.components = connected_components(g.graph()).size();
    if (anti) {
      f.anticonnected = is_anticonnected(g.graph());
      f.predicted = predict_anticonnected(ring, corpus[i].p);
    } else {
      f.predicted = predict_connected(ring, corpus[i].p);
    }
    return f;
  });
  VerifyTable t;
  if (anti) {
    t.header = {"spec", "p", "|V|", "components", "anticonnected", "predicted_anticonnected", "clauses_fired", "status"};
  } else {
    t.header = {"spec", "p", "|V|", "degree", "components", "predicted_connected", "clauses_fired", "status"};
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const GraphFacts& f = facts[i];
    const std::string clauses = joined(f.predicted.clauses, "; ");
    if (anti) {
      t.add({corpus[i].spec, std::to_string(corpus[i].p), std::to_string(f.vertices), std::to_string(f.components),
             yn(f.anticonnected), yn(f.predicted.value), clauses},
            f.anticonnected == f.predicted.value);
    } else {
      t.add({corpus[i].spec, std::to_string(corpus[i].p), std::to_string(f.vertices), std::to_string(f.degree),
             std::to_string(f.components), yn(f.predicted.value), clauses},
            (f.components == 1) == f.predicted.value);
    }
  }
  return t;
}

VerifyTable verify_primality(const VerifyOptions& o) {
  const auto corpus = corpus_of(o);
  const CrossValidationReport report = cross_validate(corpus, workers_of(o));
  VerifyTable t;
  t.header = {"spec",          "p",           "|V|",         "degree",       "components",
              "anticonnected", "bipartite",   "prime_theorem", "prime_oracle", "certificate",
              "clauses_fired", "status"};
  for (const CrossValidationRow& r : report.rows) {
    const auto& cert = r.oracle.is_prime ? r.theorem.certificate : r.oracle.certificate;
    t.add({r.spec, std::to_string(r.p), std::to_string(r.vertex_count), std::to_string(r.degree),
           std::to_string(r.components), yn(r.anticonnected), yn(r.bipartite), yn(r.theorem.is_prime),
           yn(r.oracle.is_prime), joined(cert), joined(r.theorem.clauses, "; ")},
          r.mismatches.empty());
  }
  return t;
}

std::vector<LocalRing> locals_of(const std::string& spec) {
  const FiniteRing ring = parse_ring_spec(spec);
  if (!ring.is_local()) throw PreconditionError(spec + " is not a local ring");
  return ring.factors();
}

VerifyTable verify_wreath(const VerifyOptions& o) {
  std::vector<std::string> specs;
  for (const std::string& spec : local_specs_of(o)) {
    const FiniteRing ring = parse_ring_spec(spec);
    if (!ring.is_local()) {
      if (!o.rings.empty()) throw PreconditionError(spec + " is not a local ring");
      continue;
    }
    if (!is_admissible(spec, ring.factor(0).residue_char())) {
      if (!o.rings.empty()) throw SymmetryError("-1 is not a p-th power in " + spec);
      continue;
    }
    specs.push_back(spec);
  }
  const auto checks = parallel_map(specs.size(), workers_of(o),
                                   [&](std::size_t i) { return check_wreath(locals_of(specs[i]).front()); });
  VerifyTable t;
  t.header = {"spec", "p", "|R|", "quotient", "n", "edges", "isomorphic", "status"};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const LocalRing r = locals_of(specs[i]).front();
    const WreathCheck& c = checks[i];
    t.add({specs[i], std::to_string(r.residue_char()), std::to_string(r.size()), c.quotient, std::to_string(c.n),
           std::to_string(c.edges), yn(c.isomorphic)},
          c.isomorphic);
  }
  return t;
}

struct HomogeneityRow {
  std::string check;
  std::size_t set_size = 0;
  std::size_t violations = 0;
};

VerifyTable verify_homogeneous(const VerifyOptions& o) {
  std::vector<std::string> specs;
  for (const std::string& spec : local_specs_of(o)) {
    if (parse_ring_spec(spec).is_local()) specs.push_back(spec);
  }
  const std::vector<CorpusEntry> entries = make_corpus(specs, o.primes);
  const auto rows = parallel_map(entries.size(), workers_of(o), [&](std::size_t i) {
    const FiniteRing ring = parse_ring_spec(entries[i].spec);
    const LocalRing& r = ring.factor(0);
    const std::uint32_t p = entries[i].p;
    const CayleyGraph g = build_graph(ring, p);
    std::vector<HomogeneityRow> out;
    const bool same = r.residue_char() == p;
    const Ideal ideal = same ? scalar_ideal(ring, static_cast<std::int64_t>(p) * p) : maximal_ideal(ring);
    const HomogeneousSetReport h = is_homogeneous_set(g.graph(), ideal.members);
    out.push_back({same ? "p^2R homogeneous" : "M homogeneous", ideal.size(), h.is_homogeneous ? 0U : 1U});
    if (same) {
      const Ideal m = maximal_ideal(ring);
      const Ideal m2 = ideal_product(ring, m, m);
      out.push_back({"(a+S) disjoint from S for a in M\\M^2", m.size() - m2.size(), count_translate_violations(r, p)});
    }
    return out;
  });
  VerifyTable t;
  t.header = {"spec", "p", "check", "set_size", "violations", "status"};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (const HomogeneityRow& h : rows[i]) {
      t.add({entries[i].spec, std::to_string(entries[i].p), h.check, std::to_string(h.set_size),
             std::to_string(h.violations)},
            h.violations == 0);
    }
  }
  return t;
}

/// (q, ell, m) for prime powers q < limit, ascending.
std::vector<std::array<std::uint32_t, 3>> prime_powers_below(std::uint32_t limit) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t q = 2; q < limit; ++q) {
    if (auto pp = as_prime_power(q)) out.push_back({q, static_cast<std::uint32_t>(pp->prime), pp->exponent});
  }
  return out;
}

VerifyTable verify_weil(const VerifyOptions& o) {
  struct Job {
    std::uint32_t q, ell, m, p;
  };
  std::vector<Job> jobs;
  for (auto [q, ell, m] : prime_powers_below(limit_or(o, 2000))) {
    for (std::uint32_t p : {3U, 5U, 7U}) {
      if ((q - 1) % p == 0) jobs.push_back({q, ell, m, p});
    }
  }
  const auto sums = parallel_map(jobs.size(), workers_of(o), [&](std::size_t i) {
    const FiniteRing field({LocalRing::field(jobs[i].ell, jobs[i].m)});
    const CharacterTable chi(field, jobs[i].p);
    std::vector<CharSum> out;
    for (std::uint32_t k = 1; k < jobs[i].p; ++k) out.push_back(character_sum(chi, k));
    return out;
  });
  VerifyTable t;
  t.header = {"q", "p", "k", "magnitude", "bound", "margin", "status"};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const double bound = (jobs[i].p - 1) * std::sqrt(static_cast<double>(jobs[i].q));
    for (const CharSum& s : sums[i]) {
      const double margin = bound - s.magnitude;
      t.add({std::to_string(jobs[i].q), std::to_string(jobs[i].p), std::to_string(s.k), fixed(s.magnitude),
             fixed(bound), fixed(margin)},
            margin >= -kWeilTolerance);
    }
  }
  return t;
}

VerifyTable verify_k3bound(const VerifyOptions& o) {
  struct Job {
    std::uint32_t ell, p;
  };
  std::vector<Job> jobs;
  for (std::uint32_t ell : primes_up_to(limit_or(o, 2000) - 1)) {
    for (std::uint32_t p : {3U, 5U}) {
      if (ell != p && (ell - 1) % p == 0) jobs.push_back({ell, p});
    }
  }
  struct Result {
    K3Search search;
    K3Count count;
    CountIdentity identity;
  };
  const auto results = parallel_map(jobs.size(), workers_of(o), [&](std::size_t i) {
    const FiniteRing field({LocalRing::field(jobs[i].ell, 1)});
    return Result{find_k3(field, jobs[i].p), count_k3_witnesses(field, jobs[i].p), k3_count_identity(field, jobs[i].p)};
  });
  VerifyTable t;
  t.header = {"q", "p", "found", "a", "count", "lower_bound", "identity", "status"};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const Result& r = results[i];
    const std::uint64_t guaranteed = ipow(jobs[i].p + 1, 4);
    const bool found = r.search.a.has_value();
    bool ok = found == (r.count.count > 0) && r.identity.holds;
    if (jobs[i].ell >= guaranteed) ok = ok && found;
    if (r.count.lower_bound > 0) ok = ok && static_cast<double>(r.count.count) >= r.count.lower_bound;
    t.add({std::to_string(jobs[i].ell), std::to_string(jobs[i].p), yn(found), found ? std::to_string(*r.search.a) : "",
           std::to_string(r.count.count), fixed(r.count.lower_bound, 3), yn(r.identity.holds)},
          ok);
  }
  return t;
}

std::vector<std::uint32_t> primes_between(std::uint32_t lo_exclusive, std::uint32_t hi_inclusive) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : primes_up_to(hi_inclusive)) {
    if (p > lo_exclusive) out.push_back(p);
  }
  return out;
}

VerifyTable verify_phi3(const VerifyOptions& o) {
  const auto primes = primes_between(3, limit_or(o, 3000));
  const auto counts = parallel_map(primes.size(), workers_of(o), [&](std::size_t i) { return phi3_division_count(primes[i]); });
  VerifyTable t;
  t.header = {"p", "p_mod_3", "division_count", "expected", "status"};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint32_t expected = primes[i] % 3 == 1 ? 2 : 1;
    t.add({std::to_string(primes[i]), std::to_string(primes[i] % 3), std::to_string(counts[i]), std::to_string(expected)},
          counts[i] == expected);
  }
  return t;
}

VerifyTable verify_rootprimes(const VerifyOptions& o) {
  const std::uint32_t limit = limit_or(o, 500);
  const auto found = find_root_primes(limit, workers_of(o));
  const auto& reference = reference_root_primes();
  const auto roots = parallel_map(found.size(), workers_of(o),
                                  [&](std::size_t i) { return roots_mod_p(extract_g_p(found[i]).g, found[i]); });
  VerifyTable t;
  t.header = {"p", "roots", "matches_paper_list", "status"};
  for (std::size_t i = 0; i < found.size(); ++i) {
    const bool listed = std::binary_search(reference.begin(), reference.end(), found[i]);
    const bool covered = found[i] < 500;
    t.add({std::to_string(found[i]), joined(roots[i]), covered ? yn(listed) : "n/a"}, !covered || listed);
  }
  for (std::uint32_t p : reference) {
    if (p < limit && !std::binary_search(found.begin(), found.end(), p)) t.add({std::to_string(p), "", "missing"}, false);
  }
  return t;
}

VerifyTable verify_repeatedroots(const VerifyOptions& o) {
  const std::uint32_t limit = limit_or(o, 500);
  const auto primes = primes_between(3, limit - 1);
  struct Result {
    std::vector<RootMultiplicity> repeated;
    std::vector<std::uint64_t> interior;
    std::string error;
  };
  const auto results = parallel_map(primes.size(), workers_of(o), [&](std::size_t i) {
    Result r;
    const std::uint32_t p = primes[i];
    for (std::uint64_t a : roots_mod_p(build_h_p(p), p)) {
      if (a != 0 && a != p - 1) r.interior.push_back(a);
    }
    try {
      r.repeated = repeated_roots_mod_p(p);
    } catch (const InvariantViolation& e) {
      r.error = e.what();
    }
    return r;
  });
  VerifyTable t;
  t.header = {"p", "repeated_roots", "roots_outside_0_and_-1", "status"};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Result& r = results[i];
    std::vector<std::string> rep;
    std::vector<std::uint64_t> residues;
    for (const RootMultiplicity& m : r.repeated) {
      rep.push_back(std::to_string(m.residue) + ":" + std::to_string(m.multiplicity));
      residues.push_back(m.residue);
    }
    t.add({std::to_string(primes[i]), r.error.empty() ? joined(rep) : r.error, joined(r.interior)},
          r.error.empty() && residues == r.interior);
  }
  return t;
}

}  // namespace

void VerifyTable::add(std::vector<std::string> row, bool ok) {
  row.push_back(ok ? "ok" : "MISMATCH");
  if (!ok) ++mismatches;
  rows.push_back(std::move(row));
}

void VerifyTable::write_csv(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids{"connectivity", "anticonnectivity", "primality", "wreath",     "homogeneous",
                                            "weil",         "k3bound",          "phi3",      "rootprimes", "repeatedroots"};
  return ids;
}

VerifyTable run_verify(const std::string& id, const VerifyOptions& options) {
  if (id == "connectivity") return verify_connectivity(options, false);
  if (id == "anticonnectivity") return verify_connectivity(options, true);
  if (id == "primality") return verify_primality(options);
  if (id == "wreath") return verify_wreath(options);
  if (id == "homogeneous") return verify_homogeneous(options);
  if (id == "weil") return verify_weil(options);
  if (id == "k3bound") return verify_k3bound(options);
  if (id == "phi3") return verify_phi3(options);
  if (id == "rootprimes") return verify_rootprimes(options);
  if (id == "repeatedroots") return verify_repeatedroots(options);
  throw SpecError("unknown theorem id '" + id + "' (expected one of " + joined(verify_ids(), ", ") + ")");
}

const std::vector<std::uint32_t>& reference_root_primes() {
  static const std::vector<std::uint32_t> list{59, 79, 83, 179, 193, 227, 337, 419, 421, 443, 457};
  return list;
}

WreathCheck check_wreath(const LocalRing& ring) {
  const std::uint32_t p = ring.residue_char();
  const FiniteRing big({ring});
  const LocalRing small_local = ring.truncate(2);
  const FiniteRing small({small_local});
  const Ideal p2 = scalar_ideal(big, static_cast<std::int64_t>(p) * p);
  const CayleyGraph g = build_graph(big, p);
  const CayleyGraph h = build_graph(small, p);

  WreathCheck out;
  out.quotient = small.spec_string();
  out.n = p2.size();
  out.edges = g.graph().edge_count();
  if (static_cast<std::size_t>(small.size()) * out.n != big.size()) return out;

  std::vector<Vertex> image(big.size());
  std::vector<unsigned char> hit(big.size(), 0);
  for (Element x = 0; x < big.size(); ++x) {
    const Element a = ring.reduce_to(small_local, x);
    const Element t = ring.sub(x, ring.lift_from(small_local, a));
    const auto it = std::lower_bound(p2.members.begin(), p2.members.end(), t);
    if (it == p2.members.end() || *it != t) return out;
    image[x] = static_cast<Vertex>(a * out.n + static_cast<std::size_t>(it - p2.members.begin()));
    if (hit[image[x]]++ != 0) return out;
  }
  std::vector<Edge> moved;
  for (const Edge& e : g.graph().edges()) moved.push_back({image[e.first], image[e.second]});
  const PlainGraph relabeled = PlainGraph::from_edges(big.size(), moved);
  out.isomorphic = relabeled == wreath_product(h.graph(), empty_graph(out.n));
  return out;
}

std::size_t count_translate_violations(const LocalRing& ring, std::uint32_t p) {
  if (ring.residue_char() != p) throw PreconditionError("residue characteristic of " + ring.spec_string() + " is not p");
  const FiniteRing r({ring});
  const DifferenceSet s = units_pth_powers(r, p);
  const Ideal m = maximal_ideal(r);
  const Ideal m2 = ideal_product(r, m, m);
  std::size_t bad = 0;
  for (Element a : m.members) {
    if (m2.contains(a)) continue;
    for (Element x : s.members()) {
      if (s.contains(r.add(a, x))) {
        ++bad;
        break;
      }
    }
  }
  return bad;
}

}  // namespace cayleylab

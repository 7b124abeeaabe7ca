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

// cayleylab: build, analyze and verify p-unitary Cayley graphs G_R(p).
//
//   cayleylab build   --ring "F(13,1)" --p 3 --format dot
//   cayleylab analyze --ring "Z/27" --p 3
//   cayleylab verify  primality --corpus default
//   cayleylab search  embed --target c5.edgelist --p 3 --ell-max 200
//   cayleylab poly    --p 7 --format json
//
// Exit codes: 0 ok, 1 verification mismatch, 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cayleylab/cayley.hpp"
#include "cayleylab/charsearch.hpp"
#include "cayleylab/error.hpp"
#include "cayleylab/polyarith.hpp"
#include "cayleylab/structure.hpp"
#include "cayleylab/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cayleylab;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;

struct Options {
  std::string ring;
  std::uint32_t p = 0;
  std::string format = "dot";
  std::string out;
  std::uint64_t max_ring_size = 0;

  std::string theorem;
  VerifyOptions verify;

  std::string field;
  std::string target;
  std::uint64_t ell_max = 200;
  std::uint32_t m_max = 8;
  std::string poly_format = "text";
};

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw PreconditionError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

ordered_json vertex_list(const std::vector<Vertex>& vs) {
  ordered_json a = ordered_json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

int cmd_build(const Options& o) {
  const FiniteRing ring = parse_ring_spec(o.ring);
  const ExportFormat format = parse_export_format(o.format);
  const CayleyGraph g = build_graph(ring, o.p);
  Sink sink(o.out);
  write_graph(g, format, sink.stream());
  return kOk;
}

int cmd_analyze(const Options& o) {
  const FiniteRing ring = parse_ring_spec(o.ring);
  const CayleyGraph g = build_graph(ring, o.p);
  const PlainGraph& pg = g.graph();
  const std::size_t components = connected_components(pg).size();
  const PrimalityVerdict theorem = predict_prime(g);
  const PrimalityVerdict oracle = is_prime_graph_oracle(pg);

  ordered_json j;
  j["spec"] = ring.spec_string();
  j["p"] = o.p;
  j["vertices"] = g.vertex_count();
  j["degree"] = g.degree();
  j["connected"] = components == 1;
  j["components"] = components;
  j["anticonnected"] = is_anticonnected(pg);
  j["bipartite"] = is_bipartite(pg);
  j["prime_theorem"] = theorem.is_prime;
  j["prime_oracle"] = oracle.is_prime;
  j["certificate"] = vertex_list(theorem.certificate);
  j["oracle_certificate"] = vertex_list(oracle.certificate);
  j["clauses"] = theorem.clauses;
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  return theorem.is_prime == oracle.is_prime ? kOk : kMismatch;
}

int cmd_verify(const Options& o) {
  const VerifyTable t = run_verify(o.theorem, o.verify);
  Sink sink(o.out);
  t.write_csv(sink.stream());
  std::cerr << o.theorem << ": " << t.rows.size() << " rows, " << t.mismatches << " mismatches\n";
  return t.mismatches == 0 ? kOk : kMismatch;
}

int cmd_search_k3(const Options& o) {
  const FiniteRing field = parse_ring_spec(o.field);
  const K3Search s = find_k3(field, o.p);
  ordered_json j;
  j["kind"] = "k3";
  j["field"] = field.spec_string();
  j["p"] = o.p;
  j["q"] = field.size();
  j["complete"] = s.complete;
  j["searched"] = s.searched;
  if (s.a) {
    j["witness"] = {{"a", *s.a}, {"triangle", {0, 1, *s.a}}, {"verified", true}};
  } else {
    j["witness"] = nullptr;
  }
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_search_embed(const Options& o) {
  std::ifstream in(o.target, std::ios::binary);
  if (!in) throw PreconditionError("cannot read target graph '" + o.target + "'");
  std::ostringstream text;
  text << in.rdbuf();
  PlainGraph target;
  try {
    target = read_edge_list(text.str());
  } catch (const Error& e) {
    throw PreconditionError("invalid target graph '" + o.target + "': " + e.what());
  }
  const auto w = find_embedding(target, o.p, o.ell_max);
  ordered_json j;
  j["kind"] = "embed";
  j["p"] = o.p;
  j["ell_max"] = o.ell_max;
  j["target"] = {{"vertices", target.vertex_count()}, {"edges", target.edge_count()}};
  if (w) {
    j["witness"] = {{"ell", w->ell},         {"p", w->p},
                    {"exponents", w->exponents}, {"y", w->y},
                    {"images", w->images},   {"non_edges", w->non_edges},
                    {"pairs", w->pairs},     {"searched", w->searched},
                    {"verified", w->verified}};
  } else {
    j["witness"] = nullptr;
  }
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_search_bipartite(const Options& o) {
  const auto probes = bipartite_char2_search(o.p, o.m_max);
  ordered_json j;
  j["kind"] = "bipartite-char2";
  j["p"] = o.p;
  j["m_max"] = o.m_max;
  j["probes"] = ordered_json::array();
  ordered_json found = nullptr;
  for (const BipartiteProbe& b : probes) {
    j["probes"].push_back({{"m", b.m}, {"q", b.q}, {"components", b.components}, {"bipartite", b.bipartite}});
    if (found.is_null() && b.bipartite && b.components == 1) found = b.m;
  }
  j["connected_bipartite_m"] = found;
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  return kOk;
}

// Coefficients can outgrow any JSON number type, so this object is
// written by hand with the arrays emitted verbatim.
int cmd_poly(const Options& o) {
  if (o.poly_format != "text" && o.poly_format != "json") {
    throw PreconditionError("poly: format must be text or json, got '" + o.poly_format + "'");
  }
  const FactorizationRecord rec = extract_g_p(o.p);
  if (!rec.verified) throw InvariantViolation("factorization of f_" + std::to_string(o.p) + " does not multiply back");
  const IntPoly f = build_f_p(o.p);
  const auto roots = roots_mod_p(rec.g, o.p);
  Sink sink(o.out);
  std::ostream& out = sink.stream();
  if (o.poly_format == "text") {
    out << "f_p = " << f.to_string() << '\n';
    out << "m = " << rec.m << '\n';
    out << "g_p = " << rec.g.to_string() << '\n';
    out << "roots of g_p mod p:";
    for (auto r : roots) out << ' ' << r;
    out << '\n';
    return kOk;
  }
  out << "{\n  \"p\": " << o.p << ",\n  \"m\": " << rec.m << ",\n";
  out << "  \"f_p\": {\"text\": " << ordered_json(f.to_string()).dump() << ", \"coefficients\": " << f.to_json_array()
      << "},\n";
  out << "  \"g_p\": {\"text\": " << ordered_json(rec.g.to_string()).dump()
      << ", \"coefficients\": " << rec.g.to_json_array() << "},\n";
  out << "  \"roots_mod_p\": " << ordered_json(roots).dump() << ",\n";
  out << "  \"verified\": true\n}\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-unitary Cayley graphs over finite commutative rings"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--max-ring-size", o.max_ring_size, "Largest ring accepted (default 2^20)")->check(CLI::PositiveNumber);

  auto* build = app.add_subcommand("build", "Export G_R(p)");
  build->add_option("-r,--ring", o.ring, "Ring spec, e.g. \"Z/25\" or \"F(2,4)xZ/9\"")->required();
  build->add_option("--p", o.p, "Prime p")->required();
  build->add_option("--format", o.format, "dot, json or edgelist")->capture_default_str();
  build->add_option("--out", o.out, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Structure report as JSON");
  analyze->add_option("-r,--ring", o.ring, "Ring spec")->required();
  analyze->add_option("--p", o.p, "Prime p")->required();
  analyze->add_option("--out", o.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check a theorem over a sweep; CSV out");
  verify->add_option("theorem", o.theorem, "Theorem id")->required()->check(CLI::IsMember(verify_ids()));
  verify->add_option("--corpus", o.verify.corpus, "\"default\" or comma separated ring specs")->capture_default_str();
  verify->add_option("--rings", o.verify.rings, "Rings for wreath / homogeneous");
  verify->add_option("--p", o.verify.primes, "Primes, comma separated")->delimiter(',')->capture_default_str();
  verify->add_option("--limit", o.verify.limit, "Sweep bound (0: per-check default)");
  verify->add_option("--workers", o.verify.workers, "Threads (0: all cores)");
  verify->add_option("--out", o.out, "Output file (default stdout)");

  auto* search = app.add_subcommand("search", "Witness searches");
  search->require_subcommand(1);
  auto* k3 = search->add_subcommand("k3", "Triangle through 0 and 1 in G_F(p)");
  k3->add_option("--field", o.field, "Field spec, e.g. \"F(271,1)\"")->required();
  k3->add_option("--p", o.p, "Prime p")->required();
  k3->add_option("--out", o.out, "Output file (default stdout)");
  auto* embed = search->add_subcommand("embed", "Induced copy of a graph in G_{F_ell}(p)");
  embed->add_option("--target", o.target, "Edge-list file")->required();
  embed->add_option("--p", o.p, "Prime p")->required();
  embed->add_option("--ell-max", o.ell_max, "Largest ell tried")->capture_default_str();
  embed->add_option("--out", o.out, "Output file (default stdout)");
  auto* bip = search->add_subcommand("bipartite-char2", "Bipartiteness of G_{F_2^m}(p)");
  bip->add_option("--p", o.p, "Prime p")->required();
  bip->add_option("--m-max", o.m_max, "Largest m")->capture_default_str();
  bip->add_option("--out", o.out, "Output file (default stdout)");

  auto* poly = app.add_subcommand("poly", "f_p = p x (x+1) (x^2+x+1)^m g_p, exact");
  poly->add_option("--p", o.p, "Prime p > 3")->required();
  poly->add_option("--format", o.poly_format, "text or json")->capture_default_str();
  poly->add_option("--out", o.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (o.max_ring_size != 0) setenv("CAYLEYLAB_MAX_RING_SIZE", std::to_string(o.max_ring_size).c_str(), 1);
    if (*build) return cmd_build(o);
    if (*analyze) return cmd_analyze(o);
    if (*verify) return cmd_verify(o);
    if (*k3) return cmd_search_k3(o);
    if (*embed) return cmd_search_embed(o);
    if (*bip) return cmd_search_bipartite(o);
    if (*poly) return cmd_poly(o);
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

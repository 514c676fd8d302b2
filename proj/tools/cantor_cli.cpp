// command line front end: inspect the constructions, decode words, test
// memberships and edges, emit graphs, and run the verification suites.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "cantor/cantor.hpp"

using namespace cantor;

namespace {

Sym alphabet_for_set(const std::string& set) {
  if (set == "a2part") return kOmega;
  if (set == "s3part") return 3;
  return 2;
}

nlohmann::ordered_json placed_json(const Word& u) {
  nlohmann::ordered_json j;
  j["u"] = word_str(u, 2);
  const auto d = placed_decode(u);
  j["placed"] = d.has_value();
  if (d) {
    j["t"] = word_str(d->t, kOmega);
    j["l"] = d->level();
    j["sigma"] = d->sigma;
    j["eps"] = d->eps;
    j["mirror"] = word_str(mirror_word(u), 2);
    const auto p = pred_word(u);
    j["pred"] = p ? word_str(*p, 2) : "";
    nlohmann::ordered_json lv = nlohmann::ordered_json::array();
    for (std::uint64_t l = 0; l <= d->level(); ++l) {
      const auto pl = pred_level_word(u, l);
      lv.push_back(pl ? word_str(*pl, 2) : "");
    }
    j["pred_l"] = lv;
  }
  return j;
}

int report_out(const VerifyReport& r, const std::string& format, bool timings,
               const std::string& outfile) {
  std::string text;
  if (format == "json") {
    text = report_json(r, timings);
  } else {
    text = "suite " + r.suite + "\nbounds";
    for (const auto& [k, v] : r.bounds) text += " " + k + "=" + std::to_string(v);
    text += "\ncases " + std::to_string(r.cases_checked) + "\n";
    for (const auto& [k, v] : r.branch_counts)
      text += "branch " + k + "=" + std::to_string(v) + "\n";
    text += "failures " + std::to_string(r.failures.size()) + "\n";
    std::size_t shown = 0;
    for (const Failure& f : r.failures) {
      if (++shown > 20) {
        text += "  ...\n";
        break;
      }
      text += "  " + f.key + " | expected " + f.expected + " | got " + f.got + "\n";
    }
    if (timings) text += "elapsed_ms " + std::to_string(r.elapsed_ms) + "\n";
    text += r.ok() ? "ok" : "failed";
  }
  if (outfile.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(outfile);
    if (!out) {
      std::cerr << "cannot write " << outfile << "\n";
      return 2;
    }
    out << text << "\n";
  }
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eventually periodic points: constructions and checks"};
  app.require_subcommand(1);

  auto* dense = app.add_subcommand("dense", "dense word family at an index");
  std::uint64_t dense_n = 0;
  dense->add_option("n", dense_n, "index")->required();

  auto* pairc = app.add_subcommand("pair", "diagonal pairing");
  std::vector<std::uint64_t> pair_args;
  pairc->add_option("values", pair_args, "n p to encode, or q to decode")
      ->expected(1, 2);

  auto* pcode = app.add_subcommand("pcode", "prime coding of finite words");
  std::string pcode_word;
  std::int64_t pcode_index = -1;
  std::uint64_t pcode_bound = kDefaultPrimeBound;
  pcode->add_option("--word", pcode_word, "word to encode (comma separated)");
  pcode->add_option("--index", pcode_index, "image index to decode");
  pcode->add_option("--bound", pcode_bound, "image bound");

  auto* placed = app.add_subcommand("placed", "decode a binary word");
  std::string placed_u;
  placed->add_option("u", placed_u, "binary word")->required();

  auto* member = app.add_subcommand("member", "membership tests");
  std::string mem_set, mem_t, mem_point;
  std::int64_t mem_n = -1, mem_q = -1, mem_p = -1;
  member->add_option("--set", mem_set, "kt|ktn|h|htilde|x3|ktpart|a2part|s3part")
      ->required();
  member->add_option("--t", mem_t, "tree word (comma separated)");
  member->add_option("--point", mem_point, "point as pre;per")->required();
  member->add_option("--n", mem_n, "refinement entry (ktn)");
  member->add_option("--q", mem_q, "stage (partitions)");
  member->add_option("--p", mem_p, "piece (partitions)");

  auto* edge = app.add_subcommand("edge", "edge tests");
  std::string edge_family, edge_x, edge_y;
  edge->add_option("--family", edge_family, "g0|a1|a2|a3|g")->required();
  edge->add_option("--x", edge_x, "left point")->required();
  edge->add_option("--y", edge_y, "right point")->required();

  auto* graph = app.add_subcommand("graph", "level graph of the dense family");
  std::uint64_t graph_level = 0;
  bool graph_dot_flag = false;
  graph->add_option("level", graph_level, "level")->required();
  graph->add_flag("--dot", graph_dot_flag, "emit graphviz instead of json");

  auto* witness = app.add_subcommand("witness", "density witnesses and chains");
  std::string wit_kind, wit_stem, wit_t, wit_point;
  witness->add_option("kind", wit_kind, "x3|ht|chain")->required();
  witness->add_option("--stem", wit_stem, "binary stem");
  witness->add_option("--t", wit_t, "tree word (ht)");
  witness->add_option("--point", wit_point, "binary point (chain)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite, v_scan, v_density, v_format = "json", v_out;
  unsigned v_jobs = 1;
  bool v_timings = false;
  verify->add_option("--suite", v_suite, "suite id");
  verify->add_option("--scan", v_scan, "cylinder scan family");
  verify->add_option("--density", v_density, "density suite: x3|ht");
  verify->add_option("--jobs", v_jobs, "worker count");
  verify->add_flag("--timings", v_timings, "include elapsed_ms");
  verify->add_option("--format", v_format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", v_out, "write the report to a file");
  std::map<std::string, std::int64_t> v_bounds_in;
  for (const char* key : {"maxlen", "maxn", "tlen", "entmax", "nmax", "pmax",
                          "imax", "qmax", "depth", "symmax", "level",
                          "qhorizon", "growth"}) {
    v_bounds_in[key] = -1;
    verify->add_option("--" + std::string(key), v_bounds_in[key],
                       std::string("bound: ") + key);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dense->parsed()) {
      const DenseWords d = dense_words(dense_n);
      std::cout << "psi " << word_str(d.psi, 2) << "\n"
                << "s " << word_str(d.s, 2) << "\n"
                << "w " << word_str(d.w, 2) << "\n";
      return 0;
    }
    if (pairc->parsed()) {
      if (pair_args.size() == 2) {
        std::cout << pair_index(pair_args[0], pair_args[1]) << "\n";
      } else {
        const Unpaired u = unpair(pair_args[0]);
        std::cout << "n=" << u.n << " p=" << u.p << " M=" << u.M << "\n";
      }
      return 0;
    }
    if (pcode->parsed()) {
      if (!pcode_word.empty() || pcode_index < 0) {
        std::cout << prime_code(parse_word(pcode_word, kOmega)) << "\n";
      } else {
        std::cout << word_str(prime_decode(static_cast<std::uint64_t>(pcode_index),
                                           pcode_bound),
                              kOmega)
                  << "\n";
      }
      return 0;
    }
    if (placed->parsed()) {
      std::cout << placed_json(parse_word(placed_u, 2)).dump(2) << "\n";
      return 0;
    }
    if (member->parsed()) {
      const EpPoint x = parse_point(mem_point, alphabet_for_set(mem_set));
      const Word t = parse_word(mem_t, kOmega);
      if (mem_set == "kt") {
        std::cout << (kt_member(t, x) ? "true" : "false") << "\n";
      } else if (mem_set == "ktn") {
        if (mem_n < 0) throw domain_error("member: ktn needs --n");
        std::cout << (ktn_member(t, static_cast<Sym>(mem_n), x) ? "true" : "false")
                  << "\n";
      } else if (mem_set == "h") {
        std::cout << (h_member(t, x) ? "true" : "false") << "\n";
      } else if (mem_set == "htilde") {
        std::cout << (h_tilde_member(t, x) ? "true" : "false") << "\n";
      } else if (mem_set == "x3") {
        const X3Result res = x3_member(x);
        std::cout << (res.verdict == X3Result::Verdict::IN
                          ? "IN"
                          : res.verdict == X3Result::Verdict::OUT ? "OUT"
                                                                  : "UNKNOWN")
                  << "\n";
      } else if (mem_set == "ktpart" || mem_set == "a2part" || mem_set == "s3part") {
        if (mem_q < 0 || mem_p < 0) throw domain_error("member: partition needs --q --p");
        const std::uint64_t q = static_cast<std::uint64_t>(mem_q);
        const std::uint64_t p = static_cast<std::uint64_t>(mem_p);
        const bool in = mem_set == "ktpart" ? kt_partition_member(q, p, x)
                        : mem_set == "a2part" ? a2_partition_member(q, p, x)
                                              : s3_partition_member(q, p, x);
        std::cout << (in ? "true" : "false") << "\n";
      } else {
        throw domain_error("member: unknown set '" + mem_set + "'");
      }
      return 0;
    }
    if (edge->parsed()) {
      const Sym alpha = edge_family == "a2" ? kOmega : 2;
      const EpPoint x = parse_point(edge_x, alpha);
      const EpPoint y = parse_point(edge_y, alpha);
      nlohmann::ordered_json j;
      auto put = [&](bool is_edge, const std::string& wit) {
        j["edge"] = is_edge;
        if (is_edge) j["witness"] = wit;
      };
      if (edge_family == "g0") {
        const auto n = g0_is_edge(x, y);
        put(n.has_value(), n ? std::to_string(*n) : "");
      } else if (edge_family == "a1") {
        const auto i = a1_is_edge(x, y);
        put(i.has_value(), i ? std::to_string(*i) : "");
      } else if (edge_family == "a2") {
        const auto u = a2_is_edge(x, y);
        put(u.has_value(), u ? word_str(*u, kOmega) : "");
      } else if (edge_family == "a3") {
        const auto t = a3_is_edge(x, y);
        put(t.has_value(), t ? word_str(*t, kOmega) : "");
      } else if (edge_family == "g") {
        const auto t = g_is_edge(x, y);
        put(t.has_value(), t ? word_str(*t, kOmega) : "");
      } else {
        throw domain_error("edge: unknown family '" + edge_family + "'");
      }
      std::cout << j.dump() << "\n";
      return 0;
    }
    if (graph->parsed()) {
      const LevelGraph g = g0_level_graph(static_cast<std::uint32_t>(graph_level));
      if (graph_dot_flag) {
        std::cout << graph_dot(g);
      } else {
        nlohmann::ordered_json j;
        j["n"] = g.n;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& e : g.edges)
          edges.push_back(nlohmann::ordered_json::array({e[0], e[1]}));
        j["edges"] = edges;
        std::cout << j.dump() << "\n";
      }
      return 0;
    }
    if (witness->parsed()) {
      if (wit_kind == "x3") {
        std::cout << point_str(density_witness_x3(parse_word(wit_stem, 2))) << "\n";
      } else if (wit_kind == "ht") {
        std::cout << point_str(density_witness_ht(parse_word(wit_t, kOmega),
                                                  parse_word(wit_stem, 2)))
                  << "\n";
      } else if (wit_kind == "chain") {
        const auto chain = witness_chain(parse_point(wit_point, 2));
        for (const Word& t : chain) std::cout << word_str(t, kOmega) << "\n";
      } else {
        throw domain_error("witness: unknown kind '" + wit_kind + "'");
      }
      return 0;
    }
    if (verify->parsed()) {
      const int picked = (!v_suite.empty()) + (!v_scan.empty()) + (!v_density.empty());
      if (picked != 1)
        throw domain_error("verify: pick exactly one of --suite, --scan, --density");
      std::map<std::string, long long> bounds;
      for (const auto& [k, v] : v_bounds_in)
        if (v >= 0) bounds[k] = v;
      VerifyReport r;
      if (!v_suite.empty()) r = run_suite(v_suite, bounds, v_jobs);
      else if (!v_scan.empty()) r = run_scan(v_scan, bounds, v_jobs);
      else if (v_density == "x3") r = density_x3_suite(bounds, v_jobs);
      else if (v_density == "ht") r = density_ht_suite(bounds, v_jobs);
      else throw domain_error("verify: unknown density suite '" + v_density + "'");
      return report_out(r, v_format, v_timings, v_out);
    }
  } catch (const domain_error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}

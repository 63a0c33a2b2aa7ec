// Command-line front end: decide | three-to-two | reduce | synthesize |
// verify | explore | frozen | witness.
//
// Exit codes: 0 = mixing / valid, 1 = not mixing / invalid, 2 = usage or
// parse error, 3 = state budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "recolor/decide.hpp"
#include "recolor/io.hpp"
#include "recolor/reduction.hpp"
#include "recolor/synthesis.hpp"

using namespace recolor;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

Graph load_graph(const std::string& path) {
  std::vector<std::string> warnings;
  Graph g = parse_graph(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << path << ": warning: " << w << "\n";
  return g;
}

SearchLimits resolve_limits(const std::optional<std::uint64_t>& flag) {
  SearchLimits limits;
  if (flag) {
    limits.max_states = *flag;
    return limits;
  }
  if (const char* env = std::getenv("RECOLOR_MAX_STATES")) {
    try {
      std::size_t pos = 0;
      limits.max_states = std::stoull(env, &pos);
      if (pos != std::string(env).size()) throw std::invalid_argument(env);
    } catch (...) {
      throw Error(ErrorCode::ParseError,
                  std::string("RECOLOR_MAX_STATES is not an integer: '") + env + "'");
    }
  }
  return limits;
}

std::string color_row(const Coloring& c) {
  std::string out;
  for (int v = 0; v < c.size(); ++v) {
    if (v) out += " ";
    out += std::to_string(c.colors[v]);
  }
  return out;
}

nlohmann::json coloring_json(const Coloring& c) {
  return nlohmann::json{{"k", c.k}, {"colors", c.colors}};
}

const char* tier_name(WitnessTier t) {
  return t == WitnessTier::ExactBfs ? "exact-bfs" : "structural";
}

int report_verdict(const MixingVerdict& v, const char* key, bool json) {
  if (json) {
    nlohmann::json j{{key, v.answer}, {"reason", name(v.reason)}};
    if (v.witness) j["witness"] = coloring_json(*v.witness);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << key << ": " << (v.answer ? "true" : "false") << "\n";
    std::cout << "reason: " << name(v.reason) << "\n";
    if (v.witness) std::cout << "witness: " << color_row(*v.witness) << "\n";
  }
  if (v.reason == Reason::VacuousNoColorings)
    std::cerr << "warning: no proper colorings exist; the answer is vacuous\n";
  return v.answer ? kExitYes : kExitNo;
}

struct CommonOpts {
  std::string graph_path;
  int k = 0;
  bool json = false;
  std::optional<std::uint64_t> max_states;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_k) {
  cmd->add_option("--graph", opts.graph_path, "input graph file (DIMACS edge format)")
      ->required();
  if (with_k) cmd->add_option("-k", opts.k, "palette size")->required();
  cmd->add_flag("--json", opts.json, "machine-readable output");
  cmd->add_option("--max-states", opts.max_states,
                  "state budget override (also RECOLOR_MAX_STATES)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"single-vertex recoloring toolkit"};
  app.require_subcommand(1);

  CommonOpts decide_opts;
  std::string method_name = "auto";
  auto* decide_cmd = app.add_subcommand("decide", "decide whether the graph is k-mixing");
  add_common(decide_cmd, decide_opts, true);
  decide_cmd->add_option("--method", method_name, "auto | brute | lemma3")
      ->check(CLI::IsMember({"auto", "brute", "lemma3"}));

  CommonOpts tt_opts;
  auto* tt_cmd = app.add_subcommand(
      "three-to-two", "can every proper 3-coloring reach a 2-coloring?");
  add_common(tt_cmd, tt_opts, false);

  CommonOpts reduce_opts;
  std::string reduce_out;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "join a pinned k-3 clique onto a bipartite graph");
  add_common(reduce_cmd, reduce_opts, true);
  reduce_cmd->add_option("-o,--output", reduce_out, "output graph file")->required();

  CommonOpts synth_opts;
  std::string synth_from, synth_to, synth_out;
  auto* synth_cmd = app.add_subcommand(
      "synthesize", "build a verified recoloring sequence on the reduction instance");
  add_common(synth_cmd, synth_opts, true);
  synth_cmd->add_option("--from", synth_from, "start coloring file (JSON)")->required();
  synth_cmd->add_option("--to", synth_to, "target coloring file (JSON)")->required();
  synth_cmd->add_option("-o,--output", synth_out, "output sequence file")->required();

  CommonOpts verify_opts;
  std::string verify_from, verify_steps;
  auto* verify_cmd = app.add_subcommand("verify", "replay and check a recoloring sequence");
  add_common(verify_cmd, verify_opts, true);
  verify_cmd->add_option("--from", verify_from, "start coloring file (JSON)")->required();
  verify_cmd->add_option("--steps", verify_steps, "sequence file (JSON)")->required();

  CommonOpts explore_opts;
  std::string dot_out;
  bool want_stats = false;
  auto* explore_cmd =
      app.add_subcommand("explore", "census of the configuration graph of k-colorings");
  add_common(explore_cmd, explore_opts, true);
  explore_cmd->add_option("--dot", dot_out, "write the configuration graph as DOT");
  explore_cmd->add_flag("--stats", want_stats, "print the census (default)");

  CommonOpts frozen_opts;
  auto* frozen_cmd = app.add_subcommand("frozen", "list frozen k-colorings");
  add_common(frozen_cmd, frozen_opts, true);

  CommonOpts witness_opts;
  auto* witness_cmd = app.add_subcommand(
      "witness", "emit a verified non-mixing pair for the reduction instance");
  add_common(witness_cmd, witness_opts, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e);
      return kExitYes;
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*decide_cmd) {
      const SearchLimits limits = resolve_limits(decide_opts.max_states);
      const Graph g = load_graph(decide_opts.graph_path);
      Method method = Method::Auto;
      if (method_name == "brute") method = Method::Brute;
      if (method_name == "lemma3") method = Method::Lemma3;
      return report_verdict(decide_mixing(g, decide_opts.k, method, limits), "mixing",
                            decide_opts.json);
    }

    if (*tt_cmd) {
      const SearchLimits limits = resolve_limits(tt_opts.max_states);
      const Graph g = load_graph(tt_opts.graph_path);
      if (!bipartition(g))
        std::cerr << "note: graph is not bipartite; evaluating the predicate anyway\n";
      return report_verdict(three_to_two(g, limits), "three_to_two", tt_opts.json);
    }

    if (*reduce_cmd) {
      const Graph b = load_graph(reduce_opts.graph_path);
      const ReductionInstance inst = reduce(b, reduce_opts.k);
      write_file(reduce_out, serialize_graph(inst.g));
      const std::string meta_path = reduce_out + ".meta.json";
      nlohmann::json meta{{"k", inst.k},
                          {"n_b", inst.b_count()},
                          {"x_range", {inst.x_first(), inst.x_first() + inst.x_count()}}};
      write_file(meta_path, meta.dump() + "\n");
      if (reduce_opts.json) {
        nlohmann::json j{{"graph", reduce_out},
                         {"meta", meta_path},
                         {"n", inst.g.vertex_count()},
                         {"edges", inst.g.edge_count()},
                         {"k", inst.k},
                         {"n_b", inst.b_count()},
                         {"x_range", {inst.x_first(), inst.x_first() + inst.x_count()}}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "wrote " << reduce_out << " (" << inst.g.vertex_count() << " vertices, "
                  << inst.g.edge_count() << " edges)\n";
        std::cout << "x_range: [" << inst.x_first() << ", "
                  << inst.x_first() + inst.x_count() << ")\n";
      }
      return kExitYes;
    }

    if (*synth_cmd) {
      const SearchLimits limits = resolve_limits(synth_opts.max_states);
      const Graph b = load_graph(synth_opts.graph_path);
      const ReductionInstance inst = reduce(b, synth_opts.k);
      const Coloring c1 = parse_coloring(read_file(synth_from));
      const Coloring c2 = parse_coloring(read_file(synth_to));
      RecoloringSequence seq;
      try {
        seq = synthesize_k(inst, c1, c2, limits);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotMixing) throw;
        std::cerr << "no sequence: " << e.what() << "\n";
        return kExitNo;
      }
      if (apply_sequence(inst.g, c1, seq) != c2)
        throw Error(ErrorCode::ImproperStep, "internal: synthesized sequence failed to verify");
      write_file(synth_out, serialize_sequence(seq) + "\n");
      if (synth_opts.json) {
        nlohmann::json j{{"steps", seq.size()}, {"verified", true}, {"output", synth_out}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "steps: " << seq.size() << "\n";
        std::cout << "verified: true\n";
        std::cout << "wrote " << synth_out << "\n";
      }
      return kExitYes;
    }

    if (*verify_cmd) {
      const Graph g = load_graph(verify_opts.graph_path);
      const Coloring start = parse_coloring(read_file(verify_from));
      if (start.k != verify_opts.k)
        throw Error(ErrorCode::ParseError, "coloring file has k=" + std::to_string(start.k) +
                                               " but -k " + std::to_string(verify_opts.k) +
                                               " was given");
      const RecoloringSequence seq = parse_sequence(read_file(verify_steps));
      try {
        const Coloring final = apply_sequence(g, start, seq);
        if (verify_opts.json) {
          nlohmann::json j{{"valid", true}, {"final", coloring_json(final)}};
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "valid: true\n";
          std::cout << "final: " << color_row(final) << "\n";
        }
        return kExitYes;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ImproperStep && e.code() != ErrorCode::NoOpStep &&
            e.code() != ErrorCode::PaletteError && e.code() != ErrorCode::VertexOutOfRange &&
            e.code() != ErrorCode::NotProper)
          throw;
        if (verify_opts.json) {
          nlohmann::json j{{"valid", false}, {"error", e.what()}};
          if (e.index()) j["step"] = *e.index();
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "valid: false\n";
          std::cout << "error: " << e.what() << "\n";
        }
        return kExitNo;
      }
    }

    if (*explore_cmd) {
      const SearchLimits limits = resolve_limits(explore_opts.max_states);
      const Graph g = load_graph(explore_opts.graph_path);
      const ConfigStats stats = components(g, explore_opts.k, limits);
      if (!dot_out.empty()) write_file(dot_out, export_config_dot(g, explore_opts.k, limits));
      if (explore_opts.json) {
        nlohmann::json j{{"num_colorings", stats.num_colorings},
                         {"num_components", stats.num_components},
                         {"num_frozen", stats.num_frozen},
                         {"largest_component", stats.largest_component},
                         {"is_connected", stats.is_connected}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "num_colorings: " << stats.num_colorings << "\n";
        std::cout << "num_components: " << stats.num_components << "\n";
        std::cout << "num_frozen: " << stats.num_frozen << "\n";
        std::cout << "largest_component: " << stats.largest_component << "\n";
        std::cout << "is_connected: " << (stats.is_connected ? "true" : "false") << "\n";
      }
      return kExitYes;
    }

    if (*frozen_cmd) {
      const SearchLimits limits = resolve_limits(frozen_opts.max_states);
      const Graph g = load_graph(frozen_opts.graph_path);
      const Census cen = census(g, frozen_opts.k, limits);
      if (frozen_opts.json) {
        nlohmann::json list = nlohmann::json::array();
        for (std::size_t i = 0; i < cen.codes.size(); ++i)
          if (cen.frozen[i]) list.push_back(coloring_json(cen.coloring_at(i)));
        nlohmann::json j{{"count", list.size()}, {"frozen", std::move(list)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "k: " << frozen_opts.k << "\n";
        std::cout << "count: " << cen.stats.num_frozen << "\n";
        for (std::size_t i = 0; i < cen.codes.size(); ++i)
          if (cen.frozen[i]) std::cout << color_row(cen.coloring_at(i)) << "\n";
      }
      return kExitYes;
    }

    if (*witness_cmd) {
      const SearchLimits limits = resolve_limits(witness_opts.max_states);
      const Graph b = load_graph(witness_opts.graph_path);
      const ReductionInstance inst = reduce(b, witness_opts.k);
      const MixingVerdict tt = three_to_two(b, limits);
      if (tt.answer) {
        if (witness_opts.json)
          std::cout << nlohmann::json{{"mixing", true}}.dump() << "\n";
        else
          std::cout << "mixing: true (no witness pair exists)\n";
        return kExitYes;
      }
      const WitnessPair wp = non_mixing_witness(inst, *tt.witness, limits);
      if (witness_opts.json) {
        nlohmann::json j{{"mixing", false},
                         {"tier", tier_name(wp.tier)},
                         {"a", coloring_json(wp.a)},
                         {"b", coloring_json(wp.b)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "mixing: false\n";
        std::cout << "tier: " << tier_name(wp.tier) << "\n";
        std::cout << "a: " << color_row(wp.a) << "\n";
        std::cout << "b: " << color_row(wp.b) << "\n";
      }
      return kExitNo;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::TooLarge ? kExitTooLarge : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

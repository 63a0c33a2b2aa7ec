#include "recolor/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace recolor {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& tok, long long& out) {
  try {
    std::size_t pos = 0;
    out = std::stoll(tok, &pos);
    return pos == tok.size();
  } catch (...) {
    return false;
  }
}

}  // namespace

Graph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  long long m = -1;
  long long edge_lines = 0;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw Error(ErrorCode::ParseError, "duplicate problem line", line_no);
      if (toks.size() != 4 || toks[1] != "edge" || !parse_int(toks[2], n) ||
          !parse_int(toks[3], m) || n < 0 || m < 0)
        throw Error(ErrorCode::ParseError, "expected 'p edge <n> <m>'", line_no);
      continue;
    }
    if (toks[0] == "e") {
      if (n < 0) throw Error(ErrorCode::ParseError, "edge before problem line", line_no);
      long long u = 0;
      long long v = 0;
      if (toks.size() != 3 || !parse_int(toks[1], u) || !parse_int(toks[2], v))
        throw Error(ErrorCode::ParseError, "expected 'e <u> <v>'", line_no);
      if (u < 1 || u > n || v < 1 || v > n)
        throw Error(ErrorCode::ParseError, "endpoint outside 1.." + std::to_string(n), line_no);
      if (u == v) throw Error(ErrorCode::ParseError, "loop edge", line_no);
      ++edge_lines;
      int lo = static_cast<int>(u) - 1;
      int hi = static_cast<int>(v) - 1;
      if (lo > hi) std::swap(lo, hi);
      if (!seen.insert({lo, hi}).second) {
        if (warnings)
          warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge dropped");
        continue;
      }
      edges.emplace_back(lo, hi);
      continue;
    }
    throw Error(ErrorCode::ParseError, "unrecognized line '" + toks[0] + " ...'", line_no);
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "missing 'p edge <n> <m>' line", line_no);
  if (edge_lines != m)
    throw Error(ErrorCode::ParseError,
                "header announces " + std::to_string(m) + " edges, found " +
                    std::to_string(edge_lines),
                line_no);
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
  return out.str();
}

Coloring parse_coloring(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("colors") ||
      !j["k"].is_number_integer() || !j["colors"].is_array())
    throw Error(ErrorCode::ParseError, "expected {\"k\": int, \"colors\": [int...]}");
  Coloring c;
  c.k = j["k"].get<int>();
  if (c.k < 1) throw Error(ErrorCode::ParseError, "k must be at least 1");
  for (const auto& entry : j["colors"]) {
    if (!entry.is_number_integer())
      throw Error(ErrorCode::ParseError, "colors entries must be integers");
    const int color = entry.get<int>();
    if (color < 0 || color >= c.k)
      throw Error(ErrorCode::ParseError,
                  "color " + std::to_string(color) + " outside 0.." + std::to_string(c.k - 1));
    c.colors.push_back(color);
  }
  return c;
}

std::string serialize_coloring(const Coloring& c) {
  nlohmann::json j;
  j["k"] = c.k;
  j["colors"] = c.colors;
  return j.dump();
}

RecoloringSequence parse_sequence(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    throw Error(ErrorCode::ParseError, "expected {\"steps\": [{\"v\":int,\"color\":int}...]}");
  RecoloringSequence s;
  for (const auto& entry : j["steps"]) {
    if (!entry.is_object() || !entry.contains("v") || !entry.contains("color") ||
        !entry["v"].is_number_integer() || !entry["color"].is_number_integer())
      throw Error(ErrorCode::ParseError, "each step needs integer fields v and color", s.size());
    const int v = entry["v"].get<int>();
    const int color = entry["color"].get<int>();
    if (v < 0 || color < 0)
      throw Error(ErrorCode::ParseError, "step fields must be non-negative", s.size());
    s.push_back({v, color});
  }
  return s;
}

std::string serialize_sequence(const RecoloringSequence& s) {
  nlohmann::json steps = nlohmann::json::array();
  for (const Step& step : s) steps.push_back({{"color", step.new_color}, {"v", step.vertex}});
  nlohmann::json j;
  j["steps"] = std::move(steps);
  return j.dump();
}

std::string export_config_dot(const Graph& g, int k, const SearchLimits& limits) {
  const Census cen = census(g, k, limits);
  const int n = g.vertex_count();
  std::ostringstream out;
  out << "graph configurations {\n";
  out << "  // proper " << k << "-colorings: " << cen.codes.size() << "\n";
  std::vector<int> buf(n);
  for (std::size_t i = 0; i < cen.codes.size(); ++i) {
    cen.codec.decode(cen.codes[i], buf);
    out << "  s" << cen.codes[i] << " [label=\"";
    for (int v = 0; v < n; ++v) {
      if (v) out << " ";
      out << buf[v];
    }
    out << "\"";
    if (cen.frozen[i]) out << ", style=filled";
    out << "];\n";
  }
  std::vector<char> blocked(k);
  for (std::size_t i = 0; i < cen.codes.size(); ++i) {
    cen.codec.decode(cen.codes[i], buf);
    for (int v = 0; v < n; ++v) {
      std::fill(blocked.begin(), blocked.end(), 0);
      for (int w : g.neighbors(v)) blocked[buf[w]] = 1;
      for (int a = 0; a < k; ++a) {
        if (a == buf[v] || blocked[a]) continue;
        const std::uint64_t ncode = cen.codec.repack(cen.codes[i], v, buf[v], a);
        if (ncode > cen.codes[i]) out << "  s" << cen.codes[i] << " -- s" << ncode << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace recolor

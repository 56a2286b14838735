#pragma once

// DIMACS graph files and JSON hunt certificates. Files use 1-based vertices;
// everything in memory is 0-based.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "treehunt/graph.hpp"
#include "treehunt/hunter.hpp"
#include "treehunt/tree_patterns.hpp"

namespace treehunt {

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// "c ..." comments, one "p edge <n> <m>" header, then "e <u> <v>" lines.
inline Graph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long nn = 0;
      long long mm = 0;
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      if (!(ls >> kind >> nn >> mm) || kind != "edge" || nn < 0 || mm < 0)
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      n = nn;
    } else if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "edge before 'p edge' header");
      long long u = 0;
      long long v = 0;
      if (!(ls >> u >> v)) throw ParseError(line_no, "malformed edge line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(line_no, "trailing tokens");
  }
  if (n < 0) throw ParseError(line_no, "missing 'p edge' header");
  return Graph(static_cast<Vertex>(n), edges);
}

inline std::string write_graph_file(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

namespace detail {

inline nlohmann::json one_based(const std::vector<Vertex>& vs) {
  auto arr = nlohmann::json::array();
  for (Vertex v : vs) arr.push_back(v + 1);
  return arr;
}

inline std::vector<Vertex> zero_based(const nlohmann::json& arr) {
  std::vector<Vertex> out;
  for (const auto& x : arr) out.push_back(x.get<Vertex>() - 1);
  return out;
}

inline HuntStatus status_from_string(const std::string& s) {
  for (auto st : {HuntStatus::found, HuntStatus::not_found, HuntStatus::premise_violated, HuntStatus::step_failed})
    if (to_string(st) == s) return st;
  throw GraphError("unknown status '" + s + "'");
}

}  // namespace detail

// Canonical JSON: keys sorted, 1-based vertices, two-space indent, trailing newline.
inline std::string serialize_certificate(const HuntOutcome& outcome, int t) {
  nlohmann::json j;
  j["pattern"] = TreeSpec::spider(t).name();
  j["t"] = t;
  j["status"] = to_string(outcome.status);
  if (outcome.certificate) {
    auto mapping = nlohmann::json::array();
    for (std::size_t i = 0; i < outcome.certificate->map.size(); ++i)
      mapping.push_back({static_cast<int>(i) + 1, outcome.certificate->map[i] + 1});
    j["mapping"] = mapping;
    j["root"] = outcome.certificate->map.at(0) + 1;
  }
  if (!outcome.route.empty()) j["route"] = outcome.route;
  if (outcome.center) j["center"] = *outcome.center + 1;
  if (outcome.stall_report) {
    const auto& r = *outcome.stall_report;
    j["stall"] = {{"phase", r.phase}, {"claim", r.claim}, {"witness", detail::one_based(r.witness)},
                  {"detail", r.detail}};
  } else {
    j["stall"] = nullptr;
  }
  return j.dump(2) + "\n";
}

struct ParsedCertificate {
  int t = 0;
  HuntOutcome outcome;
};

inline ParsedCertificate parse_certificate(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    ParsedCertificate pc;
    pc.t = j.at("t").get<int>();
    if (j.at("pattern").get<std::string>() != TreeSpec::spider(pc.t).name())
      throw GraphError("pattern does not match t");
    pc.outcome.status = detail::status_from_string(j.at("status").get<std::string>());
    if (j.contains("mapping")) {
      const auto& m = j.at("mapping");
      Embedding e;
      e.map.assign(m.size(), -1);
      for (const auto& pair : m) {
        const auto tree_v = pair.at(0).get<long long>();
        if (tree_v < 1 || static_cast<std::size_t>(tree_v) > m.size())
          throw GraphError("mapping tree vertex out of range");
        e.map[static_cast<std::size_t>(tree_v - 1)] = pair.at(1).get<Vertex>() - 1;
      }
      pc.outcome.certificate = std::move(e);
    }
    if (j.contains("route")) pc.outcome.route = j.at("route").get<std::string>();
    if (j.contains("center")) pc.outcome.center = j.at("center").get<Vertex>() - 1;
    if (j.contains("stall") && !j.at("stall").is_null()) {
      const auto& s = j.at("stall");
      pc.outcome.stall_report = StallReport{s.at("phase").get<std::string>(), s.at("claim").get<std::string>(),
                                            detail::zero_based(s.at("witness")), s.at("detail").get<std::string>()};
    }
    return pc;
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace treehunt

#ifndef NTP_EXPORT_HPP
#define NTP_EXPORT_HPP

// Graph and report serialization. Vertices are labelled
// "index:cycles:order" with 1-based cycle notation; isolated vertices are
// never written. Output is deterministic for a given graph.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "ntp/analysis.hpp"
#include "ntp/nonf_graph.hpp"
#include "ntp/permutation.hpp"

namespace ntp {

enum class ExportFormat { dot, graphml, csv, json };

inline ExportFormat parse_export_format(std::string_view s) {
  if (s == "dot") return ExportFormat::dot;
  if (s == "graphml") return ExportFormat::graphml;
  if (s == "csv") return ExportFormat::csv;
  if (s == "json") return ExportFormat::json;
  throw std::invalid_argument("unknown export format \"" + std::string(s) + "\"");
}

inline std::string vertex_label(const ElementTable& t, index_t i) {
  return std::to_string(i) + ":" + format_cycles(t.elements[i]) + ":" + std::to_string(t.order_of[i]);
}

namespace detail {

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

template <typename Fn>
void for_each_edge(const NonFGraph& g, Fn&& fn) {
  for (index_t i : g.vertices) {
    for_each_bit(g.adjacency.row(i), g.adjacency.words_per_row(), [&](std::size_t j) {
      if (j > i) fn(i, static_cast<index_t>(j));
    });
  }
}

}  // namespace detail

inline std::size_t edge_count(const NonFGraph& g) {
  std::size_t n = 0;
  detail::for_each_edge(g, [&](index_t, index_t) { ++n; });
  return n;
}

inline std::string export_dot(const NonFGraph& g) {
  const ElementTable& t = *g.table;
  std::ostringstream out;
  out << "graph nonf {\n";
  for (index_t v : g.vertices) out << "  v" << v << " [label=\"" << vertex_label(t, v) << "\"];\n";
  detail::for_each_edge(g, [&](index_t a, index_t b) { out << "  v" << a << " -- v" << b << ";\n"; });
  out << "}\n";
  return out.str();
}

inline std::string export_graphml(const NonFGraph& g) {
  const ElementTable& t = *g.table;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"order\" for=\"node\" attr.name=\"order\" attr.type=\"long\"/>\n"
      << "  <graph id=\"nonf\" edgedefault=\"undirected\">\n";
  for (index_t v : g.vertices) {
    out << "    <node id=\"v" << v << "\"><data key=\"label\">"
        << detail::xml_escape(vertex_label(t, v)) << "</data><data key=\"order\">" << t.order_of[v]
        << "</data></node>\n";
  }
  detail::for_each_edge(g, [&](index_t a, index_t b) {
    out << "    <edge source=\"v" << a << "\" target=\"v" << b << "\"/>\n";
  });
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

/// One edge per line; labels are quoted since cycle notation contains commas.
inline std::string export_csv(const NonFGraph& g) {
  const ElementTable& t = *g.table;
  std::ostringstream out;
  out << "source,target\n";
  detail::for_each_edge(g, [&](index_t a, index_t b) {
    out << '"' << vertex_label(t, a) << "\",\"" << vertex_label(t, b) << "\"\n";
  });
  return out.str();
}

inline nlohmann::ordered_json graph_json(const NonFGraph& g) {
  const ElementTable& t = *g.table;
  nlohmann::ordered_json j;
  j["k"] = g.k;
  auto& verts = j["vertices"] = nlohmann::ordered_json::array();
  for (index_t v : g.vertices) {
    verts.push_back({{"index", v},
                     {"label", vertex_label(t, v)},
                     {"cycles", format_cycles(t.elements[v])},
                     {"order", t.order_of[v]}});
  }
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  detail::for_each_edge(g, [&](index_t a, index_t b) { edges.push_back({a, b}); });
  j["isolated_count"] = g.size() - g.vertices.size();
  return j;
}

inline std::string export_graph(const NonFGraph& g, ExportFormat f) {
  switch (f) {
    case ExportFormat::dot:
      return export_dot(g);
    case ExportFormat::graphml:
      return export_graphml(g);
    case ExportFormat::csv:
      return export_csv(g);
    case ExportFormat::json:
      return graph_json(g).dump(2) + "\n";
  }
  return {};
}

inline nlohmann::ordered_json graph_summary(const NonFGraph& g, const std::string& group) {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["order"] = g.size();
  j["k"] = g.k;
  j["vertex_count"] = g.vertices.size();
  j["edge_count"] = edge_count(g);
  j["isolated_count"] = g.size() - g.vertices.size();
  return j;
}

/// Report schema: group, order, primes, solvable, isolated_count, status,
/// diameter (null unless connected), max_pi_tilde, sigma_count,
/// prime_graph {vertices, edges, components}, lemmas [{name, outcome, witness?}].
inline nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["primes"] = r.primes;
  j["solvable"] = r.solvable;
  j["isolated_count"] = r.isolated_count;
  j["status"] = to_string(r.status);
  j["diameter"] = r.diameter ? nlohmann::ordered_json(*r.diameter) : nlohmann::ordered_json(nullptr);
  j["max_pi_tilde"] = r.max_pi_tilde;
  j["sigma_count"] = r.sigma_count;
  auto& pg = j["prime_graph"];
  pg["vertices"] = r.prime_graph.vertices;
  pg["edges"] = nlohmann::ordered_json::array();
  for (auto [p, q] : r.prime_graph.edges) pg["edges"].push_back({p, q});
  pg["components"] = r.prime_graph.components;
  auto& lemmas = j["lemmas"] = nlohmann::ordered_json::array();
  for (const auto& l : r.lemmas) {
    nlohmann::ordered_json e{{"name", l.name}, {"outcome", to_string(l.outcome)}};
    if (l.outcome == Outcome::fail) {
      e["witness"] = l.witness_elements;
      if (!l.detail.empty()) e["detail"] = l.detail;
    }
    lemmas.push_back(std::move(e));
  }
  j["passed"] = r.passed();
  return j;
}

}  // namespace ntp

#endif  // NTP_EXPORT_HPP

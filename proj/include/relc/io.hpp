#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relc/structure.hpp"

namespace relc {

// ---------------------------------------------------------------------------
// JSON structure format.
//
//   {
//     "vertices": 5,
//     "signature": [2],
//     "names": ["edge"],                // optional
//     "relations": [[[0,1],[1,0], ...]],
//     "extended_signature": [1, 2],     // optional
//     "extended_names": ["u0", "b0"],   // optional
//     "extended_relations": [...]       // required iff extended_signature
//   }
//
// Tuples are emitted in sorted order; parsing accepts any order.

namespace detail {

inline std::string offset_to_line(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "line " << line << ", column " << col;
  return os.str();
}

inline std::vector<TupleSet> parse_relations(const nlohmann::json& j, const std::vector<int>& ars,
                                             const char* key) {
  if (!j.is_array() || j.size() != ars.size())
    throw std::invalid_argument(std::string("json: '") + key +
                                "' must list one tuple array per signature slot");
  std::vector<TupleSet> out(ars.size());
  for (std::size_t s = 0; s < ars.size(); ++s) {
    if (!j[s].is_array())
      throw std::invalid_argument(std::string("json: '") + key + "' slot " + std::to_string(s) +
                                  " is not an array");
    for (const auto& jt : j[s]) {
      if (!jt.is_array())
        throw std::invalid_argument(std::string("json: tuple in '") + key + "' slot " +
                                    std::to_string(s) + " is not an array");
      Tuple t;
      for (const auto& je : jt) {
        if (!je.is_number_integer())
          throw std::invalid_argument(std::string("json: non-integer tuple entry in '") + key +
                                      "' slot " + std::to_string(s));
        t.push_back(je.get<int>());
      }
      out[s].push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace detail

inline Lift parse_structure_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("json parse error at " + detail::offset_to_line(text, e.byte) +
                                ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("json: top level must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer())
    throw std::invalid_argument("json: missing integer 'vertices'");
  int n = j["vertices"].get<int>();
  if (!j.contains("signature") || !j["signature"].is_array())
    throw std::invalid_argument("json: missing array 'signature'");
  std::vector<int> ars;
  for (const auto& ja : j["signature"]) {
    if (!ja.is_number_integer()) throw std::invalid_argument("json: non-integer arity");
    ars.push_back(ja.get<int>());
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    for (const auto& jn : j["names"]) names.push_back(jn.get<std::string>());
  }
  if (!j.contains("relations")) throw std::invalid_argument("json: missing 'relations'");
  std::vector<TupleSet> rels = detail::parse_relations(j["relations"], ars, "relations");

  Structure base;
  try {
    base = Structure(n, Signature(ars, names), std::move(rels));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }

  if (!j.contains("extended_signature")) return Lift(std::move(base));

  std::vector<int> ext_ars;
  for (const auto& ja : j["extended_signature"]) ext_ars.push_back(ja.get<int>());
  std::vector<std::string> ext_names;
  if (j.contains("extended_names"))
    for (const auto& jn : j["extended_names"]) ext_names.push_back(jn.get<std::string>());
  if (!j.contains("extended_relations"))
    throw std::invalid_argument("json: 'extended_signature' without 'extended_relations'");
  std::vector<TupleSet> ext_rels =
      detail::parse_relations(j["extended_relations"], ext_ars, "extended_relations");
  try {
    return Lift(std::move(base), Signature(ext_ars, ext_names), std::move(ext_rels));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
}

inline nlohmann::ordered_json structure_to_json(const Lift& x) {
  nlohmann::ordered_json j;
  j["vertices"] = x.base.n;
  j["signature"] = x.base.sig.arities;
  if (!x.base.sig.names.empty()) j["names"] = x.base.sig.names;
  j["relations"] = x.base.rels;
  if (x.has_extension()) {
    j["extended_signature"] = x.ext_sig.arities;
    if (!x.ext_sig.names.empty()) j["extended_names"] = x.ext_sig.names;
    j["extended_relations"] = x.ext_rels;
  }
  return j;
}

inline std::string serialize_structure_json(const Lift& x, int indent = 1) {
  return structure_to_json(x).dump(indent) + "\n";
}

inline std::string serialize_structure_json(const Structure& a, int indent = 1) {
  return serialize_structure_json(Lift(a), indent);
}

// ---------------------------------------------------------------------------
// Edge-list text format for graphs: vertex count, ';', then "a-b" pairs,
// whitespace separated. '#' starts a comment running to end of line.
//   "5; 0-1 1-2 2-3 3-4 4-0"

inline Structure parse_edge_list(const std::string& text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) cleaned.push_back('\n');
    } else {
      cleaned.push_back(text[i]);
    }
  }
  std::istringstream in(cleaned);
  long long n = -1;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  char semi = 0;
  if (!(in >> semi) || semi != ';')
    throw std::invalid_argument("edge list: expected ';' after vertex count");
  if (n < 0) throw std::invalid_argument("edge list: negative vertex count");

  std::vector<std::pair<int, int>> edges;
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
      throw std::invalid_argument("edge list: bad edge token '" + tok + "'");
    int a, b;
    try {
      a = std::stoi(tok.substr(0, dash));
      b = std::stoi(tok.substr(dash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("edge list: bad edge token '" + tok + "'");
    }
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("edge list: vertex out of range in '" + tok + "'");
    if (a == b) throw std::invalid_argument("edge list: loop edge '" + tok + "'");
    edges.emplace_back(a, b);
  }
  return make_graph(static_cast<int>(n), edges);
}

inline std::string serialize_edge_list(const Structure& g) {
  require_graph_view(g, "serialize_edge_list");
  std::ostringstream os;
  os << g.n << ";";
  for (auto [a, b] : graph_edges(g)) os << " " << a << "-" << b;
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// graph6: the standard printable byte encoding, one graph per line.

inline Structure parse_graph6_line(const std::string& line) {
  std::size_t pos = 0;
  auto need = [&](std::size_t k) {
    if (pos + k > line.size()) throw std::invalid_argument("graph6: truncated input");
  };
  auto val = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };
  need(1);
  long long n;
  if (line[pos] == 126) {
    need(2);
    if (line[pos + 1] == 126) {
      need(8);
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | val(pos + 2 + i);
      pos += 8;
    } else {
      need(4);
      n = (static_cast<long long>(val(pos + 1)) << 12) | (val(pos + 2) << 6) | val(pos + 3);
      pos += 4;
    }
  } else {
    n = val(pos);
    ++pos;
  }
  if (n > 100000) throw std::invalid_argument("graph6: vertex count implausibly large");

  std::vector<std::pair<int, int>> edges;
  int bit = 5;
  long long need_bits = n * (n - 1) / 2, seen = 0;
  int cur = 0;
  if (need_bits > 0) {
    need(1);
    cur = val(pos);
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (bit < 0) {
        ++pos;
        need(1);
        cur = val(pos);
        bit = 5;
      }
      if (cur >> bit & 1) edges.emplace_back(i, j);
      --bit;
      ++seen;
    }
  (void)seen;
  return make_graph(static_cast<int>(n), edges);
}

inline std::string write_graph6(const Structure& g) {
  require_graph_view(g, "write_graph6");
  std::string out;
  int n = g.n;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int bit = 5, cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.has_tuple(0, {i, j})) cur |= (1 << bit);
      --bit;
      if (bit < 0) {
        out.push_back(static_cast<char>(cur + 63));
        cur = 0;
        bit = 5;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(cur + 63));
  return out;
}

inline std::vector<Structure> parse_graph6_file(const std::string& text) {
  std::vector<Structure> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    if (line.empty()) continue;
    out.push_back(parse_graph6_line(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutations in cycle notation: "(0 1 2)(3 4)"; fixed points omitted;
// whitespace between cycles allowed. Degree is max moved point + 1 unless a
// larger degree is requested.

inline std::vector<int> parse_cycles(const std::string& text, int degree = 0) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  int maxp = -1;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("cycles: expected '('");
    ++i;
    std::vector<int> cyc;
    while (i < text.size() && text[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("cycles: expected a point index");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cyc.push_back(v);
      maxp = std::max(maxp, v);
    }
    if (i >= text.size()) throw std::invalid_argument("cycles: missing ')'");
    ++i;  // consume ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  int n = std::max(degree, maxp + 1);
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> moved(n, 0);
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (moved[from]) throw std::invalid_argument("cycles: point repeated across cycles");
      moved[from] = 1;
      img[from] = to;
    }
  return img;
}

inline std::string format_cycles(const std::vector<int>& img) {
  int n = static_cast<int>(img.size());
  std::vector<char> seen(n, 0);
  std::ostringstream os;
  bool any = false;
  for (int v = 0; v < n; ++v) {
    if (seen[v] || img[v] == v) continue;
    os << "(";
    int u = v;
    bool first = true;
    while (!seen[u]) {
      seen[u] = 1;
      if (!first) os << " ";
      os << u;
      first = false;
      u = img[u];
    }
    os << ")";
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace relc

#include "bkmatch/graph.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <stdexcept>
#include <utility>

namespace bkmatch {

using nlohmann::json;

BipartiteGraph::BipartiteGraph(std::vector<std::string> s_names,
                               std::vector<std::string> t_names)
    : s_count_(static_cast<int>(s_names.size())), names_(std::move(s_names)) {
  names_.insert(names_.end(), t_names.begin(), t_names.end());
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) {
    throw std::invalid_argument("duplicate vertex name");
  }
}

int BipartiteGraph::vertex_by_name(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (names_[v] == name) return v;
  }
  return -1;
}

void BipartiteGraph::add_edge(std::string_view s_name, std::string_view t_name,
                              Rat weight) {
  int sv = vertex_by_name(s_name);
  int tv = vertex_by_name(t_name);
  if (sv < 0 || tv < 0 || side(sv) != Side::S || side(tv) != Side::T) {
    throw std::invalid_argument("malformed edge");
  }
  add_edge_ids(sv, tv, std::move(weight));
}

void BipartiteGraph::add_edge_ids(int s_vertex, int t_vertex, Rat weight) {
  if (s_vertex < 0 || s_vertex >= s_count_ || t_vertex < s_count_ ||
      t_vertex >= vertex_count()) {
    throw std::invalid_argument("malformed edge");
  }
  weight.canonicalize();
  if (weight <= 0) throw std::invalid_argument("invalid weight");
  for (const Edge& e : edges_) {
    if (e.s == s_vertex && e.t == t_vertex) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  edges_.push_back(Edge{s_vertex, t_vertex, std::move(weight),
                        static_cast<int>(edges_.size())});
}

bool BipartiteGraph::has_unit_weights() const {
  for (const Edge& e : edges_) {
    if (e.weight != 1) return false;
  }
  return true;
}

Mask BipartiteGraph::mask_of_names(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const std::string& n : names) {
    int v = vertex_by_name(n);
    if (v < 0) throw std::invalid_argument("unknown vertex");
    m |= Mask{1} << v;
  }
  return m;
}

std::string BipartiteGraph::mask_to_names(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int v = 0; v < vertex_count(); ++v) {
    if ((m >> v) & 1u) {
      if (!first) out += ",";
      out += names_[v];
      first = false;
    }
  }
  out += "}";
  return out;
}

BipartiteGraph parse_graph(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception&) {
    throw std::invalid_argument("malformed graph document");
  }
  if (!doc.is_object() || !doc.contains("s") || !doc.contains("t") ||
      !doc["s"].is_array() || !doc["t"].is_array()) {
    throw std::invalid_argument("malformed graph document");
  }
  std::vector<std::string> s_names, t_names;
  for (const auto& v : doc["s"]) s_names.push_back(v.get<std::string>());
  for (const auto& v : doc["t"]) t_names.push_back(v.get<std::string>());
  BipartiteGraph g(std::move(s_names), std::move(t_names));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) {
      throw std::invalid_argument("malformed graph document");
    }
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_string() ||
          !e[1].is_string()) {
        throw std::invalid_argument("malformed edge");
      }
      Rat w(1);
      if (e.size() == 3) {
        if (e[2].is_string()) {
          try {
            w = parse_rational(e[2].get<std::string>());
          } catch (const std::invalid_argument&) {
            throw std::invalid_argument("invalid weight");
          }
        } else if (e[2].is_number_integer()) {
          w = Rat(static_cast<long>(e[2].get<long long>()));
        } else {
          throw std::invalid_argument("invalid weight");
        }
      }
      g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), w);
    }
  }
  return g;
}

std::string serialize_graph(const BipartiteGraph& g) {
  json doc;
  doc["s"] = json::array();
  doc["t"] = json::array();
  for (int v = 0; v < g.s_count(); ++v) doc["s"].push_back(g.vertex_name(v));
  for (int v = g.s_count(); v < g.vertex_count(); ++v) {
    doc["t"].push_back(g.vertex_name(v));
  }
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    json entry = json::array();
    entry.push_back(g.vertex_name(e.s));
    entry.push_back(g.vertex_name(e.t));
    if (e.weight != 1) entry.push_back(rat_to_string(e.weight));
    doc["edges"].push_back(entry);
  }
  return doc.dump();
}

namespace {

std::vector<std::string> numbered_names(char prefix, int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 1; i <= count; ++i) {
    names.push_back(prefix + std::to_string(i));
  }
  return names;
}

}  // namespace

BipartiteGraph graph_from_edge_bits(int s_count, int t_count, Mask edge_bits) {
  BipartiteGraph g(numbered_names('s', s_count), numbered_names('t', t_count));
  for (int i = 0; i < s_count; ++i) {
    for (int j = 0; j < t_count; ++j) {
      if ((edge_bits >> (i * t_count + j)) & 1u) {
        g.add_edge_ids(i, s_count + j);
      }
    }
  }
  return g;
}

std::vector<BipartiteGraph> enumerate_graphs(int s_count, int t_count,
                                             int cap) {
  const long long slots = 1LL * s_count * t_count;
  if (slots > cap) throw std::invalid_argument("sweep too large");
  std::vector<BipartiteGraph> out;
  out.reserve(std::size_t{1} << slots);
  for (Mask bits = 0; bits < (Mask{1} << slots); ++bits) {
    out.push_back(graph_from_edge_bits(s_count, t_count, bits));
  }
  return out;
}

BipartiteGraph random_graph(int s_count, int t_count,
                            const Rat& edge_probability, std::uint64_t seed) {
  if (edge_probability < 0 || edge_probability > 1) {
    throw std::invalid_argument("invalid probability");
  }
  Rng rng(seed);
  Rat p = edge_probability;
  p.canonicalize();
  const mpz_class num = p.get_num();
  const mpz_class den = p.get_den();
  // Probabilities in a verification sweep have small denominators.
  const unsigned long n = num.get_ui();
  const unsigned long d = den.get_ui();
  Mask bits = 0;
  for (int slot = 0; slot < s_count * t_count; ++slot) {
    if (rng.below(d) < n) bits |= Mask{1} << slot;
  }
  return graph_from_edge_bits(s_count, t_count, bits);
}

}  // namespace bkmatch

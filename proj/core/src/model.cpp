#include "lincomp/model.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_set>

#include <json.hpp>

namespace lincomp {

std::string Param::name() const {
  if (row < 10 && col < 10) {
    return "a" + std::to_string(row) + std::to_string(col);
  }
  return "a" + std::to_string(row) + "_" + std::to_string(col);
}

namespace {

std::vector<int> checked_set(std::vector<int> ids, int n, const char* field) {
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (ids[k] < 1 || ids[k] > n) {
      throw ModelError(std::string(field) + "[" + std::to_string(k) + "]",
                       "compartment " + std::to_string(ids[k]) +
                           " out of range 1.." + std::to_string(n));
    }
  }
  std::sort(ids.begin(), ids.end());
  if (auto dup = std::adjacent_find(ids.begin(), ids.end()); dup != ids.end()) {
    throw ModelError(field, "duplicate compartment " + std::to_string(*dup));
  }
  return ids;
}

bool contains(const std::vector<int>& sorted, int i) {
  return std::binary_search(sorted.begin(), sorted.end(), i);
}

}  // namespace

Model::Model(int n, std::vector<Edge> edges, std::vector<int> inputs,
             std::vector<int> outputs, std::vector<int> leaks)
    : n_(n) {
  if (n < 1) {
    throw ModelError("compartments", "must be at least 1");
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto path = "edges[" + std::to_string(k) + "]";
    for (int end : {edges[k].from, edges[k].to}) {
      if (end < 1 || end > n) {
        throw ModelError(path, "compartment " + std::to_string(end) +
                                   " out of range 1.." + std::to_string(n));
      }
    }
    if (edges[k].from == edges[k].to) {
      throw ModelError(path, "self-edge at compartment " +
                                 std::to_string(edges[k].from));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end()) {
    throw ModelError("edges", "duplicate edge " + std::to_string(dup->from) +
                                  "->" + std::to_string(dup->to));
  }
  edges_ = std::move(edges);
  inputs_ = checked_set(std::move(inputs), n, "in");
  outputs_ = checked_set(std::move(outputs), n, "out");
  leaks_ = checked_set(std::move(leaks), n, "leak");
  if (outputs_.empty()) {
    throw ModelError("out", "outputs empty");
  }
}

bool Model::has_edge(int from, int to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

bool Model::is_input(int i) const { return contains(inputs_, i); }
bool Model::is_output(int i) const { return contains(outputs_, i); }
bool Model::is_leak(int i) const { return contains(leaks_, i); }

std::vector<int> Model::successors(int i) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.from == i) out.push_back(e.to);
  }
  return out;
}

std::vector<int> Model::predecessors(int i) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.to == i) out.push_back(e.from);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParamVector param_vector(const Model& m) {
  ParamVector params;
  params.reserve(m.param_count());
  for (const auto& e : m.edges()) params.push_back(Param::edge(e.from, e.to));
  // Param's own order on edges is (to, from), which is what we want here.
  std::sort(params.begin(), params.end());
  for (int i : m.leaks()) params.push_back(Param::leak(i));
  return params;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

using nlohmann::json;

int require_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    throw ModelError(path, "expected an integer");
  }
  const auto value = v.get<std::int64_t>();
  if (value < INT32_MIN || value > INT32_MAX) {
    throw ModelError(path, "integer out of range");
  }
  return static_cast<int>(value);
}

std::vector<int> require_int_array(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw ModelError(key, "missing required key");
  }
  const json& arr = doc.at(key);
  if (!arr.is_array()) {
    throw ModelError(key, "expected an array");
  }
  std::vector<int> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    out.push_back(
        require_int(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

}  // namespace

Model parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ModelError("", "top level must be an object");
  }
  static const std::unordered_set<std::string> known{"compartments", "edges",
                                                     "in", "out", "leak"};
  for (const auto& item : doc.items()) {
    if (!known.contains(item.key())) {
      throw ModelError(item.key(), "unknown key");
    }
  }
  if (!doc.contains("compartments")) {
    throw ModelError("compartments", "missing required key");
  }
  const int n = require_int(doc.at("compartments"), "compartments");

  if (!doc.contains("edges")) {
    throw ModelError("edges", "missing required key");
  }
  const json& jedges = doc.at("edges");
  if (!jedges.is_array()) {
    throw ModelError("edges", "expected an array");
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < jedges.size(); ++k) {
    const auto path = "edges[" + std::to_string(k) + "]";
    const json& je = jedges[k];
    if (!je.is_object()) {
      throw ModelError(path, "expected an object");
    }
    for (const auto& item : je.items()) {
      if (item.key() != "from" && item.key() != "to") {
        throw ModelError(path + "." + item.key(), "unknown key");
      }
    }
    if (!je.contains("from") || !je.contains("to")) {
      throw ModelError(path, "edge needs both \"from\" and \"to\"");
    }
    edges.push_back(Edge{require_int(je.at("from"), path + ".from"),
                         require_int(je.at("to"), path + ".to")});
  }

  return Model(n, std::move(edges), require_int_array(doc, "in"),
               require_int_array(doc, "out"), require_int_array(doc, "leak"));
}

std::string serialize_model(const Model& m, int indent) {
  nlohmann::ordered_json doc;
  doc["compartments"] = m.n();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : m.edges()) {
    nlohmann::ordered_json je;
    je["from"] = e.from;
    je["to"] = e.to;
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  doc["in"] = m.inputs();
  doc["out"] = m.outputs();
  doc["leak"] = m.leaks();
  return doc.dump(indent);
}

// ---------------------------------------------------------------------------
// Graph predicates

namespace {

// Reachability from `start` inside the vertex subset `mask` (bit i = vertex i).
std::uint64_t reach_within(const Model& m, int start, std::uint64_t mask,
                           bool reverse) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& e : m.edges()) {
      const int src = reverse ? e.to : e.from;
      const int dst = reverse ? e.from : e.to;
      if (src != v) continue;
      const auto bit = std::uint64_t{1} << dst;
      if ((mask & bit) && !(seen & bit)) {
        seen |= bit;
        stack.push_back(dst);
      }
    }
  }
  return seen;
}

bool induced_strongly_connected(const Model& m, std::uint64_t mask, int any) {
  return reach_within(m, any, mask, false) == mask &&
         reach_within(m, any, mask, true) == mask;
}

std::uint64_t all_compartments(const Model& m) {
  std::uint64_t mask = 0;
  for (int i = 1; i <= m.n(); ++i) mask |= std::uint64_t{1} << i;
  return mask;
}

void require_small(const Model& m) {
  if (m.n() > 62) {
    throw std::length_error("graph predicates support at most 62 compartments");
  }
}

}  // namespace

bool is_strongly_connected(const Model& m) {
  require_small(m);
  return induced_strongly_connected(m, all_compartments(m), 1);
}

std::optional<int> distance(const Model& m, int a, int b) {
  std::vector<int> dist(m.n() + 1, -1);
  std::queue<int> queue;
  dist[a] = 0;
  queue.push(a);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    if (v == b) return dist[v];
    for (int w : m.successors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> inductively_strongly_connected_order(
    const Model& m, int root) {
  require_small(m);
  const std::uint64_t full = all_compartments(m);
  // Whether a prefix set can be extended only depends on the set, so failed
  // sets are remembered.
  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order{root};

  auto extend = [&](auto&& self, std::uint64_t chosen) -> bool {
    if (chosen == full) return true;
    if (dead.contains(chosen)) return false;
    for (int v = 1; v <= m.n(); ++v) {
      const auto bit = std::uint64_t{1} << v;
      if (chosen & bit) continue;
      if (!induced_strongly_connected(m, chosen | bit, root)) continue;
      order.push_back(v);
      if (self(self, chosen | bit)) return true;
      order.pop_back();
    }
    dead.insert(chosen);
    return false;
  };

  if (extend(extend, std::uint64_t{1} << root)) return order;
  return std::nullopt;
}

bool is_bidirectional_tree(const Model& m) {
  if (m.edges().size() != 2 * static_cast<std::size_t>(m.n() - 1)) {
    return false;
  }
  for (const auto& e : m.edges()) {
    if (!m.has_edge(e.to, e.from)) return false;
  }
  // n - 1 undirected edges and connected => tree.
  return is_strongly_connected(m);
}

}  // namespace lincomp

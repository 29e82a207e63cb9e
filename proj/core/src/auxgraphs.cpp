#include "lincomp/auxgraphs.hpp"

#include <algorithm>
#include <sstream>

namespace lincomp {

bool AuxGraph::has_node(int v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

std::vector<std::size_t> AuxGraph::out_edges(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (edges[k].from == v) out.push_back(k);
  }
  return out;
}

std::string AuxGraph::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v : nodes) os << "  " << v << ";\n";
  for (const auto& e : edges) {
    os << "  " << e.from << " -> " << e.to << " [label=\"" << e.label.name()
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

AuxGraph leak_augmented(const Model& m) {
  AuxGraph g;
  for (int v = 0; v <= m.n(); ++v) g.nodes.push_back(v);
  for (const auto& e : m.edges()) {
    g.edges.push_back({e.from, e.to, Param::edge(e.from, e.to)});
  }
  for (int j : m.leaks()) g.edges.push_back({j, 0, Param::leak(j)});
  return g;
}

AuxGraph strip_outgoing(const AuxGraph& g, int i) {
  AuxGraph out = g;
  std::erase_if(out.edges, [i](const AuxEdge& e) { return e.from == i; });
  return out;
}

AuxGraph strip_outgoing(const Model& m, int i) {
  return strip_outgoing(leak_augmented(m), i);
}

AuxGraph flip_into_leak(const Model& m, int i) {
  AuxGraph g = strip_outgoing(m, i);
  for (auto& e : g.edges) {
    if (e.to == i) e.to = 0;
  }
  std::erase(g.nodes, i);
  g.allows_multi_edges = true;
  return g;
}

SymMatrix compartmental_matrix(const Model& m) {
  SymMatrix a(m.n());
  for (const auto& e : m.edges()) {
    const Polynomial x = Polynomial::variable(Param::edge(e.from, e.to));
    a.at(e.to, e.from) += x;
    a.at(e.from, e.from) -= x;
  }
  for (int j : m.leaks()) {
    a.at(j, j) -= Polynomial::variable(Param::leak(j));
  }
  return a;
}

SymMatrix star_matrix(const Model& m, int i) {
  SymMatrix a = compartmental_matrix(m);
  for (int r = 1; r <= m.n(); ++r) a.at(r, i) = Polynomial{};
  return a;
}

}  // namespace lincomp

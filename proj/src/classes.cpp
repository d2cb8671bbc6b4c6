#include "fano/classes.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fano {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) {
    x = find(x), y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

int lookup_or_fail(const Catalog& cat, const LatticePolytope& q, const MoveRecord& rec) {
  auto idx = cat.find(canonical_form(q));
  if (!idx)
    throw incomplete_catalog_error("neighbor produced by " + format_move(rec) +
                                   " is missing from the catalog");
  return *idx;
}

}  // namespace

EquivGraph build_graph(const Catalog& cat, Relation relation) {
  EquivGraph g;
  g.relation = relation;
  g.dim = cat.dim;
  for (int i = 0; i < cat.size(); ++i)
    g.nodes.push_back({cat.ids[i], cat.keys[i], cat.entries[i].num_vertices()});
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < cat.size(); ++i) {
    // One removal per edge suffices: every single-move neighbor one vertex
    // up is seen as a removal from the other endpoint.
    auto nbrs = relation == Relation::F ? f_neighbors(cat.entries[i])
                                        : i_removal_neighbors(cat.entries[i]);
    for (auto& [q, rec] : nbrs) {
      int j = lookup_or_fail(cat, q, rec);
      if (seen.insert({std::min(i, j), std::max(i, j)}).second)
        g.edges.push_back({i, j, std::move(rec)});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& e, const auto& f) {
    return std::make_pair(std::min(e.a, e.b), std::max(e.a, e.b)) <
           std::make_pair(std::min(f.a, f.b), std::max(f.a, f.b));
  });
  return g;
}

std::vector<std::vector<int>> components(const EquivGraph& g) {
  UnionFind uf((int)g.nodes.size());
  for (const auto& e : g.edges) uf.unite(e.a, e.b);
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < (int)g.nodes.size(); ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

namespace {

int require_member(const LatticePolytope& p, const Catalog& cat) {
  auto idx = cat.find(canonical_form(p));
  if (!idx) throw precondition_error("polytope is not a catalog entry");
  return *idx;
}

}  // namespace

bool is_F_isolated(const LatticePolytope& p, const Catalog& cat) {
  require_member(p, cat);
  return f_neighbors(p).empty();
}

bool is_I_isolated(const LatticePolytope& p, const Catalog& cat) {
  int self = require_member(p, cat);
  if (!i_removal_neighbors(p).empty()) return false;
  CanonicalKey key = cat.keys[self];
  int m = p.num_vertices();
  for (int i = 0; i < cat.size(); ++i) {
    if (cat.entries[i].num_vertices() != m + 1) continue;
    for (auto& [q, rec] : i_removal_neighbors(cat.entries[i]))
      if (canonical_form(q) == key) return false;
  }
  return true;
}

ClassReport report(const EquivGraph& g) {
  ClassReport rep;
  rep.relation = g.relation;
  auto comps = components(g);
  rep.component_count = (int)comps.size();
  for (const auto& c : comps) rep.component_sizes.push_back((int)c.size());
  std::sort(rep.component_sizes.rbegin(), rep.component_sizes.rend());

  CanonicalKey t_key = canonical_form(make_T(g.dim));
  int t_comp = -1;
  for (int ci = 0; ci < (int)comps.size(); ++ci)
    for (int i : comps[ci])
      if (g.nodes[i].key == t_key) t_comp = ci;
  for (int ci = 0; ci < (int)comps.size(); ++ci) {
    if (ci == t_comp) continue;
    for (int i : comps[ci]) ++rep.non_t_by_nverts[g.nodes[i].nverts];
  }

  std::vector<int> degree(g.nodes.size(), 0);
  for (const auto& e : g.edges) ++degree[e.a], ++degree[e.b];
  for (int i = 0; i < (int)g.nodes.size(); ++i)
    if (degree[i] == 0) rep.isolated_ids.push_back(g.nodes[i].id);
  return rep;
}

std::string export_dot(const EquivGraph& g) {
  std::ostringstream out;
  out << "digraph " << (g.relation == Relation::F ? "F" : "I") << "_classes {\n";
  out << "  edge [dir=none];\n";
  std::map<int, std::vector<int>> by_nverts;
  for (int i = 0; i < (int)g.nodes.size(); ++i) by_nverts[g.nodes[i].nverts].push_back(i);
  for (const auto& [m, members] : by_nverts) {
    out << "  subgraph cluster_v" << m << " {\n    label=\"" << m << " vertices\";\n";
    for (int i : members) out << "    \"" << g.nodes[i].id << "\";\n";
    out << "  }\n";
  }
  for (const auto& e : g.edges)
    out << "  \"" << g.nodes[e.a].id << "\" -> \"" << g.nodes[e.b].id << "\" [label=\""
        << format_move(e.witness) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const EquivGraph& g) {
  nlohmann::json j;
  j["relation"] = g.relation == Relation::F ? "F" : "I";
  j["dim"] = g.dim;
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : g.nodes)
    j["nodes"].push_back({{"id", n.id}, {"key", n.key}, {"nverts", n.nverts}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back(
        {{"a", g.nodes[e.a].id}, {"b", g.nodes[e.b].id}, {"witness", format_move(e.witness)}});
  return j.dump(2);
}

EquivGraph import_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(e.what(), 1);
  }
  EquivGraph g;
  try {
    g.relation = j.at("relation").get<std::string>() == "I" ? Relation::I : Relation::F;
    g.dim = j.at("dim").get<int>();
    std::map<std::string, int> by_id;
    for (const auto& n : j.at("nodes")) {
      by_id[n.at("id").get<std::string>()] = (int)g.nodes.size();
      g.nodes.push_back(
          {n.at("id").get<std::string>(), n.at("key").get<std::string>(), n.at("nverts").get<int>()});
    }
    for (const auto& e : j.at("edges")) {
      auto a = by_id.find(e.at("a").get<std::string>());
      auto b = by_id.find(e.at("b").get<std::string>());
      if (a == by_id.end() || b == by_id.end()) throw parse_error("edge references unknown node", 1);
      g.edges.push_back({a->second, b->second, parse_move(e.at("witness").get<std::string>())});
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(e.what(), 1);
  }
  return g;
}

}  // namespace fano

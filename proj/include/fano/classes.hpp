#pragma once

#include <map>
#include <string>
#include <vector>

#include "fano/catalog.hpp"
#include "fano/moves.hpp"

namespace fano {

enum class Relation { F, I };

// Adjacency graph of single moves over a complete catalog. Nodes are the
// catalog entries; an edge joins vertex counts m and m+1 and carries the
// move (applied to node a) that produced node b.
struct EquivGraph {
  struct Node {
    std::string id;
    CanonicalKey key;
    int nverts = 0;
  };
  struct Edge {
    int a = 0;  // node indices; witness maps entries[a] onto entries[b]'s class
    int b = 0;
    MoveRecord witness;
  };
  Relation relation = Relation::F;
  int dim = 0;
  std::vector<Node> nodes;
  std::vector<Edge> edges;  // sorted by unordered pair, no duplicates
};

struct ClassReport {
  Relation relation = Relation::F;
  int component_count = 0;
  std::vector<int> component_sizes;        // descending
  std::map<int, int> non_t_by_nverts;      // members outside T^n's component
  std::vector<std::string> isolated_ids;   // degree-0 nodes, catalog order
};

// Throws incomplete_catalog_error when a generated neighbor has no catalog
// entry; a silent miss would fabricate components.
EquivGraph build_graph(const Catalog& cat, Relation relation);

// Connected components as node-index lists; components ordered by smallest
// member, members ascending.
std::vector<std::vector<int>> components(const EquivGraph& g);

// Singleton-component tests against a complete catalog; throw
// precondition_error if p is not a catalog entry.
bool is_F_isolated(const LatticePolytope& p, const Catalog& cat);
bool is_I_isolated(const LatticePolytope& p, const Catalog& cat);

ClassReport report(const EquivGraph& g);

std::string export_dot(const EquivGraph& g);
std::string export_json(const EquivGraph& g);
EquivGraph import_json(const std::string& text);

}  // namespace fano

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fano/classes.hpp"
#include "fano/moves.hpp"

using namespace fano;

namespace {

// Re-apply an edge's witness move to its source node and check it lands in
// the target node's class.
void check_edge_witness(const EquivGraph& g, const Catalog& cat) {
  for (const auto& e : g.edges) {
    const LatticePolytope& src = cat.entries[e.a];
    MoveResult r;
    switch (e.witness.kind) {
      case MoveRecord::Kind::f_add: r = stellar_add(src, *e.witness.face); break;
      case MoveRecord::Kind::f_remove: r = stellar_remove(src, e.witness.witness); break;
      case MoveRecord::Kind::i_add: r = i_add(src, e.witness.witness); break;
      case MoveRecord::Kind::i_remove: r = i_remove(src, e.witness.witness); break;
    }
    REQUIRE(r.has_value());
    CHECK(canonical_form(r->first) == g.nodes[e.b].key);
  }
}

std::set<std::pair<int, int>> edge_pairs(const EquivGraph& g) {
  std::set<std::pair<int, int>> out;
  for (const auto& e : g.edges) out.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
  return out;
}

}  // namespace

TEST_CASE("dim 2: both graphs are a single component over the 5 classes") {
  auto [cat, box] = enumerate_stable(2);
  REQUIRE(cat.size() == 5);
  for (Relation rel : {Relation::F, Relation::I}) {
    auto g = build_graph(cat, rel);
    CHECK(g.dim == 2);
    CHECK(g.nodes.size() == 5);
    CHECK(components(g).size() == 1);
    check_edge_witness(g, cat);
    auto rep = report(g);
    CHECK(rep.component_count == 1);
    CHECK(rep.component_sizes == std::vector<int>{5});
    CHECK(rep.non_t_by_nverts.empty());
    CHECK(rep.isolated_ids.empty());
  }
}

TEST_CASE("dim 3: 18 classes, single component, F edges are I edges") {
  auto [cat, box] = enumerate_stable(3);
  REQUIRE(cat.size() == 18);
  auto gf = build_graph(cat, Relation::F);
  auto gi = build_graph(cat, Relation::I);
  CHECK(components(gf).size() == 1);
  CHECK(components(gi).size() == 1);
  check_edge_witness(gf, cat);
  check_edge_witness(gi, cat);
  // a stellar move is in particular a vertex insertion/deletion
  auto fp = edge_pairs(gf), ip = edge_pairs(gi);
  CHECK(std::includes(ip.begin(), ip.end(), fp.begin(), fp.end()));
  // edges only join consecutive vertex counts
  for (const auto& e : gi.edges)
    CHECK(std::abs(gi.nodes[e.a].nverts - gi.nodes[e.b].nverts) == 1);
  for (int i = 0; i < cat.size(); ++i) {
    CHECK_FALSE(is_F_isolated(cat.entries[i], cat));
    CHECK_FALSE(is_I_isolated(cat.entries[i], cat));
  }
}

TEST_CASE("graph edges are deduplicated and sorted by unordered pair") {
  auto [cat, box] = enumerate_stable(2);
  auto g = build_graph(cat, Relation::I);
  std::set<std::pair<int, int>> seen;
  std::pair<int, int> prev{-1, -1};
  for (const auto& e : g.edges) {
    auto pr = std::make_pair(std::min(e.a, e.b), std::max(e.a, e.b));
    CHECK(seen.insert(pr).second);
    CHECK(prev < pr);
    prev = pr;
  }
}

TEST_CASE("incomplete catalog is rejected, not silently truncated") {
  Catalog cat;
  cat.dim = 2;
  auto t2 = make_T(2);
  catalog_insert(cat, t2, canonical_form(t2), "t2");
  // f_neighbors(T^2) reaches the 4-vertex blow-up, which is absent
  CHECK_THROWS_AS(build_graph(cat, Relation::F), incomplete_catalog_error);
  // the 4-gon's only removal lands on T^2, absent here
  Catalog cat2;
  cat2.dim = 2;
  LatticePolytope dp(2, {{1, 0}, {0, 1}, {-1, -1}, {0, -1}});
  catalog_insert(cat2, dp, canonical_form(dp), "dp7");
  CHECK_THROWS_AS(build_graph(cat2, Relation::I), incomplete_catalog_error);
}

TEST_CASE("isolation predicates require catalog membership") {
  auto [cat, box] = enumerate_stable(2);
  CHECK_THROWS_AS(is_F_isolated(make_T(3), cat), precondition_error);
  CHECK_THROWS_AS(is_I_isolated(make_T(3), cat), precondition_error);
}

TEST_CASE("json export/import round trip") {
  auto [cat, box] = enumerate_stable(2);
  auto g = build_graph(cat, Relation::I);
  auto g2 = import_json(export_json(g));
  CHECK(g2.relation == g.relation);
  CHECK(g2.dim == g.dim);
  REQUIRE(g2.nodes.size() == g.nodes.size());
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    CHECK(g2.nodes[i].id == g.nodes[i].id);
    CHECK(g2.nodes[i].key == g.nodes[i].key);
    CHECK(g2.nodes[i].nverts == g.nodes[i].nverts);
  }
  REQUIRE(g2.edges.size() == g.edges.size());
  for (size_t i = 0; i < g.edges.size(); ++i) {
    CHECK(g2.edges[i].a == g.edges[i].a);
    CHECK(g2.edges[i].b == g.edges[i].b);
    CHECK(format_move(g2.edges[i].witness) == format_move(g.edges[i].witness));
  }
  CHECK_THROWS_AS(import_json("not json"), parse_error);
  CHECK_THROWS_AS(import_json("{\"relation\":\"I\"}"), parse_error);
}

TEST_CASE("dot export names every node and edge") {
  auto [cat, box] = enumerate_stable(2);
  auto g = build_graph(cat, Relation::F);
  auto dot = export_dot(g);
  CHECK(dot.find("digraph F_classes") != std::string::npos);
  CHECK(dot.find("edge [dir=none]") != std::string::npos);
  for (const auto& n : g.nodes) CHECK(dot.find("\"" + n.id + "\"") != std::string::npos);
  size_t arrows = 0;
  for (size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++arrows;
  CHECK(arrows == g.edges.size());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include <fano.h>
#include <json.hpp>

namespace {

struct PolyHolder {
  fano_polytope* p = nullptr;
  ~PolyHolder() { fano_polytope_free(p); }
};

struct StrHolder {
  char* s = nullptr;
  ~StrHolder() { fano_string_free(s); }
};

}  // namespace

TEST_CASE("polytope construction, accessors, predicates") {
  const long long coords[] = {1, 0, 0, 1, -1, -1};
  PolyHolder h;
  REQUIRE(fano_polytope_from_vertices(2, 3, coords, &h.p) == FANO_OK);
  CHECK(fano_polytope_dim(h.p) == 2);
  CHECK(fano_polytope_num_vertices(h.p) == 3);
  long long v[2];
  REQUIRE(fano_polytope_vertex(h.p, 2, v) == FANO_OK);
  CHECK(v[0] == -1);
  CHECK(v[1] == -1);
  CHECK(fano_polytope_vertex(h.p, 3, v) == FANO_ERR_INPUT);

  int b = -1;
  CHECK(fano_polytope_is_smooth_fano(h.p, &b) == FANO_OK);
  CHECK(b == 1);
  CHECK(fano_polytope_is_reflexive(h.p, &b) == FANO_OK);
  CHECK(b == 1);
  CHECK(fano_polytope_is_simplicial(h.p, &b) == FANO_OK);
  CHECK(b == 1);
  CHECK(fano_polytope_is_pseudo_symmetric(h.p, &b) == FANO_OK);
  CHECK(b == 0);
}

TEST_CASE("invalid input surfaces an error message") {
  fano_polytope* p = nullptr;
  const long long dup[] = {1, 0, 1, 0, 0, 1};
  CHECK(fano_polytope_from_vertices(2, 3, dup, &p) == FANO_ERR_INPUT);
  CHECK(p == nullptr);
  CHECK(std::strlen(fano_last_error()) > 0);
  CHECK(fano_polytope_from_vertices(0, 1, dup, &p) == FANO_ERR_INPUT);
  CHECK(fano_polytope_parse("garbage", &p) == FANO_ERR_INPUT);
  CHECK(std::string(fano_last_error()).find("line") != std::string::npos);
}

TEST_CASE("text round trip and canonical keys") {
  PolyHolder t2, other;
  REQUIRE(fano_make_T(2, &t2.p) == FANO_OK);
  StrHolder text;
  REQUIRE(fano_polytope_to_text(t2.p, "t2", &text.s) == FANO_OK);
  REQUIRE(fano_polytope_parse(text.s, &other.p) == FANO_OK);
  int eq = 0;
  REQUIRE(fano_equivalent(t2.p, other.p, &eq) == FANO_OK);
  CHECK(eq == 1);

  StrHolder k1, k2;
  REQUIRE(fano_polytope_canonical_key(t2.p, &k1.s) == FANO_OK);
  REQUIRE(fano_polytope_canonical_key(other.p, &k2.s) == FANO_OK);
  CHECK(std::string(k1.s) == k2.s);

  PolyHolder t3;
  REQUIRE(fano_make_T(3, &t3.p) == FANO_OK);
  CHECK(fano_equivalent(t2.p, t3.p, &eq) == FANO_ERR_INPUT);
}

TEST_CASE("constructions") {
  PolyHolder v, vt, pic3, iso, fam, rem, sum;
  REQUIRE(fano_make_V(4, &v.p) == FANO_OK);
  CHECK(fano_polytope_num_vertices(v.p) == 10);
  REQUIRE(fano_make_V_tilde(4, &vt.p) == FANO_OK);
  CHECK(fano_polytope_num_vertices(vt.p) == 9);
  CHECK(fano_make_V(3, &v.p) == FANO_ERR_INPUT);  /* odd dimension */
  REQUIRE(fano_make_isolated_pic3(2, 2, &pic3.p) == FANO_OK);
  CHECK(fano_polytope_dim(pic3.p) == 5);
  REQUIRE(fano_make_isolated(6, 4, &iso.p) == FANO_OK);
  CHECK(fano_polytope_dim(iso.p) == 6);
  const int l[] = {2};
  REQUIRE(fano_make_family(2, 1, 1, l, &fam.p) == FANO_OK);
  CHECK(fano_polytope_dim(fam.p) == 5);
  REQUIRE(fano_make_remark_7d(&rem.p) == FANO_OK);
  CHECK(fano_polytope_dim(rem.p) == 7);
  CHECK(fano_polytope_num_vertices(rem.p) == 15);
  PolyHolder t1a, t1b;
  REQUIRE(fano_make_T(1, &t1a.p) == FANO_OK);
  REQUIRE(fano_make_T(1, &t1b.p) == FANO_OK);
  REQUIRE(fano_free_sum(t1a.p, t1b.p, &sum.p) == FANO_OK);
  CHECK(fano_polytope_dim(sum.p) == 2);
  CHECK(fano_polytope_num_vertices(sum.p) == 4);
}

TEST_CASE("relations text and pattern matching") {
  PolyHolder t2;
  REQUIRE(fano_make_T(2, &t2.p) == FANO_OK);
  StrHolder rel;
  REQUIRE(fano_relations_text(t2.p, &rel.s) == FANO_OK);
  CHECK(std::string(rel.s).find("degree=3") != std::string::npos);

  PolyHolder pic3;
  REQUIRE(fano_make_isolated_pic3(2, 2, &pic3.p) == FANO_OK);
  int matched = -1;
  StrHolder desc;
  REQUIRE(fano_match_pattern(pic3.p, "isolated", &matched, &desc.s) == FANO_OK);
  CHECK(matched == 1);
  matched = -1;
  StrHolder desc2;
  REQUIRE(fano_match_pattern(t2.p, "isolated", &matched, &desc2.s) == FANO_OK);
  CHECK(matched == 0);
  CHECK(fano_match_pattern(t2.p, "bogus", &matched, &desc2.s) == FANO_ERR_INPUT);
}

TEST_CASE("bounded isolation") {
  PolyHolder pic3, t2;
  REQUIRE(fano_make_isolated_pic3(2, 2, &pic3.p) == FANO_OK);
  REQUIRE(fano_make_T(2, &t2.p) == FANO_OK);
  int b = -1;
  REQUIRE(fano_is_isolated_boxed(pic3.p, FANO_RELATION_F, 2, &b) == FANO_OK);
  CHECK(b == 1);
  REQUIRE(fano_is_isolated_boxed(pic3.p, FANO_RELATION_I, 2, &b) == FANO_OK);
  CHECK(b == 1);
  REQUIRE(fano_is_isolated_boxed(t2.p, FANO_RELATION_F, 2, &b) == FANO_OK);
  CHECK(b == 0);
  REQUIRE(fano_is_isolated_boxed(t2.p, FANO_RELATION_I, 2, &b) == FANO_OK);
  CHECK(b == 0);
}

TEST_CASE("enumeration, catalog access, graph reports") {
  long long box = 0;
  fano_catalog* cat = nullptr;
  REQUIRE(fano_enumerate(2, 0, 0, &box, &cat) == FANO_OK);
  CHECK(fano_catalog_size(cat) == 5);
  CHECK(fano_catalog_dim(cat) == 2);
  CHECK(box >= 1);

  PolyHolder e0;
  REQUIRE(fano_catalog_entry(cat, 0, &e0.p) == FANO_OK);
  StrHolder id0;
  REQUIRE(fano_catalog_id(cat, 0, &id0.s) == FANO_OK);
  CHECK(std::strlen(id0.s) > 0);
  int idx = -1;
  REQUIRE(fano_catalog_find(cat, e0.p, &idx) == FANO_OK);
  CHECK(idx == 0);
  PolyHolder t3;
  REQUIRE(fano_make_T(3, &t3.p) == FANO_OK);
  REQUIRE(fano_catalog_find(cat, t3.p, &idx) == FANO_OK);
  CHECK(idx == -1);

  char tmpl[] = "/tmp/capi_cat_XXXXXX";
  REQUIRE(mkstemp(tmpl) >= 0);
  REQUIRE(fano_catalog_save(cat, tmpl) == FANO_OK);
  fano_catalog* cat2 = nullptr;
  REQUIRE(fano_catalog_load(tmpl, &cat2) == FANO_OK);
  CHECK(fano_catalog_size(cat2) == 5);
  CHECK(fano_catalog_load("/nonexistent/path", &cat2) == FANO_ERR_INPUT);

  fano_graph* g = nullptr;
  REQUIRE(fano_graph_build(cat, FANO_RELATION_I, &g) == FANO_OK);
  StrHolder dot, gj, rj;
  REQUIRE(fano_graph_dot(g, &dot.s) == FANO_OK);
  CHECK(std::string(dot.s).find("digraph I_classes") != std::string::npos);
  REQUIRE(fano_graph_json(g, &gj.s) == FANO_OK);
  auto parsed = nlohmann::json::parse(gj.s);
  CHECK(parsed.at("nodes").size() == 5);
  REQUIRE(fano_graph_report_json(g, &rj.s) == FANO_OK);
  auto rep = nlohmann::json::parse(rj.s);
  CHECK(rep.at("relation") == "I");
  CHECK(rep.at("component_count") == 1);
  CHECK(rep.at("component_sizes") == nlohmann::json::array({5}));
  CHECK(rep.at("isolated_ids").empty());

  int b = -1;
  PolyHolder t2;
  REQUIRE(fano_make_T(2, &t2.p) == FANO_OK);
  REQUIRE(fano_is_isolated_in_catalog(t2.p, cat, FANO_RELATION_F, &b) == FANO_OK);
  CHECK(b == 0);
  CHECK(fano_is_isolated_in_catalog(t3.p, cat, FANO_RELATION_F, &b) == FANO_ERR_INPUT);

  fano_graph_free(g);
  fano_catalog_free(cat2);
  fano_catalog_free(cat);
}

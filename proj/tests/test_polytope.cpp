#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fano/catalog.hpp"
#include "fano/polytope.hpp"
#include "helpers.hpp"

using namespace fano;

namespace {

LatticePolytope square_fano() {
  // del Pezzo degree-7 surface polygon and its friends live elsewhere;
  // this is the 2-cube-like smooth Fano square conv(+-e1, +-e2)? No: that
  // is the cross-polytope. Here: conv((1,0),(0,1),(-1,0),(0,-1)).
  return LatticePolytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

LatticePolytope del_pezzo_4gon() {
  return LatticePolytope(2, {{1, 0}, {0, 1}, {1, 1}, {-1, -1}});
}

}  // namespace

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(LatticePolytope(2, {{1, 0}, {1, 0}, {0, 1}}), validation_error);  // repeated
  CHECK_THROWS_AS(LatticePolytope(2, {{1, 0, 0}, {0, 1, 0}}), validation_error);    // dim mismatch
  CHECK_THROWS_AS(LatticePolytope(2, {{1, 0}, {2, 0}, {-1, 0}}), validation_error); // not full-dim
  CHECK_THROWS_AS(LatticePolytope(0, {}), error);
}

TEST_CASE("simplex facets") {
  auto t2 = make_T(2);
  const auto& fs = t2.facets();
  REQUIRE(fs.size() == 3);
  for (const auto& f : fs) {
    CHECK(f.level == 1);
    CHECK(f.vertex_indices.size() == 2);
    // every other vertex strictly below the facet level
    for (int i = 0; i < 3; ++i) {
      Int v = dot(f.normal, t2.vertices()[i]);
      if (std::find(f.vertex_indices.begin(), f.vertex_indices.end(), i) ==
          f.vertex_indices.end())
        CHECK(v < 1);
      else
        CHECK(v == 1);
    }
  }
  CHECK(t2.has_interior_origin());
  CHECK(t2.is_simplicial());
  CHECK_FALSE(t2.has_non_vertex_point());
  CHECK(t2.is_reflexive());
  CHECK(t2.is_smooth_fano());
}

TEST_CASE("facet count oracles") {
  // cross-polytope in dim n has 2^n facets; simplex has n+1
  for (int n = 1; n <= 4; ++n) {
    CHECK(make_T(n).facets().size() == (size_t)n + 1);
    std::vector<Vec> verts;
    for (int i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      verts.push_back(e);
      verts.push_back(negate(e));
    }
    LatticePolytope cross(n, std::move(verts));
    CHECK(cross.facets().size() == (size_t)1 << n);
    CHECK(cross.is_smooth_fano());
  }
}

TEST_CASE("non-vertex point detection") {
  LatticePolytope p(2, {{1, 0}, {0, 1}, {-1, -1}, {0, 0}});
  CHECK(p.has_non_vertex_point());
  CHECK_THROWS_AS(p.facets(), non_vertex_error);
  CHECK_FALSE(p.is_smooth_fano());
  // midpoint of an edge
  LatticePolytope q(2, {{2, 0}, {1, 0}, {0, 2}, {-1, -1}});
  CHECK(q.has_non_vertex_point());
}

TEST_CASE("non-simplicial cube") {
  std::vector<Vec> verts;
  for (int s = 0; s < 8; ++s)
    verts.push_back({s & 1 ? 1 : -1, s & 2 ? 1 : -1, s & 4 ? 1 : -1});
  LatticePolytope cube(3, std::move(verts));
  CHECK_FALSE(cube.is_simplicial());
  CHECK(cube.is_reflexive());
  CHECK_FALSE(cube.is_smooth_fano());
}

TEST_CASE("reflexive but not smooth") {
  // weighted-projective-plane style triangle: all facets at level 1, but
  // the facet basis {(1,0),(-1,-2)} has determinant -2
  LatticePolytope p(2, {{1, 0}, {0, 1}, {-1, -2}});
  CHECK(p.has_interior_origin());
  CHECK(p.is_reflexive());
  CHECK_FALSE(p.is_smooth_fano());
}

TEST_CASE("pseudo-symmetry") {
  CHECK(square_fano().is_pseudo_symmetric());
  LatticePolytope hexagon(2, {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}});
  CHECK(hexagon.is_pseudo_symmetric());
  CHECK_FALSE(del_pezzo_4gon().is_pseudo_symmetric());
  CHECK_FALSE(make_T(2).is_pseudo_symmetric());
  CHECK_FALSE(make_T(3).is_pseudo_symmetric());
}

TEST_CASE("vertex lookup") {
  auto t2 = make_T(2);
  CHECK(t2.contains_vertex({1, 0}));
  CHECK_FALSE(t2.contains_vertex({1, 1}));
  CHECK(t2.vertex_index({-1, -1}) == 2);
  CHECK_FALSE(t2.vertex_index({5, 5}));
}

TEST_CASE("canonical form separates and identifies") {
  auto t2 = make_T(2);
  auto sq = square_fano();
  auto dp = del_pezzo_4gon();
  CHECK(canonical_form(t2) != canonical_form(sq));
  CHECK(canonical_form(sq) != canonical_form(dp));
  // vertex order must not matter
  LatticePolytope t2_shuffled(2, {{-1, -1}, {1, 0}, {0, 1}});
  CHECK(canonical_form(t2) == canonical_form(t2_shuffled));
  CHECK_THROWS_AS(canonical_form(LatticePolytope(2, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})),
                  precondition_error);
}

TEST_CASE("canonical form: unimodular invariance randomized") {
  std::mt19937 rng(23);
  std::vector<LatticePolytope> ps = {make_T(2), square_fano(), del_pezzo_4gon(), make_T(3),
                                     make_T(4), make_V(4), make_V_tilde(4)};
  for (const auto& p : ps) {
    auto key = canonical_form(p);
    for (int trial = 0; trial < 25; ++trial) {
      auto u = fano::testing::random_unimodular(p.dim(), rng);
      CHECK(canonical_form(apply_map(u, p)) == key);
    }
  }
}

TEST_CASE("canonical form: tied search branches agree") {
  // equivalent pair whose facet-pairing search forks on tied columns; the
  // fork must keep the lexicographically smallest pairing across branches,
  // not the first one reached
  LatticePolytope a(4, {{1, 0, 0, 0},
                        {0, 1, 0, 0},
                        {0, 0, 1, 0},
                        {0, 0, 0, 1},
                        {-1, -1, -1, -1},
                        {0, -1, -1, -1},
                        {0, 0, -1, -1},
                        {0, -1, 0, 0},
                        {0, 0, 1, 1}});
  LatticePolytope b(4, {{1, 0, 0, 0},
                        {0, 1, 0, 0},
                        {0, 0, 1, 0},
                        {0, 0, 0, 1},
                        {-1, -1, -1, -1},
                        {0, -1, -1, -1},
                        {0, 0, 0, -1},
                        {0, 1, 1, 0},
                        {0, -1, -1, 0}});
  CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("unimodular equivalence decision") {
  auto t2 = make_T(2);
  std::mt19937 rng(29);
  auto u = fano::testing::random_unimodular(2, rng);
  CHECK(are_unimodularly_equivalent(t2, apply_map(u, t2)));
  CHECK_FALSE(are_unimodularly_equivalent(t2, square_fano()));
  CHECK_THROWS_AS(are_unimodularly_equivalent(make_T(2), make_T(3)), dimension_error);
}

TEST_CASE("embed_subset") {
  auto t2 = make_T(2);
  auto dp = del_pezzo_4gon();
  // T^2's vertex set embeds into the del Pezzo 4-gon
  auto u = embed_subset(t2, dp);
  REQUIRE(u);
  for (const auto& v : t2.vertices()) CHECK(dp.contains_vertex(u->apply(v)));
  // but not into the square
  CHECK_FALSE(embed_subset(t2, square_fano()));
  // identity case
  CHECK(embed_subset(t2, t2));
}

TEST_CASE("free sum") {
  auto seg = make_T(1);
  auto sq = free_sum(seg, seg);
  CHECK(sq.dim() == 2);
  CHECK(sq.num_vertices() == 4);
  CHECK(are_unimodularly_equivalent(sq, square_fano()));
  CHECK(free_sum(seg, make_T(2)).is_smooth_fano());
}

TEST_CASE("apply_map") {
  std::mt19937 rng(31);
  auto t3 = make_T(3);
  auto u = fano::testing::random_unimodular(3, rng);
  auto q = apply_map(u, t3);
  CHECK(q.num_vertices() == t3.num_vertices());
  CHECK(q.is_smooth_fano());
}

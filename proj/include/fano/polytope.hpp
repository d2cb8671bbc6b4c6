#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fano/lattice.hpp"

namespace fano {

// A supporting hyperplane {x : <normal, x> = level} spanned by >= dim
// listed points; exactly dim for simplicial facets. normal is primitive,
// every other vertex lies strictly below level.
struct Facet {
  std::vector<int> vertex_indices;  // sorted
  Vec normal;
  Int level = 0;
};

struct non_vertex_error : validation_error {
  using validation_error::validation_error;
};
struct non_simplicial_error : validation_error {
  using validation_error::validation_error;
};

// Total-order-comparable encoding of a unimodular equivalence class.
using CanonicalKey = std::string;

class LatticePolytope {
 public:
  // Validates: vertices distinct, matching dimension, full-dimensional.
  LatticePolytope(int dim, std::vector<Vec> vertices);

  LatticePolytope(const LatticePolytope& other);
  LatticePolytope(LatticePolytope&& other) noexcept;
  LatticePolytope& operator=(const LatticePolytope& other);
  LatticePolytope& operator=(LatticePolytope&& other) noexcept;

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return verts_; }
  int num_vertices() const { return (int)verts_.size(); }

  // Complete facet list. Throws non_vertex_error if a listed point lies
  // strictly inside the hull. Non-simplicial supporting hyperplanes are
  // reported as facets with more than dim vertices.
  const std::vector<Facet>& facets() const;

  // Hull diagnostics (force facet computation, never throw).
  bool has_interior_origin() const;
  bool is_simplicial() const;
  bool has_non_vertex_point() const;

  bool is_reflexive() const;
  bool is_smooth_fano() const;
  bool is_pseudo_symmetric() const;

  // Bitmask (over vertex indices) per facet, parallel to facets().
  const std::vector<uint32_t>& facet_masks() const;

  bool contains_vertex(const Vec& v) const;
  std::optional<int> vertex_index(const Vec& v) const;

 private:
  struct Hull;
  void ensure_hull() const;

  int dim_;
  std::vector<Vec> verts_;
  mutable std::mutex hull_mu_;
  mutable std::shared_ptr<const Hull> hull_;  // one-time idempotent fill
};

// Canonical key; precondition is_smooth_fano (precondition_error otherwise).
CanonicalKey canonical_form(const LatticePolytope& p);

bool are_unimodularly_equivalent(const LatticePolytope& p, const LatticePolytope& q);

// A unimodular u with u * V(p) a subset of V(q), if any. Complete search:
// the first facet basis of p is mapped onto every ordered Z-basis drawn
// from V(q).
std::optional<UnimodularMap> embed_subset(const LatticePolytope& p, const LatticePolytope& q);

LatticePolytope free_sum(const LatticePolytope& p, const LatticePolytope& q);

LatticePolytope apply_map(const UnimodularMap& u, const LatticePolytope& p);

}  // namespace fano

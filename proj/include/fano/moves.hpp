#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fano/catalog.hpp"
#include "fano/polytope.hpp"

namespace fano {

struct MoveRecord {
  enum class Kind { f_add, f_remove, i_add, i_remove };
  Kind kind;
  Vec witness;                            // the lattice point added or removed
  std::optional<std::vector<int>> face;   // for f_add: the subdivided face, as
                                          // vertex indices of the source polytope
};

// `F-add w=(1,1) F={0,1}` style audit line, and its inverse.
std::string format_move(const MoveRecord& rec);
MoveRecord parse_move(const std::string& text);  // throws parse_error

using MoveResult = std::optional<std::pair<LatticePolytope, MoveRecord>>;

// Stellar subdivision at the proper face given by vertex indices of p.
// Succeeds only if the result q is smooth Fano with V(q) = V(p) ∪ {w},
// w = Σ_{v∈face} v, and the facets of q through w are exactly
// {conv({w} ∪ (V(F')\{v})) : F' facet ⊇ face, v ∈ face}.
MoveResult stellar_add(const LatticePolytope& p, const std::vector<int>& face);

// Inverse operation: drop the vertex w; accepted only when the result q is
// smooth Fano with vertex set exactly V(p)\{w} and some stellar_add on q
// reproduces p with witness w.
MoveResult stellar_remove(const LatticePolytope& p, const Vec& w);

// Vertex insertion/deletion without the stellar facet condition.
MoveResult i_add(const LatticePolytope& p, const Vec& w);
MoveResult i_remove(const LatticePolytope& p, const Vec& v);

// All stellar moves from p (adds over every proper face, removes over every
// vertex), deduplicated by canonical form.
std::vector<std::pair<LatticePolytope, MoveRecord>> f_neighbors(const LatticePolytope& p);

// All successful i_remove results; complete.
std::vector<std::pair<LatticePolytope, MoveRecord>> i_removal_neighbors(const LatticePolytope& p);

// All successful i_add over primitive points in [-B, B]^n outside p.
// Semi-decision: complete only up to the box.
std::vector<std::pair<LatticePolytope, MoveRecord>> i_addition_search(const LatticePolytope& p,
                                                                      Int box_bound);

// Exact I-adjacency within a complete catalog: ids one vertex up that contain
// p, plus ids one vertex down contained in p. Throws precondition_error if p
// is not a catalog entry.
std::vector<std::string> i_neighbors_in_catalog(const LatticePolytope& p, const Catalog& cat);

}  // namespace fano

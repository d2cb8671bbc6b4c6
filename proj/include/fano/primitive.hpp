#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/catalog.hpp"
#include "fano/polytope.hpp"

namespace fano {

struct inconsistency_error : error {
  using error::error;
};

// A minimal non-face A with its primitive relation
// sum_{x in A} x = sum rhs_i * generator_i and degree |A| - sum rhs_i.
struct PrimitiveCollection {
  std::vector<int> members;  // sorted generator indices
  std::map<int, Int> rhs;    // generator index -> positive coefficient
  Int degree = 0;
};

Int degree(const PrimitiveCollection& pc);

struct SimplicialCompleteFan {
  // Validates: rays primitive and distinct, max cones simplicial and
  // independent, every ridge shared by exactly two cones lying on
  // opposite sides, sample points covered.
  SimplicialCompleteFan(std::vector<Vec> rays, std::vector<std::vector<int>> max_cones);

  int dim() const { return dim_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& max_cones() const { return cones_; }
  bool is_nonsingular() const { return nonsingular_; }

 private:
  int dim_;
  std::vector<Vec> rays_;
  std::vector<std::vector<int>> cones_;
  bool nonsingular_;
};

bool is_face(const LatticePolytope& p, const std::vector<int>& s);

// The unique minimal cone containing x, as (generator indices, positive
// coefficients). x must be nonzero.
std::pair<std::vector<int>, std::vector<Int>> locate_in_fan(const LatticePolytope& p, const Vec& x);

std::vector<PrimitiveCollection> primitive_collections(const LatticePolytope& p);
std::vector<PrimitiveCollection> primitive_collections(const SimplicialCompleteFan& fan);

bool check_fano_by_degrees(const SimplicialCompleteFan& fan);
bool check_fano_by_degrees(const LatticePolytope& p);

// n+2 vertices: the two-relation shape of the classification.
struct Pic2Pattern {
  int k = 0;
  std::vector<int> zero_part;  // k vertex indices with sum 0
  std::vector<Int> a;          // coefficients over zero_part, a_i >= 0
};
Pic2Pattern classify_pic2(const LatticePolytope& p);

// n+3 vertices: either three disjoint collections or the five-relation
// display with parts (p_0..p_4).
struct Pic3Pattern {
  enum class Case { three_disjoint, five_collections };
  Case kind = Case::three_disjoint;
  std::array<int, 5> p{};
  std::vector<Int> c;  // coefficients over z_2..z_{p2}
  std::vector<Int> d;  // coefficients over t_1..t_{p3}
  std::map<int, std::string> roles;
};
Pic3Pattern classify_pic3(const LatticePolytope& p);

struct IsolatedMatch {
  Int a = 0, b = 0;
  std::map<int, std::string> roles;
};
std::optional<IsolatedMatch> match_isolated_pattern(const LatticePolytope& p);

struct FamilyMatch {
  FamilyParams params;
  std::map<int, std::string> roles;
};
std::optional<FamilyMatch> match_family_pattern(const LatticePolytope& p);

bool verify_extension_lemma(const LatticePolytope& p);

// `v1 + v2 + y1 + y2 = 3 t` style; names indexed by vertex.
std::string format_relation(const PrimitiveCollection& pc, const std::vector<std::string>& names);
std::vector<std::string> default_vertex_names(int count);
std::vector<std::string> role_names_or_default(int count, const std::map<int, std::string>& roles);

}  // namespace fano

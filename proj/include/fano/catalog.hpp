#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fano/polytope.hpp"

namespace fano {

// Parameters of the I-isolated family construction. k == 0 is the
// n+3-vertex case (then b >= 2 and alpha is empty); for k >= 1 every
// alpha slot names one of y_1..y_b, u_1..u_b and the slots jointly cover
// all 2b of them.
struct FamilyParams {
  struct Alpha {
    bool is_u = false;
    int q = 1;  // 1-based
    bool operator==(const Alpha&) const = default;
  };
  Int a = 2;
  Int b = 1;
  int k = 0;
  std::vector<int> l;                     // k entries, each >= 1
  std::vector<std::vector<Alpha>> alpha;  // alpha[j] has l[j] slots

  void validate() const;  // throws validation_error
  int dimension() const;
  int vertex_count() const;
};

// Round-robin slot assignment over y_1,u_1,...,y_b,u_b; requires
// sum(l) >= 2b so the image covers every symbol.
std::vector<std::vector<FamilyParams::Alpha>> default_alpha(Int b, const std::vector<int>& l);

LatticePolytope make_T(int n);
LatticePolytope make_V(int two_k);
LatticePolytope make_V_tilde(int two_k);
LatticePolytope make_isolated_pic3(Int a, Int b);
LatticePolytope make_family(const FamilyParams& params);
FamilyParams isolated_params(int n, int rho);
LatticePolytope make_remark_example_7d();

struct Catalog {
  int dim = 0;
  std::vector<LatticePolytope> entries;
  std::vector<CanonicalKey> keys;  // parallel, pairwise distinct
  std::vector<std::string> ids;

  int size() const { return (int)entries.size(); }
  std::optional<int> find(const CanonicalKey& key) const;

 private:
  mutable std::map<CanonicalKey, int> index_;
};

// Adds entry if its class is new; returns its index either way.
int catalog_insert(Catalog& cat, LatticePolytope p, const CanonicalKey& key, std::string id);

// Line-oriented text format: per record a header
//   dim <n> vertices <m> id <id>
// followed by m lines of n integers; records separated by blank lines.
Catalog parse_catalog(std::istream& in);
Catalog load_catalog(const std::string& path);
void serialize_catalog(const Catalog& cat, std::ostream& out);
void save_catalog(const Catalog& cat, const std::string& path);
std::string polytope_to_text(const LatticePolytope& p, const std::string& id);
LatticePolytope polytope_from_text(const std::string& text);

// Breadth-first closure of I-moves from T^n (plus optional seeds) with
// additions searched in [-B, B]^n. Semi-complete: an undersized box
// undercounts.
Catalog enumerate_low_dim(int n, Int box_bound, const std::vector<LatticePolytope>& extra_seeds = {});

// Escalates the box from B = n-1 until the class count is stable for two
// consecutive values; returns the stable catalog and the final box used.
std::pair<Catalog, Int> enumerate_stable(int n, const std::vector<LatticePolytope>& extra_seeds = {},
                                         Int initial_box = 0);

}  // namespace fano

#include <deque>

#include "fano/catalog.hpp"
#include "fano/moves.hpp"

namespace fano {

Catalog enumerate_low_dim(int n, Int box_bound, const std::vector<LatticePolytope>& extra_seeds) {
  if (n < 1) throw validation_error("dimension must be positive");
  if (box_bound < 1) throw validation_error("box bound must be >= 1");
  Catalog cat;
  cat.dim = n;
  std::deque<int> queue;
  auto push = [&](const LatticePolytope& p) {
    if (p.dim() != n) throw dimension_error("seed dimension mismatch");
    if (!p.is_smooth_fano()) throw validation_error("seed is not a smooth Fano polytope");
    CanonicalKey key = canonical_form(p);
    int before = cat.size();
    int idx = catalog_insert(cat, p, key, "c" + std::to_string(cat.size()));
    if (cat.size() > before) queue.push_back(idx);
  };
  push(make_T(n));
  for (const auto& s : extra_seeds) push(s);
  while (!queue.empty()) {
    // copy: catalog_insert may reallocate the entry vector
    LatticePolytope p = cat.entries[queue.front()];
    queue.pop_front();
    for (auto& [q, rec] : i_removal_neighbors(p)) push(q);
    for (auto& [q, rec] : i_addition_search(p, box_bound)) push(q);
  }
  return cat;
}

std::pair<Catalog, Int> enumerate_stable(int n, const std::vector<LatticePolytope>& extra_seeds,
                                         Int initial_box) {
  Int box = initial_box > 0 ? initial_box : std::max<Int>(1, n - 1);
  Catalog cur = enumerate_low_dim(n, box, extra_seeds);
  for (;;) {
    Catalog next = enumerate_low_dim(n, box + 1, extra_seeds);
    if (next.size() == cur.size()) return {std::move(next), box + 1};
    cur = std::move(next);
    ++box;
  }
}

}  // namespace fano

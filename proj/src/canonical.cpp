#include <algorithm>
#include <sstream>

#include "fano/polytope.hpp"

// Canonical form of a smooth Fano polytope. The vertex-facet pairing
// matrix M[F,v] = <a_F, v> is a unimodular invariant; we minimize it
// lexicographically over vertex (column) orders, refining the facet rows
// into groups tied on the chosen columns and branching over every
// minimizing column. The vertex matrix, columns in a minimizing order,
// is then reduced to row-style Hermite normal form, which pins the class
// exactly; the key is the minimal pairing string plus the minimal HNF.

namespace fano {

namespace {

struct Search {
  int f, m, n;
  const std::vector<std::vector<Int>>* pairing;  // f rows x m cols
  const std::vector<Vec>* verts;

  std::vector<int> col_order;
  std::vector<char> used;
  std::vector<Int> pairing_key;  // contributions along the current path
  bool have_pairing_key = false;
  std::vector<Int> best_pairing;
  std::vector<Int> best_hnf;
  bool have_hnf = false;

  std::vector<Int> contribution(const std::vector<std::vector<int>>& groups, int c) const {
    std::vector<Int> out;
    out.reserve(f);
    for (const auto& g : groups) {
      size_t base = out.size();
      for (int r : g) out.push_back((*pairing)[r][c]);
      std::sort(out.begin() + base, out.end());
    }
    return out;
  }

  void leaf() {
    // tie branches can end in different pairing keys: keep the smallest,
    // and minimize the HNF only over the leaves that attain it
    if (have_pairing_key && best_pairing < pairing_key) return;
    bool smaller = !have_pairing_key || pairing_key < best_pairing;
    Mat vm(n, m);
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < n; ++r) vm.at(r, j) = (*verts)[col_order[j]][r];
    Mat h = hermite_normal_form(vm).h;
    if (smaller) {
      best_pairing = pairing_key;
      have_pairing_key = true;
      best_hnf = h.a;
      have_hnf = true;
    } else if (!have_hnf || h.a < best_hnf) {
      best_hnf = h.a;
      have_hnf = true;
    }
  }

  void dfs(const std::vector<std::vector<int>>& groups) {
    if ((int)col_order.size() == m) {
      leaf();
      return;
    }
    std::vector<int> cands;
    std::vector<Int> best;
    for (int c = 0; c < m; ++c) {
      if (used[c]) continue;
      auto contrib = contribution(groups, c);
      if (cands.empty() || contrib < best) {
        best = std::move(contrib);
        cands = {c};
      } else if (contrib == best) {
        cands.push_back(c);
      }
    }
    for (int c : cands) {
      used[c] = 1;
      col_order.push_back(c);
      size_t mark = pairing_key.size();
      pairing_key.insert(pairing_key.end(), best.begin(), best.end());
      // refine groups by the chosen column
      std::vector<std::vector<int>> refined;
      for (const auto& g : groups) {
        std::vector<int> sorted = g;
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&](int a, int b) { return (*pairing)[a][c] < (*pairing)[b][c]; });
        size_t i = 0;
        while (i < sorted.size()) {
          size_t j = i;
          while (j < sorted.size() && (*pairing)[sorted[j]][c] == (*pairing)[sorted[i]][c]) ++j;
          refined.emplace_back(sorted.begin() + i, sorted.begin() + j);
          i = j;
        }
      }
      dfs(refined);
      pairing_key.resize(mark);
      col_order.pop_back();
      used[c] = 0;
    }
  }
};

}  // namespace

CanonicalKey canonical_form(const LatticePolytope& p) {
  if (!p.is_smooth_fano()) throw precondition_error("canonical_form requires a smooth Fano polytope");
  const auto& facets = p.facets();
  int f = (int)facets.size(), m = p.num_vertices(), n = p.dim();
  std::vector<std::vector<Int>> pairing(f, std::vector<Int>(m));
  for (int r = 0; r < f; ++r)
    for (int c = 0; c < m; ++c) pairing[r][c] = dot(facets[r].normal, p.vertices()[c]);

  Search s;
  s.f = f;
  s.m = m;
  s.n = n;
  s.pairing = &pairing;
  s.verts = &p.vertices();
  s.used.assign(m, 0);
  std::vector<int> all_rows(f);
  for (int r = 0; r < f; ++r) all_rows[r] = r;
  s.dfs({all_rows});

  std::ostringstream out;
  out << n << ' ' << m << ' ' << f << ';';
  for (Int v : s.best_pairing) out << v << ',';
  out << '|';
  for (Int v : s.best_hnf) out << v << ',';
  return out.str();
}

}  // namespace fano

#include "fano/primitive.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace fano {

Int degree(const PrimitiveCollection& pc) {
  Int s = 0;
  for (auto& [i, c] : pc.rhs) s += c;
  return (Int)pc.members.size() - s;
}

namespace {

// Shared view: generators plus simplicial maximal cells, for both
// polytope facet complexes and fans.
struct ComplexView {
  int dim;
  const std::vector<Vec>* gens;
  std::vector<std::vector<int>> cells;
  std::vector<uint32_t> cell_masks;
};

bool mask_is_face(const ComplexView& cv, uint32_t s) {
  for (uint32_t cm : cv.cell_masks)
    if ((s & ~cm) == 0) return true;
  return false;
}

// Coordinates of x in the basis of cell `cell`; nullopt if any is
// negative. Cells of a smooth complex are unimodular, so coordinates are
// integral.
std::optional<std::vector<Int>> cone_coords(const ComplexView& cv, int cell, const Vec& x) {
  const auto& c = cv.cells[cell];
  int n = cv.dim;
  Mat bt(n, n);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) bt.at(r, j) = (*cv.gens)[c[j]][r];
  auto sol = solve_cramer(bt, x);
  if (!sol) return std::nullopt;
  auto& [num, den] = *sol;
  std::vector<Int> coeffs(n);
  for (int j = 0; j < n; ++j) {
    if (num[j] % den != 0) return std::nullopt;  // outside the lattice span of this cell
    coeffs[j] = num[j] / den;
    if (coeffs[j] < 0) return std::nullopt;
  }
  return coeffs;
}

std::pair<std::vector<int>, std::vector<Int>> locate(const ComplexView& cv, const Vec& x) {
  if (is_zero(x)) throw domain_error("locate_in_fan: zero vector has no carrier cone");
  std::optional<std::pair<std::vector<int>, std::vector<Int>>> found;
  for (size_t cell = 0; cell < cv.cells.size(); ++cell) {
    auto coeffs = cone_coords(cv, (int)cell, x);
    if (!coeffs) continue;
    std::vector<int> cone;
    std::vector<Int> pos;
    for (int j = 0; j < cv.dim; ++j)
      if ((*coeffs)[j] > 0) {
        cone.push_back(cv.cells[cell][j]);
        pos.push_back((*coeffs)[j]);
      }
    std::vector<size_t> order(cone.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return cone[a] < cone[b]; });
    std::vector<int> cone_s;
    std::vector<Int> pos_s;
    for (size_t i : order) {
      cone_s.push_back(cone[i]);
      pos_s.push_back(pos[i]);
    }
    auto res = std::make_pair(std::move(cone_s), std::move(pos_s));
    if (found && *found != res)
      throw inconsistency_error("point lies in two distinct minimal cones; fan is not well formed");
    found = std::move(res);
  }
  if (!found) throw inconsistency_error("point not covered by any cone; fan is not complete");
  return *found;
}

std::vector<PrimitiveCollection> collections(const ComplexView& cv) {
  int m = (int)cv.gens->size();
  if (m > 25) throw validation_error("too many generators for subset search");
  std::vector<PrimitiveCollection> out;
  for (uint32_t s = 1; s < (1u << m); ++s) {
    if (std::popcount(s) < 2) continue;  // singletons are always faces
    if (mask_is_face(cv, s)) continue;
    bool minimal = true;
    for (int x = 0; x < m && minimal; ++x)
      if ((s >> x) & 1)
        if (!mask_is_face(cv, s & ~(1u << x))) minimal = false;
    if (!minimal) continue;
    PrimitiveCollection pc;
    for (int x = 0; x < m; ++x)
      if ((s >> x) & 1) pc.members.push_back(x);
    Vec sum((size_t)cv.dim, 0);
    for (int x : pc.members) sum = add(sum, (*cv.gens)[x]);
    if (!is_zero(sum)) {
      auto [cone, coeffs] = locate(cv, sum);
      for (size_t i = 0; i < cone.size(); ++i) pc.rhs[cone[i]] = coeffs[i];
    }
    pc.degree = degree(pc);
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end(), [](const PrimitiveCollection& a, const PrimitiveCollection& b) {
    return std::make_pair(a.members.size(), a.members) < std::make_pair(b.members.size(), b.members);
  });
  return out;
}

ComplexView polytope_view(const LatticePolytope& p) {
  ComplexView cv;
  cv.dim = p.dim();
  cv.gens = &p.vertices();
  for (const auto& f : p.facets()) cv.cells.push_back(f.vertex_indices);
  cv.cell_masks = p.facet_masks();
  return cv;
}

ComplexView fan_view(const SimplicialCompleteFan& fan) {
  ComplexView cv;
  cv.dim = fan.dim();
  cv.gens = &fan.rays();
  cv.cells = fan.max_cones();
  for (const auto& c : cv.cells) {
    uint32_t mask = 0;
    for (int i : c) mask |= 1u << i;
    cv.cell_masks.push_back(mask);
  }
  return cv;
}

}  // namespace

SimplicialCompleteFan::SimplicialCompleteFan(std::vector<Vec> rays, std::vector<std::vector<int>> max_cones)
    : rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (rays_.empty()) throw validation_error("fan has no rays");
  dim_ = (int)rays_[0].size();
  if ((int)rays_.size() > 25) throw validation_error("too many rays");
  std::set<Vec> seen;
  for (const auto& r : rays_) {
    if ((int)r.size() != dim_) throw dimension_error("ray dimension mismatch");
    if (is_zero(r) || primitive_part(r) != r) throw validation_error("rays must be primitive");
    if (!seen.insert(r).second) throw validation_error("repeated ray");
  }
  nonsingular_ = true;
  for (auto& c : cones_) {
    if ((int)c.size() != dim_) throw validation_error("maximal cone is not full-dimensional simplicial");
    std::sort(c.begin(), c.end());
    for (int i : c)
      if (i < 0 || i >= (int)rays_.size()) throw validation_error("cone index out of range");
    Mat m(dim_, dim_);
    for (int r = 0; r < dim_; ++r)
      for (int col = 0; col < dim_; ++col) m.at(r, col) = rays_[c[r]][col];
    Int d = determinant(m);
    if (d == 0) throw validation_error("maximal cone rays are linearly dependent");
    if (d != 1 && d != -1) nonsingular_ = false;
  }

  if (dim_ == 1) {
    bool pos = false, neg = false;
    for (const auto& c : cones_) (rays_[c[0]][0] > 0 ? pos : neg) = true;
    if (!pos || !neg) throw validation_error("fan is not complete");
    return;
  }

  // every ridge in exactly two cones, on opposite sides
  std::map<std::vector<int>, std::vector<int>> ridge_cones;
  for (size_t ci = 0; ci < cones_.size(); ++ci)
    for (int drop = 0; drop < dim_; ++drop) {
      std::vector<int> ridge;
      for (int j = 0; j < dim_; ++j)
        if (j != drop) ridge.push_back(cones_[ci][j]);
      ridge_cones[ridge].push_back((int)ci);
    }
  for (auto& [ridge, cs] : ridge_cones) {
    if (cs.size() != 2) throw validation_error("fan is not complete: ridge not shared by exactly two cones");
    std::vector<Vec> rows;
    for (int i : ridge) rows.push_back(rays_[i]);
    Vec h = nullspace_direction(rows, dim_);
    Int side[2];
    for (int s = 0; s < 2; ++s) {
      int extra = -1;
      for (int i : cones_[cs[s]])
        if (std::find(ridge.begin(), ridge.end(), i) == ridge.end()) extra = i;
      side[s] = dot(h, rays_[extra]);
    }
    if (side[0] == 0 || side[1] == 0 || (side[0] > 0) == (side[1] > 0))
      throw validation_error("fan cones overlap across a ridge");
  }
}

bool is_face(const LatticePolytope& p, const std::vector<int>& s) {
  uint32_t mask = 0;
  for (int i : s) {
    if (i < 0 || i >= p.num_vertices()) throw dimension_error("vertex index out of range");
    mask |= 1u << i;
  }
  for (uint32_t fm : p.facet_masks())
    if ((mask & ~fm) == 0) return true;
  return false;
}

std::pair<std::vector<int>, std::vector<Int>> locate_in_fan(const LatticePolytope& p, const Vec& x) {
  return locate(polytope_view(p), x);
}

std::vector<PrimitiveCollection> primitive_collections(const LatticePolytope& p) {
  if (!p.is_smooth_fano()) throw precondition_error("primitive_collections requires a smooth Fano polytope");
  return collections(polytope_view(p));
}

std::vector<PrimitiveCollection> primitive_collections(const SimplicialCompleteFan& fan) {
  if (!fan.is_nonsingular()) throw validation_error("fan is singular");
  return collections(fan_view(fan));
}

bool check_fano_by_degrees(const SimplicialCompleteFan& fan) {
  for (const auto& pc : primitive_collections(fan))
    if (pc.degree <= 0) return false;
  return true;
}

bool check_fano_by_degrees(const LatticePolytope& p) {
  if (!p.has_interior_origin() || !p.is_simplicial()) throw validation_error("not a complete simplicial polytope fan");
  for (const auto& f : p.facets()) {
    std::vector<Vec> basis;
    for (int i : f.vertex_indices) basis.push_back(p.vertices()[i]);
    if (!is_unimodular_basis(basis)) throw validation_error("fan of polytope is singular");
  }
  for (const auto& pc : collections(polytope_view(p)))
    if (pc.degree <= 0) return false;
  return true;
}

Pic2Pattern classify_pic2(const LatticePolytope& p) {
  if (p.num_vertices() != p.dim() + 2) throw precondition_error("classify_pic2 requires n+2 vertices");
  auto pcs = primitive_collections(p);
  if (pcs.size() != 2) throw inconsistency_error("expected exactly two primitive collections");
  const PrimitiveCollection* zero = nullptr;
  const PrimitiveCollection* other = nullptr;
  for (const auto& pc : pcs) {
    if (pc.rhs.empty() && !zero) zero = &pc;  // both may be zero-sum (a == 0)
    else other = &pc;
  }
  if (!zero || !other) throw inconsistency_error("expected one zero-sum collection");
  Pic2Pattern pat;
  pat.k = (int)zero->members.size();
  if (pat.k < 2 || pat.k > p.dim()) throw inconsistency_error("zero-sum collection size out of range");
  pat.zero_part = zero->members;
  Int asum = 0;
  for (int v : pat.zero_part) {
    auto it = other->rhs.find(v);
    Int ai = it == other->rhs.end() ? 0 : it->second;
    pat.a.push_back(ai);
    asum += ai;
  }
  for (auto& [v, c] : other->rhs)
    if (std::find(pat.zero_part.begin(), pat.zero_part.end(), v) == pat.zero_part.end())
      throw inconsistency_error("second relation does not land in the zero-sum part");
  if ((Int)(p.dim() + 2 - pat.k) <= asum) throw inconsistency_error("degree inequality violated");
  return pat;
}

namespace {

bool rhs_all_ones(const PrimitiveCollection& pc) {
  if (pc.rhs.empty()) return false;
  for (auto& [i, c] : pc.rhs)
    if (c != 1) return false;
  return true;
}

std::set<int> rhs_support(const PrimitiveCollection& pc) {
  std::set<int> s;
  for (auto& [i, c] : pc.rhs) s.insert(i);
  return s;
}

std::set<int> member_set(const PrimitiveCollection& pc) { return {pc.members.begin(), pc.members.end()}; }

template <typename T>
bool disjoint(const std::set<T>& a, const std::set<T>& b) {
  for (const T& x : a)
    if (b.count(x)) return false;
  return true;
}

void assign_roles(std::map<int, std::string>& roles, const std::set<int>& idxs, const std::string& prefix) {
  int q = 1;
  for (int i : idxs) roles[i] = prefix + std::to_string(q++);
}

}  // namespace

Pic3Pattern classify_pic3(const LatticePolytope& p) {
  if (p.num_vertices() != p.dim() + 3) throw precondition_error("classify_pic3 requires n+3 vertices");
  auto pcs = primitive_collections(p);
  Pic3Pattern pat;
  if (pcs.size() == 3) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!disjoint(member_set(pcs[i]), member_set(pcs[j])))
          throw inconsistency_error("three collections are not pairwise disjoint");
    pat.kind = Pic3Pattern::Case::three_disjoint;
    return pat;
  }
  if (pcs.size() != 5) throw inconsistency_error("expected three or five primitive collections");

  std::set<int> all;
  for (int i = 0; i < p.num_vertices(); ++i) all.insert(i);
  for (const auto& r2 : pcs) {
    if (!rhs_all_ones(r2)) continue;
    for (const auto& r4 : pcs) {
      if (&r2 == &r4 || !rhs_all_ones(r4)) continue;
      std::set<int> u = rhs_support(r2), y = rhs_support(r4);
      std::set<int> m2 = member_set(r2), m4 = member_set(r4);
      if (!std::includes(m2.begin(), m2.end(), y.begin(), y.end())) continue;
      if (!std::includes(m4.begin(), m4.end(), u.begin(), u.end())) continue;
      std::set<int> z, t;
      std::set_difference(m2.begin(), m2.end(), y.begin(), y.end(), std::inserter(z, z.end()));
      std::set_difference(m4.begin(), m4.end(), u.begin(), u.end(), std::inserter(t, t.end()));
      if (z.empty() || t.empty()) continue;
      // zero relation must be exactly Z + T
      std::set<int> zt = z;
      zt.insert(t.begin(), t.end());
      const PrimitiveCollection* r3 = nullptr;
      for (const auto& pc : pcs)
        if (pc.rhs.empty() && member_set(pc) == zt) r3 = &pc;
      if (!r3) continue;
      std::set<int> core = zt;
      core.insert(y.begin(), y.end());
      core.insert(u.begin(), u.end());
      std::set<int> v;
      std::set_difference(all.begin(), all.end(), core.begin(), core.end(), std::inserter(v, v.end()));
      if (v.empty()) continue;
      std::set<int> m1_expect = v;
      m1_expect.insert(y.begin(), y.end());
      std::set<int> m5_expect = v;
      m5_expect.insert(u.begin(), u.end());
      const PrimitiveCollection* r1 = nullptr;
      const PrimitiveCollection* r5 = nullptr;
      for (const auto& pc : pcs) {
        if (member_set(pc) == m1_expect) r1 = &pc;
        if (member_set(pc) == m5_expect) r5 = &pc;
      }
      if (!r1 || !r5) continue;
      // both rhs land in Z (short by one designated z_1) and T
      auto lands = [&](const PrimitiveCollection& pc) {
        for (auto& [i, c] : pc.rhs)
          if (!zt.count(i)) return false;
        return true;
      };
      if (!lands(*r1) || !lands(*r5)) continue;
      // every t carries coefficient d_i + 1 >= 1 in r1
      bool ok = true;
      std::vector<Int> cvals, dvals;
      std::vector<int> zlist(z.begin(), z.end()), tlist(t.begin(), t.end());
      // z_1 := a Z-member absent from both right-hand sides
      int z1 = -1;
      for (int zi : zlist)
        if (!r1->rhs.count(zi) && !r5->rhs.count(zi)) {
          z1 = zi;
          break;
        }
      if (z1 < 0) continue;
      for (int zi : zlist) {
        if (zi == z1) continue;
        Int c1 = r1->rhs.count(zi) ? r1->rhs.at(zi) : 0;
        Int c5 = r5->rhs.count(zi) ? r5->rhs.at(zi) : 0;
        if (c1 != c5) ok = false;
        cvals.push_back(c1);
      }
      for (int ti : tlist) {
        Int c1 = r1->rhs.count(ti) ? r1->rhs.at(ti) : 0;
        Int c5 = r5->rhs.count(ti) ? r5->rhs.at(ti) : 0;
        if (c1 != c5 + 1) ok = false;
        dvals.push_back(c5);
      }
      if (!ok) continue;
      pat.kind = Pic3Pattern::Case::five_collections;
      pat.p = {(int)v.size(), (int)y.size(), (int)z.size(), (int)t.size(), (int)u.size()};
      pat.c = std::move(cvals);
      pat.d = std::move(dvals);
      assign_roles(pat.roles, v, "v");
      assign_roles(pat.roles, y, "y");
      assign_roles(pat.roles, u, "u");
      // z_1 first among the z's
      {
        pat.roles[z1] = "z1";
        int q = 2;
        for (int zi : zlist)
          if (zi != z1) pat.roles[zi] = "z" + std::to_string(q++);
      }
      assign_roles(pat.roles, t, "t");
      return pat;
    }
  }
  throw inconsistency_error("five collections do not match the n+3 relation display");
}

std::optional<IsolatedMatch> match_isolated_pattern(const LatticePolytope& p) {
  if (p.num_vertices() != p.dim() + 3) throw precondition_error("match_isolated_pattern requires n+3 vertices");
  Pic3Pattern pat;
  try {
    pat = classify_pic3(p);
  } catch (const inconsistency_error&) {
    return std::nullopt;
  }
  if (pat.kind != Pic3Pattern::Case::five_collections) return std::nullopt;
  Int a = pat.p[0], b = pat.p[1];
  if (a < 2 || b < 2) return std::nullopt;
  if (pat.p[2] != 1 || pat.p[3] != 1 || pat.p[4] != b) return std::nullopt;
  if (!pat.c.empty()) return std::nullopt;
  if (pat.d.size() != 1 || pat.d[0] != a + b - 2) return std::nullopt;
  IsolatedMatch m;
  m.a = a;
  m.b = b;
  m.roles = pat.roles;
  for (auto& [i, r] : m.roles) {
    if (r == "z1") r = "z";
    if (r == "t1") r = "t";
  }
  return m;
}

std::optional<FamilyMatch> match_family_pattern(const LatticePolytope& p) {
  int n = p.dim(), m = p.num_vertices();
  int k = m - n - 3;
  if (k < 0) return std::nullopt;
  if (k == 0) {
    auto iso = match_isolated_pattern(p);
    if (!iso) return std::nullopt;
    FamilyMatch fm;
    fm.params.a = iso->a;
    fm.params.b = iso->b;
    fm.params.k = 0;
    fm.roles = iso->roles;
    return fm;
  }
  std::vector<PrimitiveCollection> pcs;
  try {
    pcs = primitive_collections(p);
  } catch (const precondition_error&) {
    return std::nullopt;
  }
  if ((int)pcs.size() != 5 + k) return std::nullopt;
  const PrimitiveCollection* zero = nullptr;
  for (const auto& pc : pcs)
    if (pc.rhs.empty()) {
      if (zero) return std::nullopt;
      zero = &pc;
    }
  if (!zero || zero->members.size() != 2) return std::nullopt;

  for (int orient = 0; orient < 2; ++orient) {
    int zi = zero->members[orient], ti = zero->members[1 - orient];
    // row 4: t + U = Y
    for (const auto& r4 : pcs) {
      if (!rhs_all_ones(r4)) continue;
      std::set<int> m4 = member_set(r4);
      if (!m4.count(ti) || m4.count(zi)) continue;
      std::set<int> u = m4;
      u.erase(ti);
      std::set<int> y = rhs_support(r4);
      if (u.empty() || u.size() != y.size()) continue;
      if (!disjoint(u, y) || u.count(zi) || y.count(zi) || y.count(ti)) continue;
      Int b = (Int)u.size();
      // row 2: Y + z = U
      std::set<int> m2_expect = y;
      m2_expect.insert(zi);
      const PrimitiveCollection* r2 = nullptr;
      for (const auto& pc : pcs)
        if (rhs_all_ones(pc) && member_set(pc) == m2_expect && rhs_support(pc) == u) r2 = &pc;
      if (!r2) continue;
      // row 1: V + Y = (a+b-1) t
      const PrimitiveCollection* r1 = nullptr;
      std::set<int> v;
      for (const auto& pc : pcs) {
        std::set<int> mm = member_set(pc);
        if (!std::includes(mm.begin(), mm.end(), y.begin(), y.end())) continue;
        if (mm.count(zi) || mm.count(ti)) continue;
        if (mm == m2_expect || mm == m4) continue;
        std::set<int> vv;
        std::set_difference(mm.begin(), mm.end(), y.begin(), y.end(), std::inserter(vv, vv.end()));
        if (vv.empty() || !disjoint(vv, u)) continue;
        Int a = (Int)vv.size();
        if (a < 2) continue;
        if (pc.rhs.size() != 1 || !pc.rhs.count(ti) || pc.rhs.at(ti) != a + b - 1) continue;
        r1 = &pc;
        v = vv;
        break;
      }
      if (!r1) continue;
      Int a = (Int)v.size();
      // row 5: U + V = (a+b-2) t
      const PrimitiveCollection* r5 = nullptr;
      std::set<int> m5_expect = u;
      m5_expect.insert(v.begin(), v.end());
      for (const auto& pc : pcs)
        if (member_set(pc) == m5_expect && pc.rhs.size() == 1 && pc.rhs.count(ti) &&
            pc.rhs.at(ti) == a + b - 2)
          r5 = &pc;
      if (!r5) continue;
      // remaining k relations: W_j = alpha multiset over Y + U
      std::set<int> core = v;
      core.insert(y.begin(), y.end());
      core.insert(u.begin(), u.end());
      core.insert(zi);
      core.insert(ti);
      std::vector<const PrimitiveCollection*> wrels;
      for (const auto& pc : pcs)
        if (&pc != zero && &pc != r1 && &pc != r2 && &pc != &r4 && &pc != r5) wrels.push_back(&pc);
      if ((int)wrels.size() != k) continue;
      std::set<int> yu = y;
      yu.insert(u.begin(), u.end());
      std::set<int> wseen, alpha_image;
      bool ok = true;
      for (const auto* wr : wrels) {
        std::set<int> mm = member_set(*wr);
        if (!disjoint(mm, core) || !disjoint(mm, wseen)) ok = false;
        Int rhs_total = 0;
        for (auto& [i, c] : wr->rhs) {
          if (!yu.count(i)) ok = false;
          rhs_total += c;
          alpha_image.insert(i);
        }
        if (rhs_total != (Int)mm.size() - 1) ok = false;
        if (!ok) break;
        wseen.insert(mm.begin(), mm.end());
      }
      if (!ok) continue;
      if (alpha_image != yu) continue;
      std::set<int> used = core;
      used.insert(wseen.begin(), wseen.end());
      if ((int)used.size() != m) continue;

      FamilyMatch fm;
      fm.params.a = a;
      fm.params.b = b;
      fm.params.k = k;
      std::sort(wrels.begin(), wrels.end(), [](const PrimitiveCollection* x, const PrimitiveCollection* w) {
        return std::make_pair(x->members.size(), x->members) < std::make_pair(w->members.size(), w->members);
      });
      std::map<int, int> yq, uq;
      {
        int q = 1;
        for (int i : y) yq[i] = q++;
        q = 1;
        for (int i : u) uq[i] = q++;
      }
      for (const auto* wr : wrels) {
        fm.params.l.push_back((int)wr->members.size() - 1);
        std::vector<FamilyParams::Alpha> slots;
        for (auto& [i, c] : wr->rhs)
          for (Int rep = 0; rep < c; ++rep)
            slots.push_back(y.count(i) ? FamilyParams::Alpha{false, yq[i]} : FamilyParams::Alpha{true, uq[i]});
        fm.params.alpha.push_back(std::move(slots));
      }
      assign_roles(fm.roles, v, "v");
      assign_roles(fm.roles, y, "y");
      assign_roles(fm.roles, u, "u");
      fm.roles[zi] = "z";
      fm.roles[ti] = "t";
      {
        int j = 1;
        for (const auto* wr : wrels) {
          int i = 1;
          for (int wi : wr->members) fm.roles[wi] = "w" + std::to_string(i++) + "_" + std::to_string(j);
          ++j;
        }
      }
      fm.params.validate();
      return fm;
    }
  }
  return std::nullopt;
}

bool verify_extension_lemma(const LatticePolytope& p) {
  if (!p.is_smooth_fano()) throw precondition_error("verify_extension_lemma requires a smooth Fano polytope");
  auto pcs = primitive_collections(p);
  const auto& masks = p.facet_masks();
  for (const auto& pc : pcs) {
    if (pc.degree != 1 || pc.rhs.empty()) continue;
    uint32_t support = 0;
    bool disjoint_sides = true;
    for (auto& [i, c] : pc.rhs) {
      support |= 1u << i;
      if (std::find(pc.members.begin(), pc.members.end(), i) != pc.members.end()) disjoint_sides = false;
    }
    if (!disjoint_sides) continue;
    bool face = false;
    for (uint32_t fm : masks)
      if ((support & ~fm) == 0) face = true;
    if (!face) continue;
    // all faces F with support(rhs) <= F
    std::set<uint32_t> faces;
    for (uint32_t fm : masks) {
      if ((support & ~fm) != 0) continue;
      uint32_t extra = fm & ~support;
      // subsets of extra
      for (uint32_t sub = extra;; sub = (sub - 1) & extra) {
        faces.insert(support | sub);
        if (sub == 0) break;
      }
    }
    uint32_t members_mask = 0;
    for (int i : pc.members) members_mask |= 1u << i;
    for (uint32_t fmask : faces) {
      for (int vi : pc.members) {
        uint32_t target = (fmask | members_mask) & ~(1u << vi);
        bool ok = false;
        for (uint32_t fm : masks)
          if ((target & ~fm) == 0) ok = true;
        if (!ok) return false;
      }
    }
  }
  return true;
}

std::vector<std::string> default_vertex_names(int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::vector<std::string> role_names_or_default(int count, const std::map<int, std::string>& roles) {
  auto names = default_vertex_names(count);
  for (auto& [i, r] : roles)
    if (i >= 0 && i < count) names[i] = r;
  return names;
}

std::string format_relation(const PrimitiveCollection& pc, const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (int i : pc.members) {
    if (!first) out << " + ";
    out << names[i];
    first = false;
  }
  out << " = ";
  if (pc.rhs.empty()) {
    out << "0";
  } else {
    first = true;
    for (auto& [i, c] : pc.rhs) {
      if (!first) out << " + ";
      if (c != 1) out << c << " ";
      out << names[i];
      first = false;
    }
  }
  return out.str();
}

}  // namespace fano

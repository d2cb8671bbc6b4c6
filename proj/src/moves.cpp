#include "fano/moves.hpp"

#include "fano/primitive.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fano {

std::string format_move(const MoveRecord& rec) {
  std::ostringstream out;
  switch (rec.kind) {
    case MoveRecord::Kind::f_add: out << "F-add"; break;
    case MoveRecord::Kind::f_remove: out << "F-remove"; break;
    case MoveRecord::Kind::i_add: out << "I-add"; break;
    case MoveRecord::Kind::i_remove: out << "I-remove"; break;
  }
  out << " w=(";
  for (size_t i = 0; i < rec.witness.size(); ++i) out << (i ? "," : "") << rec.witness[i];
  out << ")";
  if (rec.face) {
    out << " F={";
    for (size_t i = 0; i < rec.face->size(); ++i) out << (i ? "," : "") << (*rec.face)[i];
    out << "}";
  }
  return out.str();
}

MoveRecord parse_move(const std::string& text) {
  std::istringstream in(text);
  std::string kind_s, w_s;
  if (!(in >> kind_s >> w_s)) throw parse_error("malformed move record", 1);
  MoveRecord rec;
  if (kind_s == "F-add") rec.kind = MoveRecord::Kind::f_add;
  else if (kind_s == "F-remove") rec.kind = MoveRecord::Kind::f_remove;
  else if (kind_s == "I-add") rec.kind = MoveRecord::Kind::i_add;
  else if (kind_s == "I-remove") rec.kind = MoveRecord::Kind::i_remove;
  else throw parse_error("unknown move kind: " + kind_s, 1);
  auto ints_between = [](const std::string& s, const std::string& prefix, char open, char close,
                         std::vector<Int>& out) {
    if (s.size() < prefix.size() + 2 || s.compare(0, prefix.size(), prefix) != 0 ||
        s[prefix.size()] != open || s.back() != close)
      throw parse_error("malformed move field: " + s, 1);
    std::string body = s.substr(prefix.size() + 1, s.size() - prefix.size() - 2);
    for (auto& c : body)
      if (c == ',') c = ' ';
    std::istringstream bs(body);
    Int x;
    while (bs >> x) out.push_back(x);
    if (!bs.eof()) throw parse_error("malformed move field: " + s, 1);
  };
  ints_between(w_s, "w=", '(', ')', rec.witness);
  std::string f_s;
  if (in >> f_s) {
    std::vector<Int> idx;
    ints_between(f_s, "F=", '{', '}', idx);
    rec.face = std::vector<int>(idx.begin(), idx.end());
  }
  return rec;
}

namespace {

// Vertex coordinate set of a facet, used to compare facet lists across
// different vertex orderings.
std::set<Vec> facet_point_set(const LatticePolytope& p, const Facet& f) {
  std::set<Vec> s;
  for (int i : f.vertex_indices) s.insert(p.vertices()[i]);
  return s;
}

std::optional<LatticePolytope> smooth_fano_with_vertices(int dim, std::vector<Vec> verts) {
  try {
    LatticePolytope q(dim, std::move(verts));
    if (!q.is_smooth_fano()) return std::nullopt;
    return q;
  } catch (const validation_error&) {
    return std::nullopt;
  }
}

// Necessary conditions for conv(V(p) ∪ {w}) to be smooth Fano with w a new
// vertex: w strictly outside, on no facet hyperplane (otherwise the facet
// grows non-simplicial), and every old vertex still on a surviving facet.
bool passes_add_prefilter(const LatticePolytope& p, const Vec& w) {
  const auto& facets = p.facets();
  const auto& masks = p.facet_masks();
  const uint32_t all_verts = (p.num_vertices() >= 32) ? ~0u : ((1u << p.num_vertices()) - 1);
  bool outside = false;
  uint32_t kept = 0;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    Int s = dot(facets[fi].normal, w);
    if (s == 1) return false;
    if (s > 1) outside = true;
    else kept |= masks[fi];
  }
  return outside && kept == all_verts;
}

// Exact decision for "conv(V(p) ∪ {w}) is smooth Fano with vertex set
// V(p) ∪ {w}", assuming the prefilter passed, without computing the hull
// from scratch. Facets with <a,w> < 1 survive unchanged; every new facet
// consists of w and a horizon ridge (a ridge between a surviving and a
// non-surviving facet). Each candidate new facet must lie on a level-1
// hyperplane supporting all vertices, touch no vertex beyond its ridge,
// and span a unimodular basis; finally the assembled facet list must be
// closed (every ridge shared by exactly two facets), which rules out any
// boundary piece the ridge construction could have missed.
bool fast_add_decision(const LatticePolytope& p, const Vec& w) {
  int n = p.dim(), m = p.num_vertices();
  const auto& facets = p.facets();
  const auto& masks = p.facet_masks();
  std::vector<char> kept(facets.size());
  for (size_t fi = 0; fi < facets.size(); ++fi) kept[fi] = dot(facets[fi].normal, w) < 1;

  std::set<std::vector<int>> ridges;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    if (kept[fi]) continue;
    const auto& vi = facets[fi].vertex_indices;
    for (size_t drop = 0; drop < vi.size(); ++drop) {
      uint32_t rmask = masks[fi] & ~(1u << vi[drop]);
      bool on_horizon = false;
      for (size_t fj = 0; fj < facets.size() && !on_horizon; ++fj)
        if (kept[fj] && (rmask & masks[fj]) == rmask) on_horizon = true;
      if (!on_horizon) continue;
      std::vector<int> ridge;
      for (size_t i = 0; i < vi.size(); ++i)
        if (i != drop) ridge.push_back(vi[i]);
      std::sort(ridge.begin(), ridge.end());
      ridges.insert(std::move(ridge));
    }
  }
  if (ridges.empty()) return false;

  std::vector<std::vector<int>> qfacets;
  for (size_t fi = 0; fi < facets.size(); ++fi)
    if (kept[fi]) {
      std::vector<int> vi = facets[fi].vertex_indices;
      std::sort(vi.begin(), vi.end());
      qfacets.push_back(std::move(vi));
    }
  for (const auto& ridge : ridges) {
    std::vector<Vec> diffs;
    for (int idx : ridge) diffs.push_back(sub(p.vertices()[idx], w));
    Vec normal = nullspace_direction(diffs, n);
    if (is_zero(normal)) return false;
    normal = primitive_part(normal);
    Int level = dot(normal, w);
    std::vector<Int> d(m);
    Int mx = level, mn = level;
    for (int i = 0; i < m; ++i) {
      d[i] = dot(normal, p.vertices()[i]);
      mx = std::max(mx, d[i]);
      mn = std::min(mn, d[i]);
    }
    if (mx > level && mn < level) return false;  // not a supporting hyperplane
    if (mx > level) {                            // orient so vertices lie below
      normal = negate(normal);
      level = -level;
      for (Int& x : d) x = -x;
    }
    if (level != 1) return false;  // origin not interior or facet not at level 1
    for (int i = 0; i < m; ++i)
      if (d[i] == level && !std::binary_search(ridge.begin(), ridge.end(), i))
        return false;  // extra vertex on the facet: not simplicial
    std::vector<Vec> basis;
    for (int idx : ridge) basis.push_back(p.vertices()[idx]);
    basis.push_back(w);
    if (!is_unimodular_basis(basis)) return false;
    std::vector<int> qf = ridge;
    qf.push_back(m);  // index of w
    qfacets.push_back(std::move(qf));
  }

  std::map<std::vector<int>, int> ridge_count;
  for (const auto& f : qfacets)
    for (size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> r;
      for (size_t i = 0; i < f.size(); ++i)
        if (i != drop) r.push_back(f[i]);
      ++ridge_count[std::move(r)];
    }
  for (const auto& [r, c] : ridge_count)
    if (c != 2) return false;
  return true;
}

bool is_proper_face(const LatticePolytope& p, const std::vector<int>& face) {
  if (face.empty()) return false;
  uint32_t mask = 0;
  for (int i : face) {
    if (i < 0 || i >= p.num_vertices()) return false;
    mask |= 1u << i;
  }
  for (uint32_t fm : p.facet_masks())
    if ((mask & fm) == mask) return true;
  return false;
}

}  // namespace

MoveResult stellar_add(const LatticePolytope& p, const std::vector<int>& face) {
  if (!is_proper_face(p, face)) return std::nullopt;
  Vec w(p.dim(), 0);
  for (int i : face) w = add(w, p.vertices()[i]);
  if (p.contains_vertex(w)) return std::nullopt;
  if (!passes_add_prefilter(p, w) || !fast_add_decision(p, w)) return std::nullopt;

  std::vector<Vec> verts = p.vertices();
  verts.push_back(w);
  auto q = smooth_fano_with_vertices(p.dim(), std::move(verts));
  if (!q) return std::nullopt;

  // Definition-level facet condition: the facets through w are exactly the
  // pyramids over the face's complements inside the facets containing it.
  std::set<int> face_set(face.begin(), face.end());
  std::set<std::set<Vec>> expected;
  for (const auto& f : p.facets()) {
    std::set<int> fs(f.vertex_indices.begin(), f.vertex_indices.end());
    if (!std::includes(fs.begin(), fs.end(), face_set.begin(), face_set.end())) continue;
    for (int v : face) {
      std::set<Vec> pts = {w};
      for (int i : f.vertex_indices)
        if (i != v) pts.insert(p.vertices()[i]);
      expected.insert(std::move(pts));
    }
  }
  std::set<std::set<Vec>> actual;
  for (const auto& f : q->facets()) {
    auto pts = facet_point_set(*q, f);
    if (pts.count(w)) actual.insert(std::move(pts));
  }
  if (actual != expected) return std::nullopt;

  MoveRecord rec{MoveRecord::Kind::f_add, w, face};
  std::sort(rec.face->begin(), rec.face->end());
  return std::make_pair(std::move(*q), std::move(rec));
}

namespace {

// All proper faces of p, as sorted index vectors: the nonempty subsets of
// its facets' vertex sets.
std::vector<std::vector<int>> proper_faces(const LatticePolytope& p) {
  std::set<std::vector<int>> out;
  for (const auto& f : p.facets()) {
    int s = (int)f.vertex_indices.size();
    for (uint32_t bits = 1; bits < (1u << s); ++bits) {
      std::vector<int> face;
      for (int i = 0; i < s; ++i)
        if (bits & (1u << i)) face.push_back(f.vertex_indices[i]);
      out.insert(std::move(face));
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace

MoveResult stellar_remove(const LatticePolytope& p, const Vec& w) {
  auto wi = p.vertex_index(w);
  if (!wi) return std::nullopt;
  std::vector<Vec> verts;
  for (int i = 0; i < p.num_vertices(); ++i)
    if (i != *wi) verts.push_back(p.vertices()[i]);
  auto q = smooth_fano_with_vertices(p.dim(), std::move(verts));
  if (!q) return std::nullopt;

  // Accept only when the removal inverts a valid stellar addition.
  for (const auto& face : proper_faces(*q)) {
    Vec sum(p.dim(), 0);
    for (int i : face) sum = add(sum, q->vertices()[i]);
    if (sum != w) continue;
    if (stellar_add(*q, face)) {
      MoveRecord rec{MoveRecord::Kind::f_remove, w, std::nullopt};
      return std::make_pair(std::move(*q), std::move(rec));
    }
  }
  return std::nullopt;
}

MoveResult i_add(const LatticePolytope& p, const Vec& w) {
  if ((int)w.size() != p.dim() || p.contains_vertex(w)) return std::nullopt;
  if (!passes_add_prefilter(p, w) || !fast_add_decision(p, w)) return std::nullopt;
  // the incremental decision said yes; the scratch hull remains the authority
  std::vector<Vec> verts = p.vertices();
  verts.push_back(w);
  auto q = smooth_fano_with_vertices(p.dim(), std::move(verts));
  if (!q) throw inconsistency_error("incremental facet check accepted a vertex addition the hull rejects");
  MoveRecord rec{MoveRecord::Kind::i_add, w, std::nullopt};
  return std::make_pair(std::move(*q), std::move(rec));
}

MoveResult i_remove(const LatticePolytope& p, const Vec& v) {
  auto vi = p.vertex_index(v);
  if (!vi) return std::nullopt;
  std::vector<Vec> verts;
  for (int i = 0; i < p.num_vertices(); ++i)
    if (i != *vi) verts.push_back(p.vertices()[i]);
  auto q = smooth_fano_with_vertices(p.dim(), std::move(verts));
  if (!q) return std::nullopt;
  MoveRecord rec{MoveRecord::Kind::i_remove, v, std::nullopt};
  return std::make_pair(std::move(*q), std::move(rec));
}

std::vector<std::pair<LatticePolytope, MoveRecord>> f_neighbors(const LatticePolytope& p) {
  if (!p.is_smooth_fano()) throw precondition_error("f_neighbors requires a smooth Fano polytope");
  std::vector<std::pair<LatticePolytope, MoveRecord>> out;
  std::set<CanonicalKey> seen;
  auto take = [&](MoveResult r) {
    if (!r) return;
    if (seen.insert(canonical_form(r->first)).second) out.push_back(std::move(*r));
  };
  for (const auto& face : proper_faces(p)) take(stellar_add(p, face));
  for (const auto& v : p.vertices()) take(stellar_remove(p, v));
  return out;
}

std::vector<std::pair<LatticePolytope, MoveRecord>> i_removal_neighbors(const LatticePolytope& p) {
  std::vector<std::pair<LatticePolytope, MoveRecord>> out;
  for (const auto& v : p.vertices())
    if (auto r = i_remove(p, v)) out.push_back(std::move(*r));
  return out;
}

namespace {

// Candidate facet normals of any single-vertex enlargement of p: lattice
// points b of the dual polytope at level 1 on at least n-1 linearly
// independent vertices (a new facet keeps n-1 old vertices, and on a
// smooth Fano result they are part of a basis). For each independent
// (n-1)-subset S the solutions of <v, b> = 1, v in S, form a line; its
// integral points inside the dual polytope are walked directly.
std::vector<Vec> dual_facet_candidates(const LatticePolytope& p) {
  int n = p.dim(), m = p.num_vertices();
  const auto& verts = p.vertices();
  std::set<Vec> out;
  std::vector<int> pick(n - 1);
  for (int i = 0; i < n - 1; ++i) pick[i] = i;
  auto advance = [&]() {
    int i = n - 2;
    while (i >= 0 && pick[i] == m - (n - 1 - i)) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < n - 1; ++j) pick[j] = pick[j - 1] + 1;
    return true;
  };
  if (n - 1 > m) return {};
  do {
    std::vector<Vec> rows;
    for (int i : pick) rows.push_back(verts[i]);
    Vec dir = nullspace_direction(rows, n);
    if (is_zero(dir)) continue;  // linearly dependent subset
    dir = primitive_part(dir);
    // one rational point on the line: append <dir, x> = 0 to make it square
    Mat sq(n, n);
    for (int r = 0; r < n - 1; ++r)
      for (int c = 0; c < n; ++c) sq.at(r, c) = rows[r][c];
    for (int c = 0; c < n; ++c) sq.at(n - 1, c) = dir[c];
    Vec rhs(n, 1);
    rhs[n - 1] = 0;
    auto sol = solve_cramer(sq, rhs);
    if (!sol) continue;
    auto& [num, den] = *sol;
    Int d = den < 0 ? -den : den;
    if (den < 0)
      for (Int& x : num) x = -x;
    // integral points are (num + j*dir)/d for integral quotients; bound j
    // by the dual polytope: <v, x> <= 1 for every vertex v
    bool feas = true;
    // rational interval for j: for each vertex, <v,num>/d + j*<v,dir>/d <= 1
    Int jlo_num = 0, jlo_den = 0, jhi_num = 0, jhi_den = 0;
    bool have_lo = false, have_hi = false;
    for (int vi = 0; vi < m && feas; ++vi) {
      Int a = dot(verts[vi], dir);
      Int c = checked_sub(d, dot(verts[vi], num));  // need j*a <= c
      if (a == 0) {
        if (c < 0) feas = false;
      } else if (a > 0) {
        if (!have_hi || c * jhi_den < jhi_num * a) jhi_num = c, jhi_den = a, have_hi = true;
      } else {
        Int na = -a, nc = -c;  // j >= nc/na
        if (!have_lo || nc * jlo_den > jlo_num * na) jlo_num = nc, jlo_den = na, have_lo = true;
      }
    }
    if (!feas || !have_lo || !have_hi) continue;  // line unbounded: impossible unless degenerate
    // integer j range
    auto floor_div = [](Int a, Int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    auto ceil_div = [](Int a, Int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
    Int jlo = ceil_div(jlo_num, jlo_den), jhi = floor_div(jhi_num, jhi_den);
    for (Int j = jlo; j <= jhi; ++j) {
      Vec x(n);
      bool integral = true;
      for (int c = 0; c < n && integral; ++c) {
        Int t = checked_add(num[c], checked_mul(j, dir[c]));
        if (t % d != 0) integral = false;
        else x[c] = t / d;
      }
      if (!integral || is_zero(x)) continue;
      bool inside = true;
      for (int vi = 0; vi < m && inside; ++vi)
        if (dot(verts[vi], x) > 1) inside = false;
      if (inside) out.insert(std::move(x));
    }
  } while (advance());
  return {out.begin(), out.end()};
}

// Depth-first scan of [-B, B]^n maintaining partial inner products with
// the dual candidates; a prefix is abandoned when fewer than n candidate
// hyperplanes <b, w> = 1 remain reachable.
struct AdditionScan {
  const LatticePolytope* p;
  int n;
  Int B;
  std::vector<Vec> duals;
  std::vector<Vec> normals;              // facet normals, for the outside prune
  std::vector<std::vector<Int>> suffix;  // suffix[bi][d] = sum_{j >= d} |b[j]|
  std::vector<std::vector<Int>> nsuffix;
  std::vector<Int> partial, npartial;
  Vec w;
  std::vector<std::pair<LatticePolytope, MoveRecord>>* out;

  static std::vector<std::vector<Int>> abs_suffixes(const std::vector<Vec>& vs, int n) {
    std::vector<std::vector<Int>> out(vs.size(), std::vector<Int>(n + 1, 0));
    for (size_t i = 0; i < vs.size(); ++i)
      for (int d = n - 1; d >= 0; --d) {
        Int c = vs[i][d];
        out[i][d] = checked_add(out[i][d + 1], c < 0 ? -c : c);
      }
    return out;
  }

  void run() {
    if ((int)duals.size() < n) return;
    for (const auto& f : p->facets()) normals.push_back(f.normal);
    suffix = abs_suffixes(duals, n);
    nsuffix = abs_suffixes(normals, n);
    partial.assign(duals.size(), 0);
    npartial.assign(normals.size(), 0);
    w.assign(n, 0);
    rec(0);
  }

  void step(int d, Int x) {
    w[d] = x;
    for (size_t bi = 0; bi < duals.size(); ++bi) partial[bi] += duals[bi][d] * x;
    for (size_t fi = 0; fi < normals.size(); ++fi) npartial[fi] += normals[fi][d] * x;
    rec(d + 1);
    for (size_t bi = 0; bi < duals.size(); ++bi) partial[bi] -= duals[bi][d] * x;
    for (size_t fi = 0; fi < normals.size(); ++fi) npartial[fi] -= normals[fi][d] * x;
  }

  static Int floor_div(Int a, Int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
  static Int ceil_div(Int a, Int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

  // add 1 to diff[] over the x range where lo <= c*x <= hi, clamped to [-B, B]
  void mark(std::vector<int>& diff, Int c, Int lo, Int hi) {
    Int xlo, xhi;
    if (c == 0) {
      if (lo > 0 || hi < 0) return;
      xlo = -B, xhi = B;
    } else if (c > 0) {
      xlo = ceil_div(lo, c), xhi = floor_div(hi, c);
    } else {
      xlo = ceil_div(hi, c), xhi = floor_div(lo, c);
    }
    xlo = std::max(xlo, -B);
    xhi = std::min(xhi, B);
    if (xlo > xhi) return;
    ++diff[(size_t)(xlo + B)];
    --diff[(size_t)(xhi + B + 1)];
  }

  void rec(int d) {
    if (d == n) {
      leaf();
      return;
    }
    if (d < n - 1) {
      // per-x viability in one pass: count, for each candidate x, the dual
      // hyperplanes still reachable and whether some facet level can reach 2
      size_t W = (size_t)(2 * B + 2);
      std::vector<int> dreach(W, 0), freach(W, 0);
      for (size_t bi = 0; bi < duals.size(); ++bi) {
        Int slack = B * suffix[bi][d + 1], s = partial[bi];
        mark(dreach, duals[bi][d], 1 - s - slack, 1 - s + slack);
      }
      for (size_t fi = 0; fi < normals.size(); ++fi) {
        Int slack = B * nsuffix[fi][d + 1], s = npartial[fi];
        mark(freach, normals[fi][d], 2 - s - slack,
             std::numeric_limits<Int>::max() / 2);
      }
      int dc = 0, fc = 0;
      for (Int x = -B; x <= B; ++x) {
        dc += dreach[(size_t)(x + B)];
        fc += freach[(size_t)(x + B)];
        if (dc >= n && fc >= 1) step(d, x);
      }
      return;
    }
    // last coordinate: only values creating a fresh level-1 equality can
    // matter, unless n equalities are already fixed by the prefix
    int fixed = 0;
    for (size_t bi = 0; bi < duals.size(); ++bi)
      if (duals[bi][d] == 0 && partial[bi] == 1) ++fixed;
    if (fixed >= n) {
      for (Int x = -B; x <= B; ++x) step(d, x);
      return;
    }
    std::set<Int> xs;
    for (size_t bi = 0; bi < duals.size(); ++bi) {
      Int a = duals[bi][d];
      if (a == 0) continue;
      Int r = 1 - partial[bi];
      if (r % a != 0) continue;
      Int x = r / a;
      if (-B <= x && x <= B) xs.insert(x);
    }
    for (Int x : xs) step(d, x);
  }

  void leaf() {
    Int g = 0;
    for (Int c : w) g = std::gcd(g, c < 0 ? -c : c);
    if (g != 1) return;
    int supports = 0;
    for (Int s : partial)
      if (s == 1 && ++supports >= n) break;
    if (supports < n) return;
    if (auto r = i_add(*p, w)) out->push_back(std::move(*r));
  }
};

}  // namespace

std::vector<std::pair<LatticePolytope, MoveRecord>> i_addition_search(const LatticePolytope& p,
                                                                      Int box_bound) {
  if (box_bound < 1) throw precondition_error("i_addition_search requires box_bound >= 1");
  std::vector<std::pair<LatticePolytope, MoveRecord>> out;
  AdditionScan scan;
  scan.p = &p;
  scan.n = p.dim();
  scan.B = box_bound;
  scan.duals = dual_facet_candidates(p);
  scan.out = &out;
  scan.run();
  return out;
}

std::vector<std::string> i_neighbors_in_catalog(const LatticePolytope& p, const Catalog& cat) {
  auto self = cat.find(canonical_form(p));
  if (!self) throw precondition_error("polytope is not a catalog entry");
  std::vector<std::string> out;
  int m = p.num_vertices();
  for (int i = 0; i < cat.size(); ++i) {
    const auto& q = cat.entries[i];
    if (q.num_vertices() == m + 1 && embed_subset(p, q)) out.push_back(cat.ids[i]);
    else if (q.num_vertices() == m - 1 && embed_subset(q, p)) out.push_back(cat.ids[i]);
  }
  return out;
}

}  // namespace fano

#include "fano/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fano {

struct LatticePolytope::Hull {
  std::vector<Facet> facets;
  std::vector<uint32_t> masks;
  bool origin_interior = true;
  bool simplicial = true;
  std::vector<int> non_vertex_points;
};

static int integer_rank(const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  Mat h = hermite_normal_form(Mat::from_rows(rows)).h;
  int r = 0;
  for (int i = 0; i < h.rows; ++i) {
    bool nz = false;
    for (int c = 0; c < h.cols; ++c)
      if (h.at(i, c) != 0) nz = true;
    if (nz) ++r;
  }
  return r;
}

LatticePolytope::LatticePolytope(int dim, std::vector<Vec> vertices) : dim_(dim), verts_(std::move(vertices)) {
  if (dim_ < 1) throw dimension_error("polytope dimension must be positive");
  if ((int)verts_.size() < dim_ + 1) throw validation_error("too few points for a full-dimensional polytope");
  if ((int)verts_.size() > 31) throw validation_error("more than 31 points unsupported");
  for (const auto& v : verts_)
    if ((int)v.size() != dim_) throw dimension_error("vertex dimension mismatch");
  std::set<Vec> seen(verts_.begin(), verts_.end());
  if ((int)seen.size() != (int)verts_.size()) throw validation_error("repeated vertex");
  // affine span: translate by the first point
  std::vector<Vec> diffs;
  for (size_t i = 1; i < verts_.size(); ++i) diffs.push_back(sub(verts_[i], verts_[0]));
  if (integer_rank(diffs) != dim_) throw validation_error("points do not span dimension");
}

LatticePolytope::LatticePolytope(const LatticePolytope& other) : dim_(other.dim_), verts_(other.verts_) {
  std::lock_guard lk(other.hull_mu_);
  hull_ = other.hull_;
}
LatticePolytope::LatticePolytope(LatticePolytope&& other) noexcept
    : dim_(other.dim_), verts_(std::move(other.verts_)) {
  std::lock_guard lk(other.hull_mu_);
  hull_ = std::move(other.hull_);
}
LatticePolytope& LatticePolytope::operator=(const LatticePolytope& other) {
  if (this != &other) {
    std::scoped_lock lk(hull_mu_, other.hull_mu_);
    dim_ = other.dim_;
    verts_ = other.verts_;
    hull_ = other.hull_;
  }
  return *this;
}
LatticePolytope& LatticePolytope::operator=(LatticePolytope&& other) noexcept {
  if (this != &other) {
    std::scoped_lock lk(hull_mu_, other.hull_mu_);
    dim_ = other.dim_;
    verts_ = std::move(other.verts_);
    hull_ = std::move(other.hull_);
  }
  return *this;
}

void LatticePolytope::ensure_hull() const {
  std::lock_guard lk(hull_mu_);
  if (hull_) return;
  {
    auto hull = std::make_shared<Hull>();
    int n = dim_, m = (int)verts_.size();
    std::set<std::pair<Vec, Int>> seen_planes;

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    auto advance = [&]() -> bool {
      int i = n - 1;
      while (i >= 0 && idx[i] == m - n + i) --i;
      if (i < 0) return false;
      ++idx[i];
      for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    };

    do {
      // hyperplane through the n chosen points: normal to their mutual
      // differences (this also finds planes through the origin)
      std::vector<Vec> diffs;
      for (int r = 1; r < n; ++r) diffs.push_back(sub(verts_[idx[r]], verts_[idx[0]]));
      Vec normal = nullspace_direction(diffs, n);
      if (is_zero(normal)) continue;  // affinely dependent selection
      normal = primitive_part(normal);
      Int level = dot(normal, verts_[idx[0]]);
      std::vector<Int> vals(m);
      for (int i = 0; i < m; ++i) vals[i] = dot(normal, verts_[i]);
      Int mx = *std::max_element(vals.begin(), vals.end());
      Int mn = *std::min_element(vals.begin(), vals.end());
      if (mx == level) {
        // keep orientation
      } else if (mn == level) {
        normal = negate(normal);
        level = -level;
        for (auto& v : vals) v = -v;
      } else {
        continue;  // hyperplane cuts through the polytope
      }
      if (!seen_planes.insert({normal, level}).second) continue;
      Facet f;
      f.normal = std::move(normal);
      f.level = level;
      for (int i = 0; i < m; ++i)
        if (vals[i] == level) f.vertex_indices.push_back(i);
      if ((int)f.vertex_indices.size() > n) hull->simplicial = false;
      if (level <= 0) hull->origin_interior = false;
      hull->facets.push_back(std::move(f));
    } while (advance());

    std::sort(hull->facets.begin(), hull->facets.end(),
              [](const Facet& a, const Facet& b) { return a.vertex_indices < b.vertex_indices; });
    std::vector<char> covered(m, 0);
    for (const auto& f : hull->facets) {
      uint32_t mask = 0;
      for (int i : f.vertex_indices) {
        mask |= 1u << i;
        covered[i] = 1;
      }
      hull->masks.push_back(mask);
    }
    for (int i = 0; i < m; ++i)
      if (!covered[i]) hull->non_vertex_points.push_back(i);
    hull_ = std::move(hull);
  }
}

const std::vector<Facet>& LatticePolytope::facets() const {
  ensure_hull();
  if (!hull_->non_vertex_points.empty())
    throw non_vertex_error("listed point " + std::to_string(hull_->non_vertex_points.front()) +
                           " is not a vertex of the hull");
  return hull_->facets;
}

const std::vector<uint32_t>& LatticePolytope::facet_masks() const {
  facets();
  return hull_->masks;
}

bool LatticePolytope::has_interior_origin() const {
  ensure_hull();
  return hull_->origin_interior;
}
bool LatticePolytope::is_simplicial() const {
  ensure_hull();
  return hull_->simplicial;
}
bool LatticePolytope::has_non_vertex_point() const {
  ensure_hull();
  return !hull_->non_vertex_points.empty();
}

bool LatticePolytope::is_reflexive() const {
  ensure_hull();
  if (!hull_->origin_interior || !hull_->non_vertex_points.empty()) return false;
  for (const auto& f : hull_->facets)
    if (f.level != 1) return false;
  return true;
}

bool LatticePolytope::is_smooth_fano() const {
  ensure_hull();
  if (!hull_->origin_interior || !hull_->simplicial || !hull_->non_vertex_points.empty()) return false;
  for (const auto& f : hull_->facets) {
    std::vector<Vec> basis;
    for (int i : f.vertex_indices) basis.push_back(verts_[i]);
    if (!is_unimodular_basis(basis)) return false;
  }
  return true;
}

bool LatticePolytope::is_pseudo_symmetric() const {
  ensure_hull();
  if (!hull_->origin_interior || !hull_->non_vertex_points.empty()) return false;
  std::set<std::set<Vec>> facet_sets;
  for (const auto& f : hull_->facets) {
    std::set<Vec> s;
    for (int i : f.vertex_indices) s.insert(verts_[i]);
    facet_sets.insert(std::move(s));
  }
  for (const auto& s : facet_sets) {
    std::set<Vec> neg;
    for (const auto& v : s) neg.insert(negate(v));
    if (facet_sets.count(neg)) return true;
  }
  return false;
}

bool LatticePolytope::contains_vertex(const Vec& v) const { return vertex_index(v).has_value(); }

std::optional<int> LatticePolytope::vertex_index(const Vec& v) const {
  for (size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i] == v) return (int)i;
  return std::nullopt;
}

bool are_unimodularly_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim()) throw dimension_error("dimension mismatch");
  return canonical_form(p) == canonical_form(q);
}

// integer inverse of a unimodular matrix
static Mat unimodular_inverse(const Mat& m) {
  int n = m.rows;
  Mat inv(n, n);
  for (int c = 0; c < n; ++c) {
    Vec e(n, 0);
    e[c] = 1;
    auto sol = solve_cramer(m, e);
    auto& [num, den] = *sol;
    for (int r = 0; r < n; ++r) {
      if (num[r] % den != 0) throw precondition_error("matrix is not unimodular");
      inv.at(r, c) = num[r] / den;
    }
  }
  return inv;
}

std::optional<UnimodularMap> embed_subset(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.dim() != q.dim()) throw dimension_error("dimension mismatch");
  int n = p.dim();
  if (p.num_vertices() > q.num_vertices()) return std::nullopt;
  const Facet& probe = p.facets().front();
  if ((int)probe.vertex_indices.size() != n) throw precondition_error("probe facet is not simplicial");
  Mat bcols(n, n);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) bcols.at(r, j) = p.vertices()[probe.vertex_indices[j]][r];
  if (std::llabs(determinant(bcols)) != 1) throw precondition_error("probe facet basis is not unimodular");
  Mat binv = unimodular_inverse(bcols);

  std::set<Vec> qverts(q.vertices().begin(), q.vertices().end());
  int mq = q.num_vertices();
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  auto advance = [&]() -> bool {
    int i = n - 1;
    while (i >= 0 && idx[i] == mq - n + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  do {
    Mat sel(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) sel.at(r, c) = q.vertices()[idx[r]][c];
    Int d = determinant(sel);
    if (d != 1 && d != -1) continue;
    std::vector<int> perm = idx;
    std::sort(perm.begin(), perm.end());
    do {
      Mat scols(n, n);
      for (int j = 0; j < n; ++j)
        for (int r = 0; r < n; ++r) scols.at(r, j) = q.vertices()[perm[j]][r];
      Mat u = scols.mul(binv);
      bool ok = true;
      for (const auto& v : p.vertices())
        if (!qverts.count(u.apply(v))) {
          ok = false;
          break;
        }
      if (ok) return UnimodularMap(std::move(u));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (advance());
  return std::nullopt;
}

LatticePolytope free_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (!p.has_interior_origin() || !q.has_interior_origin())
    throw precondition_error("free_sum requires the origin interior to both parts");
  int d = p.dim(), e = q.dim();
  std::vector<Vec> verts;
  for (const auto& a : p.vertices()) {
    Vec v(d + e, 0);
    std::copy(a.begin(), a.end(), v.begin());
    verts.push_back(std::move(v));
  }
  for (const auto& b : q.vertices()) {
    Vec v(d + e, 0);
    std::copy(b.begin(), b.end(), v.begin() + d);
    verts.push_back(std::move(v));
  }
  return LatticePolytope(d + e, std::move(verts));
}

LatticePolytope apply_map(const UnimodularMap& u, const LatticePolytope& p) {
  std::vector<Vec> verts;
  for (const auto& v : p.vertices()) verts.push_back(u.apply(v));
  return LatticePolytope(p.dim(), std::move(verts));
}

}  // namespace fano

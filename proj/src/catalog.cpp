#include "fano/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace fano {

void FamilyParams::validate() const {
  if (a < 2) throw validation_error("family parameter a must be >= 2");
  if (b < 1) throw validation_error("family parameter b must be >= 1");
  if (k < 0) throw validation_error("family parameter k must be >= 0");
  if ((int)l.size() != k) throw validation_error("family parameter l must have k entries");
  if ((int)alpha.size() != k) throw validation_error("family alpha must have k rows");
  if (k == 0) {
    if (b < 2) throw validation_error("k = 0 requires b >= 2");
    return;
  }
  std::set<std::pair<bool, int>> image;
  for (int j = 0; j < k; ++j) {
    if (l[j] < 1) throw validation_error("family parameter l_j must be >= 1");
    if ((int)alpha[j].size() != l[j]) throw validation_error("alpha row j must have l_j slots");
    for (const auto& s : alpha[j]) {
      if (s.q < 1 || s.q > b) throw validation_error("alpha slot index out of range");
      image.insert({s.is_u, s.q});
    }
  }
  if ((int)image.size() != 2 * (int)b)
    throw validation_error("alpha assignment must cover every y_q and u_q");
}

int FamilyParams::dimension() const {
  return (int)(a + 2 * b - 1) + std::accumulate(l.begin(), l.end(), 0);
}
int FamilyParams::vertex_count() const { return dimension() + k + 3; }

std::vector<std::vector<FamilyParams::Alpha>> default_alpha(Int b, const std::vector<int>& l) {
  Int total = std::accumulate(l.begin(), l.end(), 0LL);
  if (total < 2 * b) throw validation_error("too few alpha slots to cover every y_q and u_q");
  std::vector<std::vector<FamilyParams::Alpha>> alpha;
  int pos = 0;  // cycles through y_1, u_1, y_2, u_2, ...
  for (int lj : l) {
    std::vector<FamilyParams::Alpha> row;
    for (int i = 0; i < lj; ++i) {
      row.push_back({pos % 2 == 1, pos / 2 + 1});
      pos = (pos + 1) % (int)(2 * b);
    }
    alpha.push_back(std::move(row));
  }
  return alpha;
}

static Vec unit(int n, int i) {  // 1-based
  Vec v(n, 0);
  v[i - 1] = 1;
  return v;
}

LatticePolytope make_T(int n) {
  if (n < 1) throw validation_error("make_T requires n >= 1");
  std::vector<Vec> verts;
  for (int i = 1; i <= n; ++i) verts.push_back(unit(n, i));
  verts.push_back(Vec(n, -1));
  return LatticePolytope(n, std::move(verts));
}

static LatticePolytope make_V_common(int two_k, bool with_negated_long) {
  if (two_k < 2 || two_k % 2 != 0) throw validation_error("argument must be a positive even dimension");
  std::vector<Vec> verts;
  for (int i = 1; i <= two_k; ++i) {
    verts.push_back(unit(two_k, i));
    verts.push_back(negate(unit(two_k, i)));
  }
  verts.push_back(Vec(two_k, 1));
  if (with_negated_long) verts.push_back(Vec(two_k, -1));
  return LatticePolytope(two_k, std::move(verts));
}

LatticePolytope make_V(int two_k) { return make_V_common(two_k, true); }
LatticePolytope make_V_tilde(int two_k) { return make_V_common(two_k, false); }

LatticePolytope make_family(const FamilyParams& params) {
  params.validate();
  Int a = params.a, b = params.b;
  int n = params.dimension();
  std::vector<Vec> yv, uv;
  // core coordinates
  std::vector<Vec> verts;
  for (Int i = 1; i <= a - 1; ++i) verts.push_back(unit(n, (int)i));
  {
    Vec va(n, 0);
    for (Int i = 1; i <= a + 2 * b - 2; ++i) va[i - 1] = -1;
    va[a + 2 * b - 2] = a + b - 1;
    verts.push_back(std::move(va));
  }
  for (Int j = 1; j <= b - 1; ++j) yv.push_back(unit(n, (int)(a - 1 + j)));
  {
    Vec yb(n, 0);
    for (Int i = a + b - 1; i <= a + 2 * b - 2; ++i) yb[i - 1] = 1;
    yv.push_back(std::move(yb));
  }
  Vec z = negate(unit(n, (int)(a + 2 * b - 1)));
  Vec t = unit(n, (int)(a + 2 * b - 1));
  for (Int j = 1; j <= b - 1; ++j) uv.push_back(unit(n, (int)(a + b - 1 + j)));
  {
    Vec ub(n, 0);
    for (Int i = a; i <= a + b - 1; ++i) ub[i - 1] = 1;
    ub[a + 2 * b - 2] = -1;
    uv.push_back(std::move(ub));
  }
  for (auto& y : yv) verts.push_back(y);
  verts.push_back(z);
  verts.push_back(t);
  for (auto& u : uv) verts.push_back(u);
  // w blocks
  Int base = a + 2 * b - 1;
  for (int j = 0; j < params.k; ++j) {
    Int lj = params.l[j];
    for (Int i = 1; i <= lj; ++i) verts.push_back(unit(n, (int)(base + i)));
    Vec wlast(n, 0);
    for (Int i = 1; i <= lj; ++i) wlast[base + i - 1] = -1;
    for (const auto& s : params.alpha[j]) wlast = add(wlast, s.is_u ? uv[s.q - 1] : yv[s.q - 1]);
    verts.push_back(std::move(wlast));
    base += lj;
  }
  return LatticePolytope(n, std::move(verts));
}

LatticePolytope make_isolated_pic3(Int a, Int b) {
  if (a < 2 || b < 2) throw validation_error("make_isolated_pic3 requires a >= 2 and b >= 2");
  FamilyParams params;
  params.a = a;
  params.b = b;
  params.k = 0;
  return make_family(params);
}

FamilyParams isolated_params(int n, int rho) {
  if (n < 5 || rho < 3 || rho > n) throw validation_error("isolated_params requires n >= 5 and 3 <= rho <= n");
  FamilyParams params;
  if (rho == 3) {
    params.a = n - 3;
    params.b = 2;
    params.k = 0;
    return params;
  }
  if (rho == 4) {
    params.a = n - 3;
    params.b = 1;
    params.k = 1;
    params.l = {2};
  } else {
    params.a = n - rho + 2;
    params.b = 1;
    params.k = rho - 3;
    params.l.assign(params.k, 1);
  }
  params.alpha = default_alpha(params.b, params.l);
  params.validate();
  return params;
}

LatticePolytope make_remark_example_7d() {
  const int n = 7;
  auto e = [&](int i) { return unit(n, i); };
  std::vector<Vec> verts = {
      e(1),
      e(2),
      e(3),
      e(4),
      e(5),
      e(6),
      e(7),
      negate(e(7)),
      add(negate(e(1)), e(7)),
      add(negate(e(2)), e(7)),
      sub(e(2), e(7)),
      add(negate(e(3)), e(6)),
      sub(e(2), e(6)),
      add(sub(negate(e(2)), e(4)), e(6)),
      sub(sub(e(2), e(5)), e(7)),
  };
  return LatticePolytope(n, std::move(verts));
}

std::optional<int> Catalog::find(const CanonicalKey& key) const {
  if (index_.size() != keys.size()) {
    index_.clear();
    for (int i = 0; i < (int)keys.size(); ++i) index_[keys[i]] = i;
  }
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int catalog_insert(Catalog& cat, LatticePolytope p, const CanonicalKey& key, std::string id) {
  if (auto idx = cat.find(key)) return *idx;
  cat.entries.push_back(std::move(p));
  cat.keys.push_back(key);
  cat.ids.push_back(std::move(id));
  return cat.size() - 1;
}

std::string polytope_to_text(const LatticePolytope& p, const std::string& id) {
  std::ostringstream out;
  out << "dim " << p.dim() << " vertices " << p.num_vertices() << " id " << id << "\n";
  for (const auto& v : p.vertices()) {
    for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << "\n";
  }
  return out.str();
}

namespace {

struct RawRecord {
  int dim = 0;
  std::vector<Vec> verts;
  std::string id;
  int header_line = 0;
};

std::vector<RawRecord> parse_records(std::istream& in) {
  std::vector<RawRecord> records;
  std::string line;
  int lineno = 0;
  std::optional<RawRecord> cur;
  int expect = 0;
  auto flush = [&]() {
    if (!cur) return;
    if ((int)cur->verts.size() != expect)
      throw parse_error("record truncated: expected " + std::to_string(expect) + " vertex lines", lineno);
    records.push_back(std::move(*cur));
    cur.reset();
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' ')) trimmed.pop_back();
    if (trimmed.empty()) {
      flush();
      continue;
    }
    if (!cur) {
      std::istringstream hs(trimmed);
      std::string kw_dim, kw_v, kw_id;
      RawRecord r;
      r.header_line = lineno;
      int m = 0;
      if (!(hs >> kw_dim >> r.dim >> kw_v >> m) || kw_dim != "dim" || kw_v != "vertices")
        throw parse_error("malformed record header", lineno);
      if (hs >> kw_id) {
        if (kw_id != "id" || !(hs >> r.id)) throw parse_error("malformed record header", lineno);
      }
      if (r.dim < 1 || m < r.dim + 1) throw parse_error("implausible dim/vertex counts in header", lineno);
      expect = m;
      cur = std::move(r);
    } else {
      std::istringstream vs(trimmed);
      Vec v;
      Int x;
      while (vs >> x) v.push_back(x);
      if (!vs.eof()) throw parse_error("non-integer vertex coordinate", lineno);
      if ((int)v.size() != cur->dim) throw parse_error("vertex line has wrong coordinate count", lineno);
      if ((int)cur->verts.size() >= expect) throw parse_error("too many vertex lines in record", lineno);
      cur->verts.push_back(std::move(v));
    }
  }
  ++lineno;
  flush();
  return records;
}

}  // namespace

LatticePolytope polytope_from_text(const std::string& text) {
  std::istringstream in(text);
  auto records = parse_records(in);
  if (records.size() != 1) throw parse_error("expected exactly one polytope record", 1);
  return LatticePolytope(records[0].dim, std::move(records[0].verts));
}

Catalog parse_catalog(std::istream& in) {
  auto records = parse_records(in);
  if (records.empty()) throw parse_error("empty catalog", 1);
  Catalog cat;
  cat.dim = records[0].dim;
  for (auto& r : records) {
    if (r.dim != cat.dim) throw parse_error("mixed dimensions in catalog", r.header_line);
    std::string id = r.id.empty() ? ("rec" + std::to_string(r.header_line)) : r.id;
    LatticePolytope p = [&] {
      try {
        return LatticePolytope(r.dim, std::move(r.verts));
      } catch (const validation_error& e) {
        throw parse_error(std::string("record ") + id + ": " + e.what(), r.header_line);
      }
    }();
    if (!p.is_smooth_fano())
      throw validation_error("catalog record " + id + " is not a smooth Fano polytope");
    CanonicalKey key = canonical_form(p);
    catalog_insert(cat, std::move(p), key, std::move(id));
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open catalog file: " + path);
  return parse_catalog(in);
}

void serialize_catalog(const Catalog& cat, std::ostream& out) {
  std::vector<int> order(cat.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_pair(cat.entries[a].num_vertices(), cat.keys[a]) <
           std::make_pair(cat.entries[b].num_vertices(), cat.keys[b]);
  });
  bool first = true;
  for (int i : order) {
    if (!first) out << "\n";
    out << polytope_to_text(cat.entries[i], cat.ids[i]);
    first = false;
  }
}

void save_catalog(const Catalog& cat, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot open output file: " + path);
  serialize_catalog(cat, out);
}

}  // namespace fano

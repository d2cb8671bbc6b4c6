#include "fano.h"

#include <cstring>
#include <sstream>
#include <string>

#include <json.hpp>

#include "fano/classes.hpp"
#include "fano/primitive.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Everything crossing the boundary funnels through here: library exceptions
// become status codes, anything else is an internal fault.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const fano::overflow_error& e) {
    g_last_error = e.what();
    return FANO_ERR_INTERNAL;
  } catch (const fano::inconsistency_error& e) {
    g_last_error = e.what();
    return FANO_ERR_INTERNAL;
  } catch (const fano::incomplete_catalog_error& e) {
    g_last_error = e.what();
    return FANO_ERR_INTERNAL;
  } catch (const fano::error& e) {
    g_last_error = e.what();
    return FANO_ERR_INPUT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FANO_ERR_INTERNAL;
  }
}

int input_error(const std::string& msg) {
  g_last_error = msg;
  return FANO_ERR_INPUT;
}

fano::Relation to_relation(int r) {
  if (r != FANO_RELATION_F && r != FANO_RELATION_I)
    throw fano::precondition_error("relation must be FANO_RELATION_F or FANO_RELATION_I");
  return r == FANO_RELATION_F ? fano::Relation::F : fano::Relation::I;
}

}  // namespace

struct fano_polytope {
  fano::LatticePolytope p;
};
struct fano_catalog {
  fano::Catalog cat;
};
struct fano_graph {
  fano::EquivGraph g;
};

extern "C" {

const char* fano_last_error(void) { return g_last_error.c_str(); }
void fano_string_free(char* s) { std::free(s); }

int fano_polytope_from_vertices(int dim, int nverts, const long long* coords,
                                fano_polytope** out) {
  if (!coords || !out) return input_error("null argument");
  return guarded([&] {
    std::vector<fano::Vec> verts(nverts);
    for (int i = 0; i < nverts; ++i) verts[i].assign(coords + i * dim, coords + (i + 1) * dim);
    *out = new fano_polytope{fano::LatticePolytope(dim, std::move(verts))};
    return FANO_OK;
  });
}

int fano_polytope_parse(const char* text, fano_polytope** out) {
  if (!text || !out) return input_error("null argument");
  return guarded([&] {
    *out = new fano_polytope{fano::polytope_from_text(text)};
    return FANO_OK;
  });
}

void fano_polytope_free(fano_polytope* p) { delete p; }

int fano_polytope_dim(const fano_polytope* p) { return p ? p->p.dim() : 0; }
int fano_polytope_num_vertices(const fano_polytope* p) { return p ? p->p.num_vertices() : 0; }

int fano_polytope_vertex(const fano_polytope* p, int index, long long* coords_out) {
  if (!p || !coords_out) return input_error("null argument");
  if (index < 0 || index >= p->p.num_vertices()) return input_error("vertex index out of range");
  const auto& v = p->p.vertices()[index];
  std::copy(v.begin(), v.end(), coords_out);
  return FANO_OK;
}

#define FANO_PREDICATE(name, expr)                              \
  int name(const fano_polytope* p, int* out) {                  \
    if (!p || !out) return input_error("null argument");        \
    return guarded([&] {                                        \
      *out = (expr) ? 1 : 0;                                    \
      return FANO_OK;                                           \
    });                                                         \
  }

FANO_PREDICATE(fano_polytope_is_smooth_fano, p->p.is_smooth_fano())
FANO_PREDICATE(fano_polytope_is_reflexive, p->p.is_reflexive())
FANO_PREDICATE(fano_polytope_is_simplicial, p->p.is_simplicial())
FANO_PREDICATE(fano_polytope_is_pseudo_symmetric, p->p.is_pseudo_symmetric())

#undef FANO_PREDICATE

int fano_polytope_canonical_key(const fano_polytope* p, char** out) {
  if (!p || !out) return input_error("null argument");
  return guarded([&] {
    *out = dup_string(fano::canonical_form(p->p));
    return FANO_OK;
  });
}

int fano_polytope_to_text(const fano_polytope* p, const char* id, char** out) {
  if (!p || !out) return input_error("null argument");
  return guarded([&] {
    *out = dup_string(fano::polytope_to_text(p->p, id ? id : "p"));
    return FANO_OK;
  });
}

int fano_equivalent(const fano_polytope* p, const fano_polytope* q, int* out) {
  if (!p || !q || !out) return input_error("null argument");
  return guarded([&] {
    *out = fano::are_unimodularly_equivalent(p->p, q->p) ? 1 : 0;
    return FANO_OK;
  });
}

#define FANO_MAKER(name, expr)                      \
  return guarded([&] {                              \
    if (!out) throw fano::precondition_error("null argument"); \
    *out = new fano_polytope{expr};                 \
    return FANO_OK;                                 \
  })

int fano_make_T(int n, fano_polytope** out) { FANO_MAKER(fano_make_T, fano::make_T(n)); }
int fano_make_V(int two_k, fano_polytope** out) { FANO_MAKER(fano_make_V, fano::make_V(two_k)); }
int fano_make_V_tilde(int two_k, fano_polytope** out) {
  FANO_MAKER(fano_make_V_tilde, fano::make_V_tilde(two_k));
}
int fano_make_isolated_pic3(long long a, long long b, fano_polytope** out) {
  FANO_MAKER(fano_make_isolated_pic3, fano::make_isolated_pic3(a, b));
}
int fano_make_isolated(int n, int rho, fano_polytope** out) {
  FANO_MAKER(fano_make_isolated, fano::make_family(fano::isolated_params(n, rho)));
}
int fano_make_remark_7d(fano_polytope** out) {
  FANO_MAKER(fano_make_remark_7d, fano::make_remark_example_7d());
}
int fano_make_family(long long a, long long b, int k, const int* l, fano_polytope** out) {
  if (k > 0 && !l) return input_error("null argument");
  return guarded([&] {
    if (!out) throw fano::precondition_error("null argument");
    fano::FamilyParams params;
    params.a = a;
    params.b = b;
    params.k = k;
    params.l.assign(l, l + k);
    if (k > 0) params.alpha = fano::default_alpha(b, params.l);
    *out = new fano_polytope{fano::make_family(params)};
    return FANO_OK;
  });
}

#undef FANO_MAKER

int fano_free_sum(const fano_polytope* p, const fano_polytope* q, fano_polytope** out) {
  if (!p || !q || !out) return input_error("null argument");
  return guarded([&] {
    *out = new fano_polytope{fano::free_sum(p->p, q->p)};
    return FANO_OK;
  });
}

int fano_relations_text(const fano_polytope* p, char** out) {
  if (!p || !out) return input_error("null argument");
  return guarded([&] {
    auto names = fano::default_vertex_names(p->p.num_vertices());
    std::ostringstream os;
    for (const auto& pc : fano::primitive_collections(p->p))
      os << fano::format_relation(pc, names) << "  degree=" << pc.degree << "\n";
    *out = dup_string(os.str());
    return FANO_OK;
  });
}

int fano_match_pattern(const fano_polytope* p, const char* pattern, int* matched_out, char** out) {
  if (!p || !pattern || !matched_out || !out) return input_error("null argument");
  return guarded([&] {
    std::string pat = pattern;
    std::ostringstream os;
    bool matched = false;
    if (pat == "pic2") {
      try {
        auto m = fano::classify_pic2(p->p);
        matched = true;
        os << "pic2 k=" << m.k << " zero_part=" << m.zero_part.size() << " a=(";
        for (size_t i = 0; i < m.a.size(); ++i) os << (i ? "," : "") << m.a[i];
        os << ")";
      } catch (const fano::precondition_error&) {
      }
    } else if (pat == "pic3") {
      try {
        auto m = fano::classify_pic3(p->p);
        matched = true;
        os << (m.kind == fano::Pic3Pattern::Case::three_disjoint ? "pic3 three-disjoint"
                                                                 : "pic3 five-collections");
        os << " p=(";
        for (int i = 0; i < 5; ++i) os << (i ? "," : "") << m.p[i];
        os << ")";
      } catch (const fano::precondition_error&) {
      }
    } else if (pat == "isolated") {
      try {
        if (auto m = fano::match_isolated_pattern(p->p)) {
          matched = true;
          os << "isolated a=" << m->a << " b=" << m->b;
        }
      } catch (const fano::precondition_error&) {
      }
    } else if (pat == "family") {
      if (auto m = fano::match_family_pattern(p->p)) {
        matched = true;
        os << "family a=" << m->params.a << " b=" << m->params.b << " k=" << m->params.k << " l=(";
        for (size_t i = 0; i < m->params.l.size(); ++i) os << (i ? "," : "") << m->params.l[i];
        os << ")";
      }
    } else {
      throw fano::precondition_error("unknown pattern: " + pat);
    }
    *matched_out = matched ? 1 : 0;
    *out = dup_string(os.str());
    return FANO_OK;
  });
}

int fano_is_isolated_boxed(const fano_polytope* p, int relation, long long box, int* out) {
  if (!p || !out) return input_error("null argument");
  return guarded([&] {
    auto rel = to_relation(relation);
    bool isolated;
    if (rel == fano::Relation::F) {
      isolated = fano::f_neighbors(p->p).empty();
    } else {
      isolated = fano::i_removal_neighbors(p->p).empty() &&
                 fano::i_addition_search(p->p, box).empty();
    }
    *out = isolated ? 1 : 0;
    return FANO_OK;
  });
}

int fano_is_isolated_in_catalog(const fano_polytope* p, const fano_catalog* cat, int relation,
                                int* out) {
  if (!p || !cat || !out) return input_error("null argument");
  return guarded([&] {
    auto rel = to_relation(relation);
    *out = (rel == fano::Relation::F ? fano::is_F_isolated(p->p, cat->cat)
                                     : fano::is_I_isolated(p->p, cat->cat))
               ? 1
               : 0;
    return FANO_OK;
  });
}

int fano_catalog_load(const char* path, fano_catalog** out) {
  if (!path || !out) return input_error("null argument");
  return guarded([&] {
    *out = new fano_catalog{fano::load_catalog(path)};
    return FANO_OK;
  });
}

int fano_catalog_save(const fano_catalog* cat, const char* path) {
  if (!cat || !path) return input_error("null argument");
  return guarded([&] {
    fano::save_catalog(cat->cat, path);
    return FANO_OK;
  });
}

void fano_catalog_free(fano_catalog* cat) { delete cat; }
int fano_catalog_size(const fano_catalog* cat) { return cat ? cat->cat.size() : 0; }
int fano_catalog_dim(const fano_catalog* cat) { return cat ? cat->cat.dim : 0; }

int fano_catalog_entry(const fano_catalog* cat, int index, fano_polytope** out) {
  if (!cat || !out) return input_error("null argument");
  if (index < 0 || index >= cat->cat.size()) return input_error("catalog index out of range");
  return guarded([&] {
    *out = new fano_polytope{cat->cat.entries[index]};
    return FANO_OK;
  });
}

int fano_catalog_id(const fano_catalog* cat, int index, char** out) {
  if (!cat || !out) return input_error("null argument");
  if (index < 0 || index >= cat->cat.size()) return input_error("catalog index out of range");
  *out = dup_string(cat->cat.ids[index]);
  return FANO_OK;
}

int fano_catalog_find(const fano_catalog* cat, const fano_polytope* p, int* index_out) {
  if (!cat || !p || !index_out) return input_error("null argument");
  return guarded([&] {
    auto idx = cat->cat.find(fano::canonical_form(p->p));
    *index_out = idx ? *idx : -1;
    return FANO_OK;
  });
}

int fano_enumerate(int n, long long box, int seed_isolated, long long* box_used_out,
                   fano_catalog** out) {
  if (!out) return input_error("null argument");
  return guarded([&] {
    std::vector<fano::LatticePolytope> seeds;
    if (seed_isolated)
      for (int rho = 3; rho <= n; ++rho)
        seeds.push_back(fano::make_family(fano::isolated_params(n, rho)));
    if (box > 0) {
      *out = new fano_catalog{fano::enumerate_low_dim(n, box, seeds)};
      if (box_used_out) *box_used_out = box;
    } else {
      auto [cat, used] = fano::enumerate_stable(n, seeds);
      *out = new fano_catalog{std::move(cat)};
      if (box_used_out) *box_used_out = used;
    }
    return FANO_OK;
  });
}

int fano_graph_build(const fano_catalog* cat, int relation, fano_graph** out) {
  if (!cat || !out) return input_error("null argument");
  return guarded([&] {
    *out = new fano_graph{fano::build_graph(cat->cat, to_relation(relation))};
    return FANO_OK;
  });
}

void fano_graph_free(fano_graph* g) { delete g; }

int fano_graph_dot(const fano_graph* g, char** out) {
  if (!g || !out) return input_error("null argument");
  return guarded([&] {
    *out = dup_string(fano::export_dot(g->g));
    return FANO_OK;
  });
}

int fano_graph_json(const fano_graph* g, char** out) {
  if (!g || !out) return input_error("null argument");
  return guarded([&] {
    *out = dup_string(fano::export_json(g->g));
    return FANO_OK;
  });
}

int fano_graph_report_json(const fano_graph* g, char** out) {
  if (!g || !out) return input_error("null argument");
  return guarded([&] {
    auto rep = fano::report(g->g);
    nlohmann::json j;
    j["relation"] = rep.relation == fano::Relation::F ? "F" : "I";
    j["component_count"] = rep.component_count;
    j["component_sizes"] = rep.component_sizes;
    j["non_simplex_by_nverts"] = nlohmann::json::object();
    for (auto& [m, c] : rep.non_t_by_nverts)
      j["non_simplex_by_nverts"][std::to_string(m)] = c;
    j["isolated_ids"] = rep.isolated_ids;
    *out = dup_string(j.dump(2));
    return FANO_OK;
  });
}

}  // extern "C"

/* C interface to the smooth Fano polytope library.
 *
 * All functions return a status code (FANO_OK on success); boolean verdicts
 * and constructed objects come back through out-parameters. On failure,
 * fano_last_error() describes the problem (thread-local). Strings returned
 * through char** are owned by the caller and released with fano_string_free.
 */
#ifndef FANO_H
#define FANO_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
  FANO_OK = 0,
  FANO_ERR_INPUT = 2,    /* invalid argument, parse failure, precondition */
  FANO_ERR_INTERNAL = 3, /* overflow, inconsistency, unexpected state */
};

enum { FANO_RELATION_F = 0, FANO_RELATION_I = 1 };

typedef struct fano_polytope fano_polytope;
typedef struct fano_catalog fano_catalog;
typedef struct fano_graph fano_graph;

const char* fano_last_error(void);
void fano_string_free(char* s);

/* --- polytopes --- */
int fano_polytope_from_vertices(int dim, int nverts, const long long* coords,
                                fano_polytope** out);
int fano_polytope_parse(const char* text, fano_polytope** out);
void fano_polytope_free(fano_polytope* p);
int fano_polytope_dim(const fano_polytope* p);
int fano_polytope_num_vertices(const fano_polytope* p);
int fano_polytope_vertex(const fano_polytope* p, int index, long long* coords_out);
int fano_polytope_is_smooth_fano(const fano_polytope* p, int* out);
int fano_polytope_is_reflexive(const fano_polytope* p, int* out);
int fano_polytope_is_simplicial(const fano_polytope* p, int* out);
int fano_polytope_is_pseudo_symmetric(const fano_polytope* p, int* out);
int fano_polytope_canonical_key(const fano_polytope* p, char** out);
int fano_polytope_to_text(const fano_polytope* p, const char* id, char** out);
int fano_equivalent(const fano_polytope* p, const fano_polytope* q, int* out);

/* --- constructions --- */
int fano_make_T(int n, fano_polytope** out);
int fano_make_V(int two_k, fano_polytope** out);
int fano_make_V_tilde(int two_k, fano_polytope** out);
int fano_make_isolated_pic3(long long a, long long b, fano_polytope** out);
/* the I-isolated representative for (dimension n, Picard number rho) */
int fano_make_isolated(int n, int rho, fano_polytope** out);
/* general family member: k extra simplex blocks of sizes l[0..k-1], slot
 * assignment chosen round-robin */
int fano_make_family(long long a, long long b, int k, const int* l, fano_polytope** out);
int fano_make_remark_7d(fano_polytope** out);
int fano_free_sum(const fano_polytope* p, const fano_polytope* q, fano_polytope** out);

/* --- primitive relations --- */
/* one formatted relation per line */
int fano_relations_text(const fano_polytope* p, char** out);
/* pattern in {"pic2", "pic3", "isolated", "family"}; *matched_out gets 0/1;
 * on a match *out describes the pattern and roles */
int fano_match_pattern(const fano_polytope* p, const char* pattern, int* matched_out,
                       char** out);

/* --- isolation --- */
/* bounded search: no F-/I-move inside the coordinate box [-box,box]^n */
int fano_is_isolated_boxed(const fano_polytope* p, int relation, long long box, int* out);
int fano_is_isolated_in_catalog(const fano_polytope* p, const fano_catalog* cat,
                                int relation, int* out);

/* --- catalogs --- */
int fano_catalog_load(const char* path, fano_catalog** out);
int fano_catalog_save(const fano_catalog* cat, const char* path);
void fano_catalog_free(fano_catalog* cat);
int fano_catalog_size(const fano_catalog* cat);
int fano_catalog_dim(const fano_catalog* cat);
int fano_catalog_entry(const fano_catalog* cat, int index, fano_polytope** out);
int fano_catalog_id(const fano_catalog* cat, int index, char** out);
int fano_catalog_find(const fano_catalog* cat, const fano_polytope* p, int* index_out);
/* closure of single-vertex moves from the simplex (optionally seeded with the
 * isolated constructions) with additions searched in [-box,box]^n; box <= 0
 * escalates automatically until the count stabilizes, reporting the final
 * box through box_used_out (may be null) */
int fano_enumerate(int n, long long box, int seed_isolated, long long* box_used_out,
                   fano_catalog** out);

/* --- equivalence graphs --- */
int fano_graph_build(const fano_catalog* cat, int relation, fano_graph** out);
void fano_graph_free(fano_graph* g);
int fano_graph_dot(const fano_graph* g, char** out);
int fano_graph_json(const fano_graph* g, char** out);
/* JSON aggregate: component count/sizes, non-simplex-component member counts
 * by vertex count, isolated ids */
int fano_graph_report_json(const fano_graph* g, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FANO_H */

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano.h"

namespace {

constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

int fail(int status) {
  std::cerr << "error: " << fano_last_error() << "\n";
  return status ? status : FANO_ERR_INTERNAL;
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  fano_string_free(s);
  return out;
}

using polytope_ptr = std::unique_ptr<fano_polytope, decltype(&fano_polytope_free)>;
using catalog_ptr = std::unique_ptr<fano_catalog, decltype(&fano_catalog_free)>;
using graph_ptr = std::unique_ptr<fano_graph, decltype(&fano_graph_free)>;

// "-" reads stdin
int read_polytope(const std::string& path, polytope_ptr& out) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open " << path << "\n";
      return kExitUsage;
    }
    buf << in.rdbuf();
  }
  fano_polytope* p = nullptr;
  if (int rc = fano_polytope_parse(buf.str().c_str(), &p)) return fail(rc);
  out = polytope_ptr(p, &fano_polytope_free);
  return 0;
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open " << path << "\n";
    return kExitUsage;
  }
  out << text;
  return 0;
}

int cmd_verify(const std::string& input, bool as_json) {
  polytope_ptr p(nullptr, &fano_polytope_free);
  if (int rc = read_polytope(input, p)) return rc;
  int reflexive = 0, simplicial = 0, smooth = 0, pseudo = 0;
  if (int rc = fano_polytope_is_reflexive(p.get(), &reflexive)) return fail(rc);
  if (int rc = fano_polytope_is_simplicial(p.get(), &simplicial)) return fail(rc);
  if (int rc = fano_polytope_is_smooth_fano(p.get(), &smooth)) return fail(rc);
  if (int rc = fano_polytope_is_pseudo_symmetric(p.get(), &pseudo)) return fail(rc);
  if (as_json) {
    nlohmann::json j = {{"dim", fano_polytope_dim(p.get())},
                        {"vertices", fano_polytope_num_vertices(p.get())},
                        {"reflexive", (bool)reflexive},
                        {"simplicial", (bool)simplicial},
                        {"smooth_fano", (bool)smooth},
                        {"pseudo_symmetric", (bool)pseudo}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "dim: " << fano_polytope_dim(p.get())
              << "\nvertices: " << fano_polytope_num_vertices(p.get())
              << "\nreflexive: " << (reflexive ? "true" : "false")
              << "\nsimplicial: " << (simplicial ? "true" : "false")
              << "\nsmooth_fano: " << (smooth ? "true" : "false")
              << "\npseudo_symmetric: " << (pseudo ? "true" : "false") << "\n";
  }
  return smooth ? 0 : kExitFalse;
}

int cmd_relations(const std::string& input, const std::string& pattern) {
  polytope_ptr p(nullptr, &fano_polytope_free);
  if (int rc = read_polytope(input, p)) return rc;
  char* text = nullptr;
  if (int rc = fano_relations_text(p.get(), &text)) return fail(rc);
  std::cout << take_string(text);
  if (pattern.empty()) return 0;
  int matched = 0;
  char* desc = nullptr;
  if (int rc = fano_match_pattern(p.get(), pattern.c_str(), &matched, &desc)) return fail(rc);
  std::string d = take_string(desc);
  if (!matched) {
    std::cout << "no match\n";
    return kExitFalse;
  }
  std::cout << d << "\n";
  return 0;
}

int cmd_construct(const std::vector<std::string>& args) {
  auto arg_int = [&](size_t i) -> long long {
    if (i >= args.size()) throw CLI::ValidationError("missing constructor parameter");
    return std::stoll(args[i]);
  };
  fano_polytope* p = nullptr;
  int rc;
  const std::string& name = args.empty() ? "" : args[0];
  try {
    if (name == "T") rc = fano_make_T((int)arg_int(1), &p);
    else if (name == "V") rc = fano_make_V((int)arg_int(1), &p);
    else if (name == "Vt") rc = fano_make_V_tilde((int)arg_int(1), &p);
    else if (name == "pic3") rc = fano_make_isolated_pic3(arg_int(1), arg_int(2), &p);
    else if (name == "cor45") rc = fano_make_isolated((int)arg_int(1), (int)arg_int(2), &p);
    else if (name == "remark7d") rc = fano_make_remark_7d(&p);
    else if (name == "family") {
      long long a = arg_int(1), b = arg_int(2);
      int k = (int)arg_int(3);
      std::vector<int> l;
      for (int j = 0; j < k; ++j) l.push_back((int)arg_int(4 + j));
      rc = fano_make_family(a, b, k, l.data(), &p);
    } else if (name == "freesum") {
      if (args.size() < 3) throw CLI::ValidationError("freesum takes two polytope files");
      polytope_ptr f1(nullptr, &fano_polytope_free), f2(nullptr, &fano_polytope_free);
      if (int r = read_polytope(args[1], f1)) return r;
      if (int r = read_polytope(args[2], f2)) return r;
      rc = fano_free_sum(f1.get(), f2.get(), &p);
    } else {
      std::cerr << "error: unknown construction '" << name << "'\n";
      return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (rc) return fail(rc);
  polytope_ptr guard(p, &fano_polytope_free);
  char* text = nullptr;
  if ((rc = fano_polytope_to_text(p, name.c_str(), &text))) return fail(rc);
  std::cout << take_string(text);
  return 0;
}

int cmd_isolate(const std::string& input, const std::string& catalog_path, long long box) {
  polytope_ptr p(nullptr, &fano_polytope_free);
  if (int rc = read_polytope(input, p)) return rc;
  int smooth = 0;
  if (int rc = fano_polytope_is_smooth_fano(p.get(), &smooth)) return fail(rc);
  if (!smooth) {
    std::cerr << "error: input is not a smooth Fano polytope\n";
    return kExitUsage;
  }
  int f_iso = 0, i_iso = 0;
  if (!catalog_path.empty()) {
    fano_catalog* cat = nullptr;
    if (int rc = fano_catalog_load(catalog_path.c_str(), &cat)) return fail(rc);
    catalog_ptr guard(cat, &fano_catalog_free);
    if (int rc = fano_is_isolated_in_catalog(p.get(), cat, FANO_RELATION_F, &f_iso))
      return fail(rc);
    if (int rc = fano_is_isolated_in_catalog(p.get(), cat, FANO_RELATION_I, &i_iso))
      return fail(rc);
    std::cout << "F-isolated: " << (f_iso ? "true" : "false") << " (exact)\n";
    std::cout << "I-isolated: " << (i_iso ? "true" : "false") << " (exact)\n";
  } else {
    if (int rc = fano_is_isolated_boxed(p.get(), FANO_RELATION_F, box, &f_iso)) return fail(rc);
    if (int rc = fano_is_isolated_boxed(p.get(), FANO_RELATION_I, box, &i_iso)) return fail(rc);
    std::cout << "F-isolated: " << (f_iso ? "true" : "false") << " (exact)\n";
    std::cout << "I-isolated: " << (i_iso ? "true" : "false") << " (bounded(" << box << "))\n";
  }
  return (f_iso && i_iso) ? 0 : kExitFalse;
}

int cmd_graph(const std::string& catalog_path, const std::string& relation,
              const std::string& dot_path, const std::string& json_path, bool with_report) {
  fano_catalog* cat = nullptr;
  if (int rc = fano_catalog_load(catalog_path.c_str(), &cat)) return fail(rc);
  catalog_ptr cguard(cat, &fano_catalog_free);
  int rel = relation == "I" ? FANO_RELATION_I : FANO_RELATION_F;
  fano_graph* g = nullptr;
  if (int rc = fano_graph_build(cat, rel, &g)) return fail(rc);
  graph_ptr gguard(g, &fano_graph_free);
  if (!dot_path.empty()) {
    char* text = nullptr;
    if (int rc = fano_graph_dot(g, &text)) return fail(rc);
    if (int rc = write_text(dot_path, take_string(text))) return rc;
  }
  if (!json_path.empty()) {
    char* text = nullptr;
    if (int rc = fano_graph_json(g, &text)) return fail(rc);
    if (int rc = write_text(json_path, take_string(text))) return rc;
  }
  if (with_report || (dot_path.empty() && json_path.empty())) {
    char* text = nullptr;
    if (int rc = fano_graph_report_json(g, &text)) return fail(rc);
    std::cout << take_string(text) << "\n";
  }
  return 0;
}

int cmd_enumerate(int n, long long box, const std::string& out_path, bool force,
                  bool seed_isolated) {
  if (n > 4 && !force) {
    std::cerr << "error: n > 4 takes a long time; pass --force to proceed\n";
    return kExitUsage;
  }
  fano_catalog* cat = nullptr;
  long long box_used = 0;
  if (int rc = fano_enumerate(n, box, seed_isolated ? 1 : 0, &box_used, &cat)) return fail(rc);
  catalog_ptr guard(cat, &fano_catalog_free);
  std::cout << "classes: " << fano_catalog_size(cat) << " (box " << box_used << ")\n";
  if (!out_path.empty())
    if (int rc = fano_catalog_save(cat, out_path.c_str())) return fail(rc);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smooth Fano polytope toolkit"};
  app.require_subcommand(1);

  std::string input = "-", pattern, catalog_path, relation = "F", dot_path, json_path, out_path;
  bool as_json = false, with_report = false, force = false, seed_isolated = false;
  long long box = 0;
  int dim = 0;
  std::vector<std::string> construct_args;

  auto* verify = app.add_subcommand("verify", "check polytope predicates");
  verify->add_option("input", input, "polytope file, or - for stdin");
  verify->add_flag("--json", as_json, "JSON output");

  auto* relations = app.add_subcommand("relations", "print primitive relations");
  relations->add_option("input", input, "polytope file, or - for stdin");
  relations->add_option("--pattern", pattern, "pic2|pic3|isolated|family")
      ->check(CLI::IsMember({"pic2", "pic3", "isolated", "family"}));

  auto* construct = app.add_subcommand("construct", "write a named construction");
  construct
      ->add_option("spec", construct_args,
                   "T n | V 2k | Vt 2k | pic3 a b | family a b k l.. | cor45 n rho | remark7d | "
                   "freesum f1 f2")
      ->expected(-1);

  auto* isolate = app.add_subcommand("isolate", "decide F-/I-isolation");
  isolate->add_option("input", input, "polytope file, or - for stdin");
  auto* iso_cat = isolate->add_option("--catalog", catalog_path, "complete catalog file");
  auto* iso_box = isolate->add_option("--box", box, "bounded addition search radius");
  iso_cat->excludes(iso_box);

  auto* graph = app.add_subcommand("graph", "build an equivalence graph");
  graph->add_option("--catalog", catalog_path, "complete catalog file")->required();
  graph->add_option("--relation", relation, "F or I")->check(CLI::IsMember({"F", "I"}));
  graph->add_option("--dot", dot_path, "write DOT here (- for stdout)");
  graph->add_option("--json", json_path, "write JSON here (- for stdout)");
  graph->add_flag("--report", with_report, "print the aggregate report");

  auto* enumerate = app.add_subcommand("enumerate", "enumerate all classes in low dimension");
  enumerate->add_option("n", dim, "dimension")->required();
  enumerate->add_option("--box", box, "fixed search box (default: escalate until stable)");
  enumerate->add_option("--out", out_path, "write the catalog here");
  enumerate->add_flag("--force", force, "lift the n <= 4 guard");
  enumerate->add_flag("--seed-isolated", seed_isolated,
                      "also seed the isolated constructions (n >= 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (verify->parsed()) return cmd_verify(input, as_json);
  if (relations->parsed()) return cmd_relations(input, pattern);
  if (construct->parsed()) return cmd_construct(construct_args);
  if (isolate->parsed()) {
    if (catalog_path.empty() && box < 1) {
      std::cerr << "error: pass --catalog or --box\n";
      return kExitUsage;
    }
    return cmd_isolate(input, catalog_path, box);
  }
  if (graph->parsed()) return cmd_graph(catalog_path, relation, dot_path, json_path, with_report);
  if (enumerate->parsed()) return cmd_enumerate(dim, box, out_path, force, seed_isolated);
  return kExitUsage;
}

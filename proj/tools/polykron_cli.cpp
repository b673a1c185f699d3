#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polykron/experiments.hpp"
#include "polykron/formats.hpp"
#include "polykron/generators.hpp"
#include "polykron/iso.hpp"
#include "polykron/parallel.hpp"
#include "polykron/planar.hpp"
#include "polykron/products.hpp"
#include "polykron/recognition.hpp"

using namespace polykron;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string g_format = "g6";

Graph read_graph(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(errc::bad_params, "cannot open " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  if (!text.empty() && text[0] == '{') return parse_json(text);
  return parse_graph6(text);
}

void write_graph(const Graph& g, const ProductLabeling* lab = nullptr) {
  if (g_format == "json")
    std::cout << emit_json(g) << "\n";
  else if (g_format == "dot")
    std::cout << emit_dot(g, lab);
  else
    std::cout << emit_graph6(g) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"toolkit for planar 3-connected Kronecker and Cartesian products"};
  app.require_subcommand(1);
  int max_n = 0;
  std::string report_path;
  bool serial = false;
  app.add_option("--format", g_format, "output format: g6, json, dot")
      ->check(CLI::IsMember({"g6", "json", "dot"}));
  app.add_option("--max-n", max_n, "override the search cap");
  app.add_option("--report", report_path, "write a JSON report to this path");
  app.add_flag("--serial", serial, "disable the parallel lanes");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named family member");
  std::string family;
  std::vector<std::string> params;
  gen->add_option("family", family)->required();
  gen->add_option("params", params, "family parameters");

  // product / cover / prism
  auto* product = app.add_subcommand("product", "Kronecker or Cartesian product");
  std::string prod_kind = "kronecker";
  std::vector<std::string> prod_args;
  product->add_option("--kind", prod_kind)->check(CLI::IsMember({"kronecker", "cartesian"}));
  product->add_option("graphs", prod_args)->expected(2);

  auto* cover_cmd = app.add_subcommand("cover", "double cover of a graph");
  std::string cover_arg;
  cover_cmd->add_option("graph", cover_arg)->required();

  // check
  auto* check = app.add_subcommand("check", "evaluate a predicate");
  std::string pred, check_arg;
  check->add_option("predicate", pred)
      ->required()
      ->check(CLI::IsMember({"planar", "polyhedron", "bipartite", "outerplanar",
                             "quadrangulation", "connectivity", "semi-hyper-2"}));
  check->add_option("graph", check_arg)->required();

  auto* classify = app.add_subcommand("classify", "odd-face class of a planar graph");
  std::string classify_arg;
  classify->add_option("graph", classify_arg)->required();

  auto* roots_cmd = app.add_subcommand("roots", "Kronecker roots of a bipartite graph");
  std::string roots_arg;
  roots_cmd->add_option("graph", roots_arg)->required();

  auto* forms = app.add_subcommand("cartesian-forms", "Cartesian factorizations");
  std::string forms_arg;
  forms->add_option("graph", forms_arg)->required();

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  std::vector<std::string> iso_args;
  iso->add_option("graphs", iso_args)->expected(2);

  auto* faces_cmd = app.add_subcommand("faces", "face walks of a planar embedding");
  std::string faces_arg;
  faces_cmd->add_option("graph", faces_arg)->required();

  auto* exp = app.add_subcommand("experiment", "run a named experiment");
  std::string exp_name, exp_input;
  int exp_nm = 3, exp_quad_m = 8, exp_script = 3;
  exp->add_option("name", exp_name)->required();
  exp->add_option("--input", exp_input, "graph6 stream for ingest_classify");
  exp->add_option("--nm", exp_nm, "N,M grid bound");
  exp->add_option("--quad-m", exp_quad_m, "largest quad-factor m");
  exp->add_option("--script-len", exp_script, "longest transformation script");

  auto* cat = app.add_subcommand("catalog", "list or emit catalog graphs");
  std::string cat_name;
  cat->add_option("--emit", cat_name, "emit one entry by family name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  if (max_n > 0) set_search_cap(max_n);
  if (serial) parallel_enabled() = false;

  if (gen->parsed()) {
    auto p = [&](size_t i) { return std::stoi(params.at(i)); };
    Graph g;
    if (family == "cycle") g = cycle(p(0));
    else if (family == "path") g = path(p(0));
    else if (family == "complete") g = complete(p(0));
    else if (family == "ladder") g = ladder(p(0));
    else if (family == "stacked-prism") g = stacked_prism(p(0), p(1));
    else if (family == "petersen") g = petersen();
    else if (family == "desargues") g = desargues();
    else if (family == "stacked-cube-factor") g = stacked_cube_factor(p(0), p(1)).j;
    else if (family == "odd-prism-factor") g = odd_prism_factor(p(0), p(1));
    else if (family == "quad-factor") g = quad_factor(p(0), p(1)).j;
    else if (family == "t3333") {
      T3333Script s;
      // params: moves like 1 2 2m, final f1|f2 as the last parameter
      for (size_t i = 0; i + 1 < params.size(); ++i) {
        if (params[i] == "1") s.moves.push_back(T3Move::t1);
        else if (params[i] == "2") s.moves.push_back(T3Move::t2);
        else if (params[i] == "2m") s.moves.push_back(T3Move::t2m);
        else throw Error(errc::bad_params, "unknown move " + params[i]);
      }
      if (params.empty()) throw Error(errc::bad_params, "final step missing (f1 or f2)");
      s.final_step = params.back() == "f2" ? T3Final::f2 : T3Final::f1;
      g = t3333_build(s);
    } else if (family == "class-c0") g = c0_representative();
    else if (family == "class-c1") g = c1_representative();
    else if (family == "class-c2") g = c2_representative();
    else if (family == "class-c3") g = c3_representative();
    else if (family == "dou-h") {
      DouHSpec s;
      s.ell = p(0);
      for (size_t i = 1; i < params.size(); ++i) {
        auto dash = params[i].find('-');
        if (dash == std::string::npos)
          throw Error(errc::bad_params, "chords look like 1-6");
        s.chords.emplace_back(std::stoi(params[i].substr(0, dash)),
                              std::stoi(params[i].substr(dash + 1)));
      }
      g = dou_H(s);
    } else if (family == "dou-j") {
      g = dou_J(read_graph(params.at(0)));
    } else {
      throw Error(errc::bad_params, "unknown family: " + family);
    }
    write_graph(g);
    return kExitPass;
  }

  if (product->parsed()) {
    Graph a = read_graph(prod_args[0]), b = read_graph(prod_args[1]);
    Product p = prod_kind == "kronecker" ? kronecker(a, b) : cartesian(a, b);
    write_graph(p.g, &p.lab);
    return kExitPass;
  }

  if (cover_cmd->parsed()) {
    Product p = cover(read_graph(cover_arg));
    write_graph(p.g, &p.lab);
    return kExitPass;
  }

  if (check->parsed()) {
    Graph g = read_graph(check_arg);
    if (pred == "connectivity") {
      std::cout << vertex_connectivity(g) << "\n";
      return kExitPass;
    }
    bool ok = false;
    if (pred == "planar") ok = is_planar(g);
    else if (pred == "polyhedron") ok = is_polyhedron(g);
    else if (pred == "bipartite") ok = bipartition(g).has_value();
    else if (pred == "outerplanar") ok = is_outerplanar(g);
    else if (pred == "quadrangulation") ok = is_quadrangulation(g);
    else if (pred == "semi-hyper-2") ok = semi_hyper_2_connected(g).ok;
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? kExitPass : kExitFail;
  }

  if (classify->parsed()) {
    Graph g = read_graph(classify_arg);
    auto cond = classify_odd_faces(g);
    std::cout << odd_face_tag_name(cond.tag) << "\n";
    std::cout << "odd faces: " << cond.odd_faces.size() << "\n";
    for (const auto& f : cond.odd_faces) {
      std::cout << " ";
      for (int v : f) std::cout << " " << v;
      std::cout << "\n";
    }
    if (cond.shared_vertex >= 0)
      std::cout << "shared vertex: " << cond.shared_vertex << "\n";
    if (!cond.two_cuts.empty()) {
      std::cout << "2-cuts:";
      for (auto [u, v] : cond.two_cuts) std::cout << " {" << u << "," << v << "}";
      std::cout << "\n";
    }
    if (!cond.notes.empty()) std::cout << "note: " << cond.notes << "\n";
    return cond.tag != OddFaceTag::none ? kExitPass : kExitFail;
  }

  if (roots_cmd->parsed()) {
    Graph g = read_graph(roots_arg);
    RootSet rs = kronecker_roots(g);
    std::cout << rs.roots.size() << " root(s)\n";
    for (const auto& root : rs.roots) {
      std::cout << emit_graph6(root.j) << "\n";
      std::cout << " involution:";
      for (int v : root.involution) std::cout << " " << v;
      std::cout << "\n";
    }
    return kExitPass;
  }

  if (forms->parsed()) {
    Graph g = read_graph(forms_arg);
    auto form = cartesian_forms(g);
    std::cout << form.variants.size() << " form(s)\n";
    for (const auto& v : form.variants) {
      if (v.kind == CartesianVariant::Kind::stacked_prism)
        std::cout << "stacked-prism n=" << v.n << " m=" << v.m << "\n";
      else
        std::cout << "prism-over " << emit_graph6(v.h) << "\n";
    }
    return kExitPass;
  }

  if (iso->parsed()) {
    bool ok = is_isomorphic(read_graph(iso_args[0]), read_graph(iso_args[1]));
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? kExitPass : kExitFail;
  }

  if (faces_cmd->parsed()) {
    Graph g = read_graph(faces_arg);
    auto emb = planar_embed(g);
    if (!emb) {
      std::cout << "non-planar\n";
      return kExitFail;
    }
    FaceSet fs = faces(*emb);
    auto st = face_stats(fs);
    std::cout << "p=" << st.p << " q=" << st.q << " r=" << st.r << "\n";
    for (const auto& f : fs.faces) {
      std::cout << " [";
      for (size_t i = 0; i < f.verts.size(); ++i)
        std::cout << (i ? " " : "") << f.verts[i];
      std::cout << "]\n";
    }
    return kExitPass;
  }

  if (exp->parsed()) {
    ExperimentBounds b;
    if (max_n > 0) b.max_n = max_n;
    b.nm_limit = exp_nm;
    b.quad_m = exp_quad_m;
    b.script_len = exp_script;
    b.input_path = exp_input;
    ExperimentReport rep = run_experiment(exp_name, b);
    std::string text = serialize_report(rep);
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      out << text << "\n";
    } else {
      std::cout << text << "\n";
    }
    std::cerr << rep.name << ": " << (rep.pass ? "PASS" : "FAIL") << " ("
              << rep.instances.size() << " instances, " << rep.wall_seconds << "s)\n";
    return rep.exit_code();
  }

  if (cat->parsed()) {
    for (const auto& e : catalog()) {
      if (!cat_name.empty()) {
        if (e.family == cat_name) {
          std::cout << e.graph6 << "\n";
          return kExitPass;
        }
        continue;
      }
      std::cout << e.family << (e.params.empty() ? "" : " [" + e.params + "]") << " "
                << e.graph6 << " (" << e.provenance << ")\n";
    }
    if (!cat_name.empty()) {
      std::cerr << "no catalog entry named " << cat_name << "\n";
      return kExitUsage;
    }
    return kExitPass;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << errc_name(e.code) << ": " << e.what() << "\n";
    if (e.code == errc::search_budget_exceeded) return kExitBudget;
    if (e.code == errc::bad_params || e.code == errc::unknown_experiment) return kExitUsage;
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfree/apps.hpp"
#include "dfree/construct.hpp"
#include "dfree/decompose.hpp"
#include "dfree/oracle.hpp"

using namespace dfree;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNo = 1, kInput = 2, kExhausted = 3 };

struct Config {
  std::string input = "-";
  std::string format = "text";
  bool json() const { return format == "json"; }
};

std::string read_text(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError(0, 0, "cannot open " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

json witness_json(const Delta122Witness& w) {
  return {{"x", w.x}, {"y", w.y}, {"z", w.z}};
}

DecompositionTree require_tree(const Tournament& t) {
  auto d = decompose(t);
  if (auto* w = std::get_if<Delta122Witness>(&d)) throw NotFree(*w);
  return std::get<DecompositionTree>(std::move(d));
}

std::string step_text(const Step& s) {
  if (s.op == Step::Op::Join) return "join " + std::to_string(s.at) + "->" + std::to_string(s.at2);
  return "substitute " + to_string(s.kind) + " at " + std::to_string(s.at);
}

int cmd_check(const Config& c) {
  const Tournament t = read_tmt_file(c.input);
  const auto d = decompose(t);
  if (auto* w = std::get_if<Delta122Witness>(&d)) {
    if (c.json()) std::cout << json{{"free", false}, {"witness", witness_json(*w)}}.dump(2) << "\n";
    else std::cout << "contains Delta(1,2,2): " << to_string(*w) << "\n";
    return kNo;
  }
  const auto& tree = std::get<DecompositionTree>(d);
  if (c.json()) {
    std::cout << json{{"free", true}, {"tree", json::parse(tree_to_json(tree))}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "free\npaving base n=" << tree.base.size() << ", " << tree.steps.size()
            << (tree.steps.size() == 1 ? " step" : " steps");
  for (std::size_t k = 0; k < tree.steps.size(); ++k)
    std::cout << (k ? "; " : ": ") << step_text(tree.steps[k]);
  std::cout << "\n";
  return kOk;
}

int cmd_decompose(const Config& c) {
  const Tournament t = read_tmt_file(c.input);
  std::cout << tree_to_json(require_tree(t), 2) << "\n";
  return kOk;
}

int cmd_reconstruct(const Config& c) {
  std::cout << to_tmt(reconstruct(tree_from_json(read_text(c.input))));
  return kOk;
}

Ordering ordering_for(const Tournament& t, const std::string& mode, NormalForm* nf = nullptr) {
  if (mode == "identity") return identity_ordering(t.size());
  if (mode == "paving") return paving_ordering(t);
  if (mode == "natural") return natural_ordering(require_tree(t));
  auto f = normal_form(require_tree(t));
  if (nf) *nf = f;
  return f.ordering;
}

int cmd_order(const Config& c, const std::string& mode) {
  const Tournament t = read_tmt_file(c.input);
  if (mode == "paving") {
    if (auto w = find_delta122(t)) throw NotFree(*w);
  }
  NormalForm nf;
  const Ordering o = ordering_for(t, mode, &nf);
  const auto g = backedge_graph(t, o);
  std::vector<std::pair<int, int>> back;
  for (auto [a, b] : g.edges()) back.push_back(t.edge(a, b) ? std::pair{a, b} : std::pair{b, a});
  if (c.json()) {
    json j{{"mode", mode}, {"ordering", o}, {"backedges", back}};
    if (mode == "theorem11") {
      j["components"] = json::array();
      for (const auto& comp : nf.components)
        j["components"].push_back({{"class", to_string(comp.cls)}, {"vertices", comp.vertices}});
    }
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << "ordering:";
  for (int v : o) std::cout << ' ' << v;
  std::cout << "\nbackedges (" << back.size() << "):";
  for (auto [a, b] : back) std::cout << ' ' << a << "->" << b;
  std::cout << "\n";
  if (mode == "theorem11")
    for (const auto& comp : nf.components) {
      std::cout << "component " << to_string(comp.cls) << ":";
      for (int v : comp.vertices) std::cout << ' ' << v;
      std::cout << "\n";
    }
  return kOk;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int cmd_color(const Config& c) {
  const Tournament t = read_tmt_file(c.input);
  const auto col = color(require_tree(t));
  const bool ok = col.k <= 3;
  if (c.json()) {
    std::cout << json{{"coloring", col.color}, {"k", col.k}, {"bound", 3}, {"ok", ok}}.dump(2) << "\n";
  } else {
    std::cout << "colouring:";
    for (int x : col.color) std::cout << ' ' << x;
    std::cout << "\nk = " << col.k << " <= 3: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? kOk : kNo;
}

int cmd_alpha(const Config& c) {
  const Tournament t = read_tmt_file(c.input);
  const auto s = transitive_set(require_tree(t));
  const int bound = ceil_div(3 * t.size(), 7), size = static_cast<int>(s.size());
  if (c.json()) {
    std::cout << json{{"set", s}, {"size", size}, {"bound", bound}, {"ok", size >= bound}}.dump(2) << "\n";
  } else {
    std::cout << "transitive set:";
    for (int v : s) std::cout << ' ' << v;
    std::cout << "\n|S| = " << size << " >= ceil(3n/7) = " << bound << ": "
              << (size >= bound ? "ok" : "FAILED") << "\n";
  }
  return size >= bound ? kOk : kNo;
}

int cmd_pack(const Config& c) {
  const Tournament t = read_tmt_file(c.input);
  const auto r = pack_triangles(require_tree(t));
  const int size = static_cast<int>(r.packing.triangles.size()), bound = ceil_div(2 * r.m, 7);
  if (c.json()) {
    std::cout << json{{"triangles", r.packing.triangles}, {"size", size}, {"m", r.m},
                      {"bound", bound}, {"ok", size >= bound}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "triangles:";
    for (const auto& x : r.packing.triangles) std::cout << " (" << x[0] << "," << x[1] << "," << x[2] << ")";
    std::cout << "\n|P| = " << size << " >= ceil(2m/7) = " << bound << ", m = " << r.m << ": "
              << (size >= bound ? "ok" : "FAILED") << "\n";
  }
  return size >= bound ? kOk : kNo;
}

int cmd_gen(const GenParams& p, bool base_only, const std::string& tree_path) {
  DecompositionTree tree;
  Tournament t;
  if (base_only) {
    auto [b, o] = gen_paving(p);
    t = b;
    tree.base = std::move(b);
    tree.ordering = std::move(o);
  } else {
    std::tie(t, tree) = gen_free(p);
  }
  if (!tree_path.empty()) {
    std::ofstream f(tree_path);
    if (!f) throw ParseError(0, 0, "cannot write " + tree_path);
    f << tree_to_json(tree, 2) << "\n";
  }
  std::cout << to_tmt(t);
  return kOk;
}

int cmd_enumerate(int n, const std::string& checks, int workers) {
  std::vector<std::string> list;
  if (checks == "all") {
    list = enumeration_checks();
  } else if (checks != "none") {
    std::stringstream ss(checks);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) list.push_back(item);
  }
  const auto r = enumerate_labeled(n, list, workers);
  std::cout << report_to_json(r) << "\n";
  return r.failures.empty() ? kOk : kNo;
}

std::string dot(const Tournament& t, const Ordering& o) {
  const auto pos = positions_of(o);
  std::ostringstream s;
  s << "digraph T {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t p = 0; p < o.size(); ++p)
    s << "  v" << o[p] << " [label=\"" << o[p] << "\", pos_index=" << p << "];\n";
  for (std::size_t p = 0; p + 1 < o.size(); ++p)
    s << "  v" << o[p] << " -> v" << o[p + 1] << " [style=invis, weight=100];\n";
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b) {
      if (a == b || !t.edge(a, b)) continue;
      s << "  v" << a << " -> v" << b;
      if (pos[a] > pos[b]) s << " [style=dashed, color=red, constraint=false]";
      s << ";\n";
    }
  s << "}\n";
  return s.str();
}

int cmd_export_dot(const Config& c, const std::string& mode) {
  const Tournament t = read_tmt_file(c.input);
  std::cout << dot(t, ordering_for(t, mode));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta(1,2,2)-free tournaments: recognition, structure and certificates"};
  app.require_subcommand(1);
  Config cfg;
  auto input = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input, "tournament file, '-' for stdin")->capture_default_str();
    sub->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  std::function<int()> run;

  auto* check = app.add_subcommand("check", "decide freeness; print the tree or a witness");
  input(check);
  check->callback([&] { run = [&] { return cmd_check(cfg); }; });

  auto* dec = app.add_subcommand("decompose", "print the decomposition tree as JSON");
  input(dec);
  dec->callback([&] { run = [&] { return cmd_decompose(cfg); }; });

  auto* rec = app.add_subcommand("reconstruct", "rebuild a tournament from tree JSON");
  rec->add_option("file", cfg.input, "tree JSON, '-' for stdin")->capture_default_str();
  rec->callback([&] { run = [&] { return cmd_reconstruct(cfg); }; });

  std::string mode = "theorem11";
  auto* order = app.add_subcommand("order", "print an ordering and its backedges");
  input(order);
  order->add_option("--mode", mode)
      ->check(CLI::IsMember({"paving", "natural", "theorem11"}))
      ->capture_default_str();
  order->callback([&] { run = [&] { return cmd_order(cfg, mode); }; });

  auto* col = app.add_subcommand("color", "3-colouring into transitive classes");
  input(col);
  col->callback([&] { run = [&] { return cmd_color(cfg); }; });
  auto* alpha = app.add_subcommand("alpha", "transitive subtournament of order >= ceil(3n/7)");
  input(alpha);
  alpha->callback([&] { run = [&] { return cmd_alpha(cfg); }; });
  auto* pack = app.add_subcommand("pack", "disjoint cyclic triangles, >= ceil(2m/7)");
  input(pack);
  pack->callback([&] { run = [&] { return cmd_pack(cfg); }; });

  GenParams gp;
  bool base_only = false;
  std::string tree_path;
  auto* gen = app.add_subcommand("gen", "generate a free tournament");
  gen->add_option("--n", gp.n_target)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gp.seed)->capture_default_str();
  gen->add_option("--density", gp.backedge_density)->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--subst-weight", gp.subst_weight)->check(CLI::NonNegativeNumber)->capture_default_str();
  gen->add_option("--join-weight", gp.join_weight)->check(CLI::NonNegativeNumber)->capture_default_str();
  gen->add_flag("--base-only", base_only, "paving tournament only");
  gen->add_option("--tree", tree_path, "also write the tree JSON here");
  gen->callback([&] { run = [&] { return cmd_gen(gp, base_only, tree_path); }; });

  int en = 0, workers = 1;
  std::string checks = "all";
  auto* en_cmd = app.add_subcommand("enumerate", "exhaustive labeled enumeration with checks");
  en_cmd->add_option("--n", en)->required();
  en_cmd->add_option("--checks", checks, "all, none, or a comma list")->capture_default_str();
  en_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber)->capture_default_str();
  en_cmd->callback([&] { run = [&] { return cmd_enumerate(en, checks, workers); }; });

  std::string dot_mode = "identity";
  auto* dot_cmd = app.add_subcommand("export-dot", "DOT drawing ranked by an ordering");
  dot_cmd->add_option("file", cfg.input)->capture_default_str();
  dot_cmd->add_option("--ordering", dot_mode)
      ->check(CLI::IsMember({"identity", "paving", "natural", "theorem11"}))
      ->capture_default_str();
  dot_cmd->callback([&] { run = [&] { return cmd_export_dot(cfg, dot_mode); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  try {
    return run();
  } catch (const NotFree& e) {
    std::cout << "contains Delta(1,2,2): " << to_string(e.witness) << "\n";
    return kNo;
  } catch (const GenerationExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExhausted;
  } catch (const PreconditionViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNo;
  } catch (const NotNormalizable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}

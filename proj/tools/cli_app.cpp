#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperacyc/classify.hpp"
#include "hyperacyc/errors.hpp"
#include "hyperacyc/jointree.hpp"
#include "hyperacyc/leaves.hpp"
#include "hyperacyc/oracle.hpp"
#include "hyperacyc/parse.hpp"
#include "hyperacyc/reduce.hpp"

namespace hyperacyc::cli {

namespace {

using nlohmann::json;

Hypergraph load(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  BuildResult br = parse_hypergraph(buf.str());
  for (const auto& w : br.warnings) err << "warning: " << w << "\n";
  return br.hypergraph;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::vector<std::string> token_list(const VertexTable& t,
                                    const std::vector<VertexIndex>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (VertexIndex v : vs) out.push_back(t.token(v));
  return out;
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

json edge_json(const VertexTable& t, const Edge& e) {
  return json(edge_tokens(t, e));
}

json report_json(const Hypergraph& h, const AcyclicityReport& r) {
  const VertexTable& t = *h.table();
  json j{{"gamma", r.gamma},         {"beta", r.beta},
         {"alpha", r.alpha},         {"cycle_free", r.cycle_free},
         {"conformal", r.conformal}, {"berge", r.berge}};
  json w = json::object();
  if (r.cycle_witness) w["cycle"] = token_list(t, r.cycle_witness->vertices);
  if (r.non_conformal_clique)
    w["non_conformal_clique"] =
        token_list(t, r.non_conformal_clique->clique.members());
  if (r.gamma_triangle)
    w["gamma_triangle"] = json{{"center", t.token(r.gamma_triangle->center)},
                               {"others",
                                {t.token(r.gamma_triangle->a),
                                 t.token(r.gamma_triangle->b)}}};
  if (r.berge_cycle) {
    json edges = json::array();
    for (const auto& e : r.berge_cycle->edges) edges.push_back(edge_json(t, e));
    w["berge_cycle"] = json{{"vertices", token_list(t, r.berge_cycle->vertices)},
                            {"edges", edges}};
  }
  if (r.beta_cycle) {
    json edges = json::array();
    for (const auto& e : r.beta_cycle->edge_subset)
      edges.push_back(edge_json(t, e));
    w["beta_cycle"] = json{{"edges", edges},
                           {"cycle", token_list(t, r.beta_cycle->cycle.vertices)}};
  }
  j["witnesses"] = w;
  json orders = json::object();
  for (const auto& eo : r.orders_used)
    orders[to_string(eo.kind)] = token_list(t, eo.order);
  j["orders"] = orders;
  return j;
}

void print_report(const Hypergraph& h, const AcyclicityReport& r,
                  std::ostream& out) {
  const VertexTable& t = *h.table();
  out << "gamma acyclic: " << yesno(r.gamma) << "\n";
  out << "beta acyclic: " << yesno(r.beta) << "\n";
  out << "alpha acyclic: " << yesno(r.alpha) << "\n";
  out << "cycle-free: " << yesno(r.cycle_free) << "\n";
  out << "conformal: " << yesno(r.conformal) << "\n";
  out << "berge acyclic: " << yesno(r.berge) << "\n";
  if (r.cycle_witness)
    out << "cycle: " << joined(token_list(t, r.cycle_witness->vertices)) << "\n";
  if (r.non_conformal_clique)
    out << "non-conformal clique: "
        << joined(token_list(t, r.non_conformal_clique->clique.members()))
        << "\n";
  if (r.gamma_triangle)
    out << "gamma triangle: centre " << t.token(r.gamma_triangle->center)
        << " with " << t.token(r.gamma_triangle->a) << " "
        << t.token(r.gamma_triangle->b) << "\n";
  if (r.beta_cycle) {
    std::vector<std::string> names;
    for (const auto& e : r.beta_cycle->edge_subset)
      names.push_back(edge_name(t, e));
    out << "cyclic edge subset: " << joined(names) << "\n";
  }
}

std::string residual_line(const Hypergraph& residual) {
  if (residual.empty()) return "residual: empty";
  std::vector<std::string> names;
  for (const auto& e : edges_by_token_order(residual))
    names.push_back(edge_name(*residual.table(), e));
  return "residual: " + joined(names);
}

Edge edge_from_spec(const Hypergraph& h, const std::string& spec) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : spec) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) toks.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  Edge e(h.table()->size());
  for (const auto& tok : toks) e.add(h.table()->require(tok));
  return e;
}

void print_tree(const JoinTree& t, std::ostream& out) {
  const VertexTable& table = *t.table;
  if (t.parent.empty()) {
    std::vector<bool> linked(t.node_count(), false);
    for (const auto& [a, b] : t.tree_edges) linked[a] = linked[b] = true;
    for (std::size_t i = 0; i < t.node_count(); ++i)
      if (!linked[i]) out << edge_name(table, t.labels[i]) << "\n";
    for (const auto& [a, b] : t.tree_edges)
      out << edge_name(table, t.labels[a]) << " -- "
          << edge_name(table, t.labels[b]) << "\n";
    return;
  }
  out << "root: " << edge_name(table, t.labels[*t.root]) << "\n";
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    if (t.parent[i] == JoinTree::npos) {
      if (i != *t.root) out << edge_name(table, t.labels[i]) << " (root)\n";
    } else {
      out << edge_name(table, t.labels[i]) << " -> "
          << edge_name(table, t.labels[t.parent[i]]) << "\n";
    }
  }
}

int run_census(std::size_t n, std::optional<std::size_t> cap, std::ostream& out) {
  std::uint64_t members = 0, disagreements = 0;
  auto compare = [&](const Hypergraph& h) {
    ++members;
    bool ok = is_cycle_free(h) == is_cycle_free_brute(h) &&
              is_conformal(h) == is_conformal_brute(h) &&
              is_alpha_acyclic(h) == is_alpha_brute(h) &&
              is_gamma_acyclic(h) == is_gamma_brute(h);
    if (ok && h.edge_count() <= 12) ok = is_beta_acyclic(h) == is_beta_brute(h);
    if (!ok) ++disagreements;
  };
  if (n <= 4) {
    CensusStream census(n, cap);
    while (auto h = census.next()) compare(*h);
    out << "census n=" << n << ": " << members << " members, " << disagreements
        << " disagreements\n";
  } else {
    CensusStream census(n);
    std::mt19937 rng(0x5eed5);
    const std::size_t max_edges = cap.value_or(10);
    for (int i = 0; i < 5000; ++i) compare(random_member(rng, census.table(), max_edges));
    out << "census n=" << n << " (sampled): " << members << " members, "
        << disagreements << " disagreements\n";
  }
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hypergraph acyclicity toolkit"};
  app.require_subcommand(1);

  std::string file;
  bool json_out = false;
  auto* c_classify = app.add_subcommand("classify", "full acyclicity report");
  c_classify->add_option("file", file, "hypergraph file")->required();
  c_classify->add_flag("--json", json_out, "JSON report");

  std::string kind_name;
  auto* c_elim = app.add_subcommand("elim-order", "leaf elimination order");
  c_elim->add_option("--kind", kind_name, "alpha|beta|gamma|pure")->required();
  c_elim->add_option("file", file)->required();

  bool use_gyo = false, use_dm = false, trace = false;
  auto* c_reduce = app.add_subcommand("reduce", "reduction to the empty hypergraph");
  c_reduce->add_flag("--gyo", use_gyo, "included-edge / singleton-vertex reduction");
  c_reduce->add_flag("--dm", use_dm, "singleton / linearization reduction");
  c_reduce->add_flag("--trace", trace, "print each step");
  c_reduce->add_option("file", file)->required();

  std::string root_spec;
  bool disjoint = false, dot = false;
  auto* c_tree = app.add_subcommand("jointree", "join tree construction");
  c_tree->add_option("--root", root_spec, "root edge tokens (comma separated)");
  c_tree->add_flag("--disjoint-branches", disjoint, "rooted disjoint-branches variant");
  c_tree->add_flag("--dot", dot, "Graphviz output");
  c_tree->add_option("file", file)->required();

  bool t_dual = false, t_norm = false, t_min = false;
  auto* c_transform = app.add_subcommand("transform", "dual / normalize / minimize");
  c_transform->add_flag("--dual", t_dual);
  c_transform->add_flag("--normalize", t_norm);
  c_transform->add_flag("--minimize", t_min);
  c_transform->add_option("file", file)->required();

  auto* c_oracle = app.add_subcommand("oracle", "brute-force answers");
  c_oracle->add_option("file", file)->required();

  std::size_t census_n = 0;
  std::optional<std::size_t> census_cap;
  auto* c_census = app.add_subcommand("census", "oracle-vs-fast agreement run");
  c_census->add_option("--vertices", census_n, "universe size")->required();
  c_census->add_option("--edge-cap", census_cap, "edge count cap");

  std::vector<const char*> argv;
  argv.push_back("hyperacyc");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_classify->parsed()) {
      Hypergraph h = load(file, err);
      AcyclicityReport r = classify(h);
      if (json_out)
        out << report_json(h, r).dump(2) << "\n";
      else
        print_report(h, r, out);
      return 0;
    }
    if (c_elim->parsed()) {
      auto kind = leaf_kind_from_string(kind_name);
      if (!kind) {
        err << "error: unknown leaf kind '" << kind_name << "'\n";
        return 1;
      }
      Hypergraph h = load(file, err);
      if (auto eo = elimination_order(h, *kind))
        out << joined(token_list(*h.table(), eo->order)) << "\n";
      else
        out << "no elimination order\n";
      return 0;
    }
    if (c_reduce->parsed()) {
      if (use_gyo == use_dm) {
        err << "error: pick exactly one of --gyo and --dm\n";
        return 1;
      }
      Hypergraph h = load(file, err);
      ReductionTrace tr = use_gyo ? gyo_reduce(h) : dm_reduce(h);
      if (trace)
        for (const auto& s : tr.steps)
          out << step_description(*h.table(), s) << "\n";
      out << residual_line(tr.residual) << "\n";
      return 0;
    }
    if (c_tree->parsed()) {
      if (!root_spec.empty() && !disjoint) {
        err << "error: --root needs --disjoint-branches\n";
        return 1;
      }
      Hypergraph h = load(file, err);
      std::optional<JoinTree> t;
      if (disjoint) {
        if (h.empty() && root_spec.empty()) {
          out << "no join tree\n";
          return 0;
        }
        Edge root = root_spec.empty()
                        ? *std::min_element(
                              h.edges().begin(), h.edges().end(),
                              [&](const Edge& a, const Edge& b) {
                                return edge_tokens_less(*h.table(), a,
                                                        *h.table(), b);
                              })
                        : edge_from_spec(h, root_spec);
        t = build_disjoint_branch_join_tree(h, root);
      } else {
        t = build_join_tree(h);
      }
      if (!t) {
        out << "no join tree\n";
        return 0;
      }
      if (dot)
        out << to_dot(*t);
      else
        print_tree(*t, out);
      return 0;
    }
    if (c_transform->parsed()) {
      if (int(t_dual) + int(t_norm) + int(t_min) != 1) {
        err << "error: pick exactly one of --dual, --normalize, --minimize\n";
        return 1;
      }
      Hypergraph h = load(file, err);
      Hypergraph result = t_dual ? dual(h).dual
                                 : (t_norm ? h.normalize() : h.minimize());
      out << render_hypergraph(result);
      return 0;
    }
    if (c_oracle->parsed()) {
      Hypergraph h = load(file, err);
      const VertexTable& t = *h.table();
      auto cyc = has_cycle_brute(h);
      out << "cycle-free: " << yesno(!cyc) << "\n";
      if (cyc) out << "cycle: " << joined(token_list(t, cyc->vertices)) << "\n";
      auto clique = conformal_violation_brute(h);
      out << "conformal: " << yesno(!clique) << "\n";
      if (clique)
        out << "non-conformal clique: "
            << joined(token_list(t, clique->clique.members())) << "\n";
      out << "alpha acyclic: " << yesno(!cyc && !clique) << "\n";
      out << "beta acyclic: " << yesno(is_beta_brute(h)) << "\n";
      out << "gamma acyclic: " << yesno(is_gamma_brute(h)) << "\n";
      return 0;
    }
    if (c_census->parsed()) {
      if (census_n > 5) {
        err << "error: census supports at most 5 vertices\n";
        return 1;
      }
      return run_census(census_n, census_cap, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace hyperacyc::cli

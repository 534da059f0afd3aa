#include "graphpoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "graphpoly/dot.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/factorize.hpp"
#include "graphpoly/graph_factor.hpp"
#include "graphpoly/graph_ops.hpp"
#include "graphpoly/io.hpp"

namespace graphpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

// Error messages point at the file they came from.
template <class F>
auto with_file(const std::string& path, F&& f) {
  try {
    return f(read_file(path));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind("cannot open", 0) == 0) throw;
    throw InputError(path + ": " + what);
  }
}

Labeling resolve_labels(const std::optional<Labeling>& inline_labels,
                        const std::string& labels_path,
                        const std::vector<std::string>& ids,
                        const std::string& source, std::ostream& err) {
  if (!labels_path.empty())
    return with_file(labels_path,
                     [](const std::string& t) { return io::parse_labels(t); });
  if (inline_labels) return *inline_labels;
  Labeling phi = compact_labeling(ids);
  err << "note: " << source << " has no labels; using";
  if (ids.empty()) err << " the empty labeling";
  for (std::size_t i = 0; i < ids.size(); ++i)
    err << (i ? ", " : " ") << ids[i] << "=" << i;
  err << "\n";
  return phi;
}

bool mentions_y(const std::string& text) {
  return text.find('y') != std::string::npos;
}

SearchBudget budget_from(std::optional<std::uint64_t> n) {
  SearchBudget b;
  if (n) {
    b.max_divisor_tuples = *n;
    b.max_bipartitions = *n;
  }
  return b;
}

Json map_json(const std::map<std::string, std::string>& m,
              const std::vector<std::string>& order) {
  Json out = Json::object();
  for (const auto& id : order) out[id] = m.at(id);
  return out;
}

std::vector<std::string> event_ids(const PetriNet& n) {
  std::vector<std::string> ids;
  for (const auto& e : n.events()) ids.push_back(e.id);
  return ids;
}

template <std::size_t N>
std::string pair_line(const Polynomial<N>& a, const Polynomial<N>& b) {
  return "(" + render(a) + ") * (" + render(b) + ")";
}

struct Loaded {
  io::DocKind kind;
  std::optional<io::GraphDoc> graph;
  std::optional<io::DiGraphDoc> digraph;
  std::optional<io::NetDoc> net;
};

Loaded load(const std::string& path) {
  return with_file(path, [](const std::string& text) {
    Loaded l{io::detect_kind(text), {}, {}, {}};
    switch (l.kind) {
      case io::DocKind::graph: l.graph = io::parse_graph(text); break;
      case io::DocKind::digraph: l.digraph = io::parse_digraph(text); break;
      case io::DocKind::net: l.net = io::parse_net(text); break;
    }
    return l;
  });
}

struct Options {
  std::vector<std::string> inputs;
  std::string labels;
  std::string labels2;
  bool directed = false;
  std::string route = "poly";
  bool exhaustive = false;
  std::optional<std::uint64_t> budget;
  std::string out_prefix;
};

int cmd_encode(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(o.inputs[0]);
  if (l.kind == io::DocKind::graph) {
    auto phi = resolve_labels(l.graph->labels, o.labels, l.graph->graph.v(),
                              o.inputs[0], err);
    out << render(encode(l.graph->graph, phi)) << "\n";
  } else if (l.kind == io::DocKind::digraph) {
    auto phi = resolve_labels(l.digraph->labels, o.labels,
                              l.digraph->graph.v(), o.inputs[0], err);
    out << render(encode_directed(l.digraph->graph, phi)) << "\n";
  } else {
    auto phi = resolve_labels(l.net->labels, o.labels, l.net->net.conditions(),
                              o.inputs[0], err);
    out << render(encode_net(l.net->net, phi)) << "\n";
  }
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const std::string& text = o.inputs[0];
  if (o.directed || mentions_y(text)) {
    auto d = decode_directed(parse_poly2(text));
    out << io::write_digraph(d.graph, &d.labels);
  } else {
    auto d = decode(parse_poly1(text));
    out << io::write_graph(d.graph, &d.labels);
  }
  return kOk;
}

// product and sum share their plumbing.
int cmd_binary_op(const Options& o, bool product, std::ostream& out,
                  std::ostream& err) {
  Loaded a = load(o.inputs[0]);
  Loaded b = load(o.inputs[1]);
  const bool directed = o.directed || a.kind == io::DocKind::digraph ||
                        b.kind == io::DocKind::digraph;
  if (a.kind == io::DocKind::net || b.kind == io::DocKind::net)
    throw InputError("use net-product for Petri nets");
  const std::string plain = product ? "plain" : "union";
  if (o.route != "poly" && o.route != "direct" && o.route != plain)
    throw InputError("unknown route '" + o.route + "' (poly, direct, " +
                     plain + ")");
  if (directed) {
    if (a.kind != io::DocKind::digraph || b.kind != io::DocKind::digraph)
      throw InputError("--directed needs two directed graph files");
    const auto& g1 = a.digraph->graph;
    const auto& g2 = b.digraph->graph;
    if (o.route == plain) {
      auto g = product ? plain_product_directed(g1, g2)
                       : disjoint_union_directed(g1, g2);
      out << io::write_digraph(g, nullptr);
      return kOk;
    }
    auto phi1 = resolve_labels(a.digraph->labels, o.labels, g1.v(), o.inputs[0], err);
    auto phi2 = resolve_labels(b.digraph->labels, o.labels2, g2.v(), o.inputs[1], err);
    LabeledDiBigraph r;
    if (o.route == "poly")
      r = product ? poly_product_directed(g1, phi1, g2, phi2)
                  : poly_sum_directed(g1, phi1, g2, phi2);
    else
      r = product ? direct_product_directed(g1, phi1, g2, phi2)
                  : direct_sum_directed(g1, phi1, g2, phi2);
    out << io::write_digraph(r.graph, &r.labels);
    return kOk;
  }
  const auto& g1 = a.graph->graph;
  const auto& g2 = b.graph->graph;
  if (o.route == plain) {
    auto g = product ? plain_product(g1, g2) : disjoint_union(g1, g2);
    out << io::write_graph(g, nullptr);
    return kOk;
  }
  auto phi1 = resolve_labels(a.graph->labels, o.labels, g1.v(), o.inputs[0], err);
  auto phi2 = resolve_labels(b.graph->labels, o.labels2, g2.v(), o.inputs[1], err);
  LabeledBigraph r;
  if (o.route == "poly")
    r = product ? poly_product(g1, phi1, g2, phi2) : poly_sum(g1, phi1, g2, phi2);
  else
    r = product ? direct_product(g1, phi1, g2, phi2)
                : direct_sum(g1, phi1, g2, phi2);
  out << io::write_graph(r.graph, &r.labels);
  return kOk;
}

template <std::size_t N>
int report_disjoint(const DisjointFactorization<N>& f, std::ostream& out,
                    std::ostream& err) {
  err << "note: bivariate input; only bit-disjoint factorizations are searched\n";
  for (const auto& [a, b] : f.pairs) {
    // lower bit positions first; a constant factor goes last
    const auto ta = tau_poly(a), tb = tau_poly(b);
    const bool swap = ta.empty() || (!tb.empty() && tb.front() < ta.front());
    out << (swap ? pair_line(b, a) : pair_line(a, b)) << "\n";
  }
  if (!f.pairs.empty()) return kOk;
  if (f.status == SearchStatus::budget_exceeded) {
    out << "inconclusive: search budget exceeded\n";
    return kInconclusive;
  }
  out << "no bit-disjoint factorization\n";
  return kNegative;
}

int report_univariate(const UnivariateFactorization& f, std::ostream& out,
                      std::ostream& err) {
  for (const auto& [a, b] : f.pairs) out << pair_line(a, b) << "\n";
  if (f.status == SearchStatus::budget_exceeded) {
    if (!f.pairs.empty()) {
      err << "note: search budget exceeded; the list may be incomplete\n";
      return kOk;
    }
    out << "inconclusive: search budget exceeded\n";
    return kInconclusive;
  }
  if (f.pairs.empty()) {
    out << "irreducible\n";
    return kNegative;
  }
  return kOk;
}

int cmd_factor(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& input = o.inputs[0];
  const SearchBudget budget = budget_from(o.budget);
  if (!std::filesystem::is_regular_file(input)) {
    if (o.exhaustive)
      throw InputError("--exhaustive-labels needs a graph file");
    if (mentions_y(input))
      return report_disjoint(bit_disjoint_factor(parse_poly2(input), budget),
                             out, err);
    Poly1 p = parse_poly1(input);
    if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
    return report_univariate(factor_pairs(p, budget), out, err);
  }
  Loaded l = load(input);
  if (l.kind == io::DocKind::net)
    throw InputError("use net-decompose for Petri nets");
  if (l.kind == io::DocKind::digraph) {
    if (o.exhaustive)
      throw InputError("--exhaustive-labels supports undirected graphs only");
    auto phi = resolve_labels(l.digraph->labels, o.labels,
                              l.digraph->graph.v(), input, err);
    return report_disjoint(
        bit_disjoint_factor(encode_directed(l.digraph->graph, phi), budget),
        out, err);
  }
  const Bigraph& g = l.graph->graph;
  if (o.exhaustive) {
    auto r = is_irreducible_exhaustive(g, budget);
    if (r.verdict == Verdict::reducible) {
      Json phi = Json::object();
      for (const auto& id : g.v()) phi[id] = r.labeling->at(id);
      out << "reducible under labels " << phi.dump() << ": "
          << pair_line(encode(r.witness->left.graph, r.witness->left.labels),
                       encode(r.witness->right.graph, r.witness->right.labels))
          << "\n";
      return kOk;
    }
    if (r.verdict == Verdict::inconclusive) {
      out << "inconclusive: search budget exceeded\n";
      return kInconclusive;
    }
    out << "irreducible under every labeling onto 0.." << g.v().size()
        << " (compact labelings only)\n";
    return kNegative;
  }
  auto phi = resolve_labels(l.graph->labels, o.labels, g.v(), input, err);
  auto f = factor_graph(g, phi, budget);
  for (const auto& pair : f.pairs)
    out << pair_line(encode(pair.left.graph, pair.left.labels),
                     encode(pair.right.graph, pair.right.labels))
        << "\n";
  if (!f.pairs.empty()) {
    if (f.status == SearchStatus::budget_exceeded)
      err << "note: search budget exceeded; the list may be incomplete\n";
    return kOk;
  }
  if (f.status == SearchStatus::budget_exceeded) {
    out << "inconclusive: search budget exceeded\n";
    return kInconclusive;
  }
  out << "irreducible\n";
  return kNegative;
}

int cmd_canon(const Options& o, std::ostream& out) {
  Loaded l = load(o.inputs[0]);
  if (l.kind == io::DocKind::graph)
    out << render(canonical_poly(l.graph->graph)) << "\n";
  else if (l.kind == io::DocKind::digraph)
    out << render(canonical_poly_directed(l.digraph->graph)) << "\n";
  else
    throw InputError("canon takes a graph file");
  return kOk;
}

int cmd_iso(const Options& o, std::ostream& out) {
  Loaded a = load(o.inputs[0]);
  Loaded b = load(o.inputs[1]);
  if (a.kind != b.kind)
    throw InputError("iso needs two files of the same kind");
  Json w;
  bool found = false;
  if (a.kind == io::DocKind::net) {
    if (auto r = net_isomorphic(a.net->net, b.net->net)) {
      found = true;
      w["conditions"] = map_json(r->conditions, a.net->net.conditions());
      w["events"] = map_json(r->events, event_ids(a.net->net));
    }
  } else {
    std::optional<IsoWitness> r;
    const std::vector<std::string>* u = nullptr;
    const std::vector<std::string>* v = nullptr;
    if (a.kind == io::DocKind::graph) {
      r = is_isomorphic(a.graph->graph, b.graph->graph);
      u = &a.graph->graph.u();
      v = &a.graph->graph.v();
    } else {
      r = is_isomorphic_directed(a.digraph->graph, b.digraph->graph);
      u = &a.digraph->graph.u();
      v = &a.digraph->graph.v();
    }
    if (r) {
      found = true;
      w["u"] = map_json(r->u, *u);
      w["v"] = map_json(r->v, *v);
    }
  }
  if (!found) {
    out << "not isomorphic\n";
    return kNegative;
  }
  out << w.dump(2) << "\n";
  return kOk;
}

io::NetDoc load_net(const std::string& path) {
  return with_file(path, [](const std::string& t) { return io::parse_net(t); });
}

int cmd_net_encode(const Options& o, std::ostream& out, std::ostream& err) {
  auto n = load_net(o.inputs[0]);
  auto phi = resolve_labels(n.labels, o.labels, n.net.conditions(),
                            o.inputs[0], err);
  out << render(encode_net(n.net, phi)) << "\n";
  return kOk;
}

int cmd_net_decode(const Options& o, std::ostream& out) {
  auto n = decode_net(parse_poly2(o.inputs[0]));
  out << io::write_net(n.net, &n.labels);
  return kOk;
}

int cmd_net_product(const Options& o, std::ostream& out) {
  auto a = load_net(o.inputs[0]);
  auto b = load_net(o.inputs[1]);
  if (a.labels && b.labels && disjoint_images(*a.labels, *b.labels)) {
    auto r = net_product(LabeledPetriNet{a.net, *a.labels},
                         LabeledPetriNet{b.net, *b.labels});
    out << io::write_net(r.net, &r.labels);
  } else {
    out << io::write_net(net_product(a.net, b.net), nullptr);
  }
  return kOk;
}

Json certificate_json(const NetDecomposition& d, const PetriNet& product,
                      const Poly2& p) {
  Json c;
  c["polynomial"] = render(p);
  c["left"] = render(d.left_poly);
  c["right"] = render(d.right_poly);
  c["conditions"] = map_json(d.certificate.conditions, product.conditions());
  c["events"] = map_json(d.certificate.events, event_ids(product));
  return c;
}

int cmd_net_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  auto n = load_net(o.inputs[0]);
  const SearchBudget budget = budget_from(o.budget);
  DecomposeResult r;
  if (o.exhaustive) {
    auto s = decompose_any_labeling(n.net, budget);
    if (s.labeling) {
      Json phi = Json::object();
      for (const auto& id : n.net.conditions()) phi[id] = s.labeling->at(id);
      err << "note: split found under labels " << phi.dump() << "\n";
      r = std::move(s.result);
    } else {
      r.status = s.status;
    }
  } else {
    auto phi = resolve_labels(n.labels, o.labels, n.net.conditions(),
                              o.inputs[0], err);
    r = decompose(LabeledPetriNet{n.net, phi}, budget);
  }
  for (std::size_t k = 0; k < r.pairs.size(); ++k) {
    const auto& d = r.pairs[k];
    out << pair_line(d.left_poly, d.right_poly) << "\n";
    if (o.out_prefix.empty()) continue;
    const std::string base = o.out_prefix + "-" + std::to_string(k + 1);
    const PetriNet product = net_product(d.left.net, d.right.net);
    write_file(base + "-left.json", io::write_net(d.left.net, &d.left.labels));
    write_file(base + "-right.json", io::write_net(d.right.net, &d.right.labels));
    write_file(base + "-certificate.json",
               certificate_json(d, product, r.polynomial).dump(2) + "\n");
    err << "wrote " << base << "-left.json, " << base << "-right.json, "
        << base << "-certificate.json\n";
  }
  if (!r.pairs.empty()) return kOk;
  if (r.status == SearchStatus::budget_exceeded) {
    out << "inconclusive: search budget exceeded\n";
    return kInconclusive;
  }
  out << "undecomposable\n";
  return kNegative;
}

int cmd_dot(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(o.inputs[0]);
  const bool want_labels = !o.labels.empty();
  auto pick = [&](const std::optional<Labeling>& inline_labels,
                  const std::vector<std::string>& ids) -> std::optional<Labeling> {
    if (!want_labels && !inline_labels) return std::nullopt;
    return resolve_labels(inline_labels, o.labels, ids, o.inputs[0], err);
  };
  if (l.kind == io::DocKind::graph) {
    auto phi = pick(l.graph->labels, l.graph->graph.v());
    out << dot::render(l.graph->graph, phi ? &*phi : nullptr);
  } else if (l.kind == io::DocKind::digraph) {
    auto phi = pick(l.digraph->labels, l.digraph->graph.v());
    out << dot::render(l.digraph->graph, phi ? &*phi : nullptr);
  } else {
    auto phi = pick(l.net->labels, l.net->net.conditions());
    out << dot::render(l.net->net, phi ? &*phi : nullptr);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bipartite graphs and Petri nets as polynomials over N[x], N[x,y]",
               "graphpoly"};
  app.require_subcommand(1);
  Options o;

  auto one = [&](const char* name, const char* help, const char* what) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(what, o.inputs)->required()->expected(1);
    return sub;
  };
  auto two = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", o.inputs, "two input files")->required()->expected(2);
    return sub;
  };
  auto labels_flag = [&](CLI::App* sub) {
    sub->add_option("--labels", o.labels, "labels file ({\"id\": n, ...})");
  };

  auto* encode_cmd = one("encode", "graph, digraph or net file -> polynomial", "file");
  labels_flag(encode_cmd);
  auto* decode_cmd = one("decode", "polynomial -> graph file", "polynomial");
  decode_cmd->add_flag("--directed", o.directed, "decode as a directed graph");
  CLI::App* product_cmd = two("product", "polynomial product of two labeled graphs");
  CLI::App* sum_cmd = two("sum", "polynomial sum of two labeled graphs");
  for (auto* sub : {product_cmd, sum_cmd}) {
    sub->add_flag("--directed", o.directed, "inputs are directed graphs");
    sub->add_option("--route", o.route,
                    "poly (decode the combined polynomial), direct, or "
                    "plain/union (unlabeled product/disjoint union)");
    sub->add_option("--labels1", o.labels, "labels file for the first graph");
    sub->add_option("--labels2", o.labels2, "labels file for the second graph");
  }
  auto* factor_cmd = one("factor", "graph file or polynomial -> factor pairs", "input");
  labels_flag(factor_cmd);
  factor_cmd->add_flag("--exhaustive-labels", o.exhaustive,
                       "try every labeling onto 0..|V|-1");
  factor_cmd->add_option("--budget", o.budget, "search budget");
  one("canon", "graph file -> canonical polynomial", "file");
  two("iso", "isomorphism witness for two graph or net files");
  auto* net_encode_cmd = one("net-encode", "net file -> polynomial", "file");
  labels_flag(net_encode_cmd);
  one("net-decode", "polynomial -> net file", "polynomial");
  two("net-product", "pointed product of two nets");
  auto* decompose_cmd = one("net-decompose", "split a net into a product", "file");
  labels_flag(decompose_cmd);
  decompose_cmd->add_flag("--exhaustive-labels", o.exhaustive,
                          "try every labeling onto 0..|B|-1");
  decompose_cmd->add_option("--budget", o.budget, "search budget");
  decompose_cmd->add_option("--out-prefix", o.out_prefix,
                            "write factor nets and certificate as PREFIX-k-*.json");
  auto* dot_cmd = one("dot", "graph, digraph or net file -> Graphviz", "file");
  labels_flag(dot_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "encode") return cmd_encode(o, out, err);
    if (name == "decode") return cmd_decode(o, out);
    if (name == "product") return cmd_binary_op(o, true, out, err);
    if (name == "sum") return cmd_binary_op(o, false, out, err);
    if (name == "factor") return cmd_factor(o, out, err);
    if (name == "canon") return cmd_canon(o, out);
    if (name == "iso") return cmd_iso(o, out);
    if (name == "net-encode") return cmd_net_encode(o, out, err);
    if (name == "net-decode") return cmd_net_decode(o, out);
    if (name == "net-product") return cmd_net_product(o, out);
    if (name == "net-decompose") return cmd_net_decompose(o, out, err);
    if (name == "dot") return cmd_dot(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NaturalOverflow& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SizeGuardExceeded& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  }
  return kInputError;
}

}  // namespace graphpoly::cli

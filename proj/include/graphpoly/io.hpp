#pragma once

#include <optional>
#include <string>

#include "graphpoly/bigraph.hpp"
#include "graphpoly/digraph.hpp"
#include "graphpoly/petri.hpp"

// JSON file formats used by the command line tool.
//
//   graph:   {"u": [...], "v": [...], "edges": [[u, v], ...], "labels": {v: n}}
//   digraph: same, "directed": true, edges as {"u", "v", "dir"} with dir one
//            of "v_to_u" / "u_to_v" (or [u, v, dir] triples)
//   net:     {"conditions": [...], "events": [{"id", "pre", "post"}],
//             "labels": {condition: n}}
//
// Syntax errors carry line and column; structural errors name the offending
// JSON path. Both throw ParseError / InputError.
namespace graphpoly::io {

enum class DocKind { graph, digraph, net };

struct GraphDoc {
  Bigraph graph;
  std::optional<Labeling> labels;
};

struct DiGraphDoc {
  DiBigraph graph;
  std::optional<Labeling> labels;
};

struct NetDoc {
  PetriNet net;
  std::optional<Labeling> labels;
};

// "conditions" => net; "directed": true or any edge with "dir" => digraph.
DocKind detect_kind(const std::string& text);

GraphDoc parse_graph(const std::string& text);
DiGraphDoc parse_digraph(const std::string& text);
NetDoc parse_net(const std::string& text);
// A bare {"id": n, ...} object.
Labeling parse_labels(const std::string& text);

std::string write_graph(const Bigraph& g, const Labeling* labels);
std::string write_digraph(const DiBigraph& g, const Labeling* labels);
std::string write_net(const PetriNet& n, const Labeling* labels);

}  // namespace graphpoly::io

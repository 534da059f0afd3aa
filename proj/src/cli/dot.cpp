#include "graphpoly/dot.hpp"

#include <sstream>

namespace graphpoly::dot {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string caption(const std::string& id, const Labeling* labels) {
  if (labels)
    if (auto it = labels->find(id); it != labels->end())
      return quote(id + " = " + std::to_string(it->second));
  return quote(id);
}

void header(std::ostream& os, const char* kind, const char* name) {
  os << kind << ' ' << name << " {\n  rankdir=BT;\n";
}

void u_nodes(std::ostream& os, const std::vector<std::string>& u) {
  for (const auto& id : u)
    os << "  " << quote(id) << " [shape=point, xlabel=" << quote(id) << "];\n";
}

void v_nodes(std::ostream& os, const std::vector<std::string>& v,
             const Labeling* labels) {
  for (const auto& id : v)
    os << "  " << quote(id) << " [shape=circle, label=" << caption(id, labels)
       << "];\n";
}

}  // namespace

std::string render(const Bigraph& g, const Labeling* labels) {
  std::ostringstream os;
  header(os, "graph", "bigraph");
  u_nodes(os, g.u());
  v_nodes(os, g.v(), labels);
  for (std::size_t i = 0; i < g.u().size(); ++i)
    for (std::size_t j : g.neighbors(i))
      os << "  " << quote(g.u()[i]) << " -- " << quote(g.v()[j]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string render(const DiBigraph& g, const Labeling* labels) {
  std::ostringstream os;
  header(os, "digraph", "dibigraph");
  u_nodes(os, g.u());
  v_nodes(os, g.v(), labels);
  for (std::size_t i = 0; i < g.u().size(); ++i) {
    for (std::size_t j : g.in(i))
      os << "  " << quote(g.v()[j]) << " -> " << quote(g.u()[i]) << ";\n";
    for (std::size_t j : g.out(i))
      os << "  " << quote(g.u()[i]) << " -> " << quote(g.v()[j]) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string render(const PetriNet& n, const Labeling* labels) {
  std::ostringstream os;
  header(os, "digraph", "net");
  v_nodes(os, n.conditions(), labels);
  for (const auto& e : n.events())
    os << "  " << quote(e.id) << " [shape=box, label=" << quote(e.id) << "];\n";
  for (std::size_t e = 0; e < n.events().size(); ++e) {
    const std::string& id = n.events()[e].id;
    for (std::size_t c : n.pre(e))
      os << "  " << quote(n.conditions()[c]) << " -> " << quote(id) << ";\n";
    for (std::size_t c : n.post(e))
      os << "  " << quote(id) << " -> " << quote(n.conditions()[c]) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace graphpoly::dot

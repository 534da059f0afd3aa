#pragma once

#include <string>

#include "graphpoly/bigraph.hpp"
#include "graphpoly/digraph.hpp"
#include "graphpoly/petri.hpp"

// Graphviz renderings. Output depends only on the input (vertex order as
// stored), so it is byte-stable. A non-null labeling is shown next to the
// V-vertex / condition id as "id = n".
namespace graphpoly::dot {

std::string render(const Bigraph& g, const Labeling* labels = nullptr);
std::string render(const DiBigraph& g, const Labeling* labels = nullptr);
std::string render(const PetriNet& n, const Labeling* labels = nullptr);

}  // namespace graphpoly::dot

#include "graphpoly/graph_ops.hpp"

#include <set>

namespace graphpoly {

std::string pair_id(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::string side_id(int side, const std::string& id) {
  return std::to_string(side) + ":" + id;
}

bool disjoint_images(const Labeling& phi1, const Labeling& phi2) {
  std::set<std::uint64_t> seen;
  for (const auto& [id, l] : phi1) seen.insert(l);
  for (const auto& [id, l] : phi2)
    if (seen.count(l)) return false;
  return true;
}

DecodedBigraph poly_product(const Bigraph& g1, const Labeling& phi1,
                            const Bigraph& g2, const Labeling& phi2) {
  return decode(mul(encode(g1, phi1), encode(g2, phi2)));
}

DecodedBigraph poly_sum(const Bigraph& g1, const Labeling& phi1,
                        const Bigraph& g2, const Labeling& phi2) {
  return decode(add(encode(g1, phi1), encode(g2, phi2)));
}

namespace {

// V-part named by bit positions, collected from the given exponents.
void positions_as_vertices(const std::set<std::uint64_t>& bits,
                           std::vector<std::string>& v_ids, Labeling& labels) {
  for (std::uint64_t t : bits) {
    v_ids.push_back(std::to_string(t));
    labels[v_ids.back()] = t;
  }
}

// Merges V1 and V2 along equal labels. Returns the class id of every
// vertex, keyed by its side-tagged id.
std::map<std::string, std::string> quotient_vertices(
    const std::vector<std::string>& v1, const Labeling& phi1,
    const std::vector<std::string>& v2, const Labeling& phi2,
    std::vector<std::string>& v_ids, Labeling& labels) {
  std::map<std::string, std::string> cls;
  std::map<std::uint64_t, std::string> by_label;
  for (const auto& v : v1) {
    std::string id = side_id(1, v);
    v_ids.push_back(id);
    labels[id] = phi1.at(v);
    by_label[phi1.at(v)] = id;
    cls[id] = id;
  }
  for (const auto& v : v2) {
    std::string id = side_id(2, v);
    auto it = by_label.find(phi2.at(v));
    if (it != by_label.end()) {
      cls[id] = it->second;
      continue;
    }
    v_ids.push_back(id);
    labels[id] = phi2.at(v);
    cls[id] = id;
  }
  return cls;
}

}  // namespace

LabeledBigraph direct_product(const Bigraph& g1, const Labeling& phi1,
                              const Bigraph& g2, const Labeling& phi2) {
  validate_labeling(g1.v(), phi1);
  validate_labeling(g2.v(), phi2);
  std::vector<std::string> u_ids;
  std::vector<Bigraph::Edge> edges;
  std::set<std::uint64_t> bits;
  for (std::size_t i = 0; i < g1.u().size(); ++i) {
    const BitExp d1 = neighbor_exponent(g1, phi1, i);
    for (std::size_t j = 0; j < g2.u().size(); ++j) {
      const BitExp d = d1 + neighbor_exponent(g2, phi2, j);
      u_ids.push_back(pair_id(g1.u()[i], g2.u()[j]));
      for (std::uint64_t t : d.positions()) {
        edges.emplace_back(u_ids.back(), std::to_string(t));
        bits.insert(t);
      }
    }
  }
  LabeledBigraph out;
  std::vector<std::string> v_ids;
  positions_as_vertices(bits, v_ids, out.labels);
  out.graph = Bigraph(std::move(u_ids), std::move(v_ids), edges);
  return out;
}

LabeledBigraph direct_sum(const Bigraph& g1, const Labeling& phi1,
                          const Bigraph& g2, const Labeling& phi2) {
  validate_labeling(g1.v(), phi1);
  validate_labeling(g2.v(), phi2);
  LabeledBigraph out;
  std::vector<std::string> v_ids;
  auto cls = quotient_vertices(g1.v(), phi1, g2.v(), phi2, v_ids, out.labels);
  std::vector<std::string> u_ids;
  std::vector<Bigraph::Edge> edges;
  for (int side : {1, 2}) {
    const Bigraph& g = side == 1 ? g1 : g2;
    for (std::size_t i = 0; i < g.u().size(); ++i) {
      u_ids.push_back(side_id(side, g.u()[i]));
      for (std::size_t vi : g.neighbors(i))
        edges.emplace_back(u_ids.back(), cls.at(side_id(side, g.v()[vi])));
    }
  }
  out.graph = Bigraph(std::move(u_ids), std::move(v_ids), edges);
  return out;
}

Bigraph plain_product(const Bigraph& g1, const Bigraph& g2) {
  std::vector<std::string> u_ids, v_ids;
  std::vector<Bigraph::Edge> edges;
  for (const auto& v : g1.v()) v_ids.push_back(side_id(1, v));
  for (const auto& v : g2.v()) v_ids.push_back(side_id(2, v));
  for (std::size_t i = 0; i < g1.u().size(); ++i) {
    for (std::size_t j = 0; j < g2.u().size(); ++j) {
      u_ids.push_back(pair_id(g1.u()[i], g2.u()[j]));
      for (std::size_t vi : g1.neighbors(i))
        edges.emplace_back(u_ids.back(), side_id(1, g1.v()[vi]));
      for (std::size_t vj : g2.neighbors(j))
        edges.emplace_back(u_ids.back(), side_id(2, g2.v()[vj]));
    }
  }
  return Bigraph(std::move(u_ids), std::move(v_ids), edges);
}

Bigraph disjoint_union(const Bigraph& g1, const Bigraph& g2) {
  std::vector<std::string> u_ids, v_ids;
  std::vector<Bigraph::Edge> edges;
  for (int side : {1, 2}) {
    const Bigraph& g = side == 1 ? g1 : g2;
    for (const auto& u : g.u()) u_ids.push_back(side_id(side, u));
    for (const auto& v : g.v()) v_ids.push_back(side_id(side, v));
    for (const auto& [u, v] : g.edges())
      edges.emplace_back(side_id(side, u), side_id(side, v));
  }
  return Bigraph(std::move(u_ids), std::move(v_ids), edges);
}

DecodedDiBigraph poly_product_directed(const DiBigraph& g1,
                                       const Labeling& phi1,
                                       const DiBigraph& g2,
                                       const Labeling& phi2) {
  return decode_directed(
      mul(encode_directed(g1, phi1), encode_directed(g2, phi2)));
}

DecodedDiBigraph poly_sum_directed(const DiBigraph& g1, const Labeling& phi1,
                                   const DiBigraph& g2, const Labeling& phi2) {
  return decode_directed(
      add(encode_directed(g1, phi1), encode_directed(g2, phi2)));
}

LabeledDiBigraph direct_product_directed(const DiBigraph& g1,
                                         const Labeling& phi1,
                                         const DiBigraph& g2,
                                         const Labeling& phi2) {
  validate_labeling(g1.v(), phi1);
  validate_labeling(g2.v(), phi2);
  std::vector<std::string> u_ids;
  std::vector<DiBigraph::Arc> arcs;
  std::set<std::uint64_t> bits;
  for (std::size_t i = 0; i < g1.u().size(); ++i) {
    const Monomial<2> e1 = arc_exponents(g1, phi1, i);
    for (std::size_t j = 0; j < g2.u().size(); ++j) {
      const Monomial<2> e2 = arc_exponents(g2, phi2, j);
      const BitExp in = e1[0] + e2[0];
      const BitExp out = e1[1] + e2[1];
      const std::string id = pair_id(g1.u()[i], g2.u()[j]);
      u_ids.push_back(id);
      for (std::uint64_t t : in.positions()) {
        arcs.emplace_back(std::to_string(t), id);
        bits.insert(t);
      }
      for (std::uint64_t t : out.positions()) {
        arcs.emplace_back(id, std::to_string(t));
        bits.insert(t);
      }
    }
  }
  LabeledDiBigraph result;
  std::vector<std::string> v_ids;
  positions_as_vertices(bits, v_ids, result.labels);
  result.graph = DiBigraph(std::move(u_ids), std::move(v_ids), arcs);
  return result;
}

LabeledDiBigraph direct_sum_directed(const DiBigraph& g1, const Labeling& phi1,
                                     const DiBigraph& g2,
                                     const Labeling& phi2) {
  validate_labeling(g1.v(), phi1);
  validate_labeling(g2.v(), phi2);
  LabeledDiBigraph out;
  std::vector<std::string> v_ids;
  auto cls = quotient_vertices(g1.v(), phi1, g2.v(), phi2, v_ids, out.labels);
  std::vector<std::string> u_ids;
  std::vector<DiBigraph::Arc> arcs;
  for (int side : {1, 2}) {
    const DiBigraph& g = side == 1 ? g1 : g2;
    for (std::size_t i = 0; i < g.u().size(); ++i) {
      const std::string id = side_id(side, g.u()[i]);
      u_ids.push_back(id);
      for (std::size_t vi : g.in(i))
        arcs.emplace_back(cls.at(side_id(side, g.v()[vi])), id);
      for (std::size_t vi : g.out(i))
        arcs.emplace_back(id, cls.at(side_id(side, g.v()[vi])));
    }
  }
  out.graph = DiBigraph(std::move(u_ids), std::move(v_ids), arcs);
  return out;
}

DiBigraph plain_product_directed(const DiBigraph& g1, const DiBigraph& g2) {
  std::vector<std::string> u_ids, v_ids;
  std::vector<DiBigraph::Arc> arcs;
  for (const auto& v : g1.v()) v_ids.push_back(side_id(1, v));
  for (const auto& v : g2.v()) v_ids.push_back(side_id(2, v));
  for (std::size_t i = 0; i < g1.u().size(); ++i) {
    for (std::size_t j = 0; j < g2.u().size(); ++j) {
      const std::string id = pair_id(g1.u()[i], g2.u()[j]);
      u_ids.push_back(id);
      for (int side : {1, 2}) {
        const DiBigraph& g = side == 1 ? g1 : g2;
        const std::size_t k = side == 1 ? i : j;
        for (std::size_t vi : g.in(k))
          arcs.emplace_back(side_id(side, g.v()[vi]), id);
        for (std::size_t vi : g.out(k))
          arcs.emplace_back(id, side_id(side, g.v()[vi]));
      }
    }
  }
  return DiBigraph(std::move(u_ids), std::move(v_ids), arcs);
}

DiBigraph disjoint_union_directed(const DiBigraph& g1, const DiBigraph& g2) {
  std::vector<std::string> u_ids, v_ids;
  std::vector<DiBigraph::Arc> arcs;
  for (int side : {1, 2}) {
    const DiBigraph& g = side == 1 ? g1 : g2;
    for (const auto& u : g.u()) u_ids.push_back(side_id(side, u));
    for (const auto& v : g.v()) v_ids.push_back(side_id(side, v));
    for (const auto& [s, t] : g.arcs())
      arcs.emplace_back(side_id(side, s), side_id(side, t));
  }
  return DiBigraph(std::move(u_ids), std::move(v_ids), arcs);
}

}  // namespace graphpoly

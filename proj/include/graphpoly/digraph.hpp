#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/bigraph.hpp"
#include "graphpoly/polynomial.hpp"

namespace graphpoly {

// Directed bipartite graph. Every arc joins a V-vertex and a U-vertex in
// either direction; v->u and u->v may coexist.
class DiBigraph {
 public:
  using Arc = std::pair<std::string, std::string>;  // (source, target)

  DiBigraph() = default;
  DiBigraph(std::vector<std::string> u, std::vector<std::string> v,
            const std::vector<Arc>& arcs);

  const std::vector<std::string>& u() const { return u_; }
  const std::vector<std::string>& v() const { return v_; }
  const std::set<Arc>& arcs() const { return arcs_; }

  // V-indices with an arc into / out of the U-vertex at u_index.
  const std::vector<std::size_t>& in(std::size_t u_index) const {
    return in_[u_index];
  }
  const std::vector<std::size_t>& out(std::size_t u_index) const {
    return out_[u_index];
  }
  std::optional<std::size_t> u_index(const std::string& id) const;
  std::optional<std::size_t> v_index(const std::string& id) const;

  friend bool operator==(const DiBigraph& a, const DiBigraph& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.arcs_ == b.arcs_;
  }

 private:
  std::vector<std::string> u_, v_;
  std::set<Arc> arcs_;
  std::vector<std::vector<std::size_t>> in_, out_;
  std::map<std::string, std::size_t> u_pos_, v_pos_;
};

struct LabeledDiBigraph {
  DiBigraph graph;
  Labeling labels;
};

struct DiUTag {
  Monomial<2> exponent;  // (incoming, outgoing)
  std::uint64_t copy = 1;
};

struct DecodedDiBigraph : LabeledDiBigraph {
  std::vector<DiUTag> tags;
};

// (d_-(u), d_+(u)): bit sets of the labels on incoming and outgoing arcs.
Monomial<2> arc_exponents(const DiBigraph& g, const Labeling& phi,
                          std::size_t u_index);

// Sum over U of x^d_-(u) y^d_+(u).
Poly2 encode_directed(const DiBigraph& g, const Labeling& phi);

// Term n*x^i*y^j yields n U-vertices with arcs from tau(i) and to tau(j).
DecodedDiBigraph decode_directed(const Poly2& p);

std::string decoded_di_u_id(const Monomial<2>& exponent, std::uint64_t copy);

std::optional<IsoWitness> is_isomorphic_directed(
    const DiBigraph& g1, const DiBigraph& g2, const IsoOptions& options = {});

bool verify_isomorphism_directed(const DiBigraph& g1, const DiBigraph& g2,
                                 const IsoWitness& w);

DiBigraph strip_isolated_v(const DiBigraph& g);

// strip_isolated_v(g) -> decode_directed(encode_directed(g, phi)).graph.
IsoWitness natural_witness_directed(const DiBigraph& g, const Labeling& phi);

// Minimum of encode_directed over compact labelings.
Poly2 canonical_poly_directed(const DiBigraph& g, std::size_t max_v = 8);

}  // namespace graphpoly

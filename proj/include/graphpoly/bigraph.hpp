#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/polynomial.hpp"

namespace graphpoly {

// Injective assignment of naturals to V-vertices (or Petri conditions).
using Labeling = std::map<std::string, std::uint64_t>;

// Finite simple bipartite graph with an explicit bipartition. Vertex order
// is the construction order; ids are nonempty and whitespace-free.
class Bigraph {
 public:
  using Edge = std::pair<std::string, std::string>;  // (u-id, v-id)

  Bigraph() = default;
  // Throws InvalidGraph on duplicate ids, ids shared by both parts, or edges
  // whose endpoints are not in their declared parts. Duplicate edges are
  // rejected as well.
  Bigraph(std::vector<std::string> u, std::vector<std::string> v,
          const std::vector<Edge>& edges);

  const std::vector<std::string>& u() const { return u_; }
  const std::vector<std::string>& v() const { return v_; }
  const std::set<Edge>& edges() const { return edges_; }

  // V-indices adjacent to the U-vertex at `u_index`, ascending.
  const std::vector<std::size_t>& neighbors(std::size_t u_index) const {
    return adj_[u_index];
  }
  std::optional<std::size_t> u_index(const std::string& id) const;
  std::optional<std::size_t> v_index(const std::string& id) const;

  friend bool operator==(const Bigraph& a, const Bigraph& b) {
    return a.u_ == b.u_ && a.v_ == b.v_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> u_, v_;
  std::set<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::map<std::string, std::size_t> u_pos_, v_pos_;
};

struct LabeledBigraph {
  Bigraph graph;
  Labeling labels;
};

// Decoded U-vertex tag: the exponent it came from and its copy index
// (1..coefficient).
struct UTag {
  BitExp exponent;
  std::uint64_t copy = 1;
};

// Result of decoding a polynomial. V-ids are decimal bit positions,
// `labels` is the natural injection (each V-id maps to its own position),
// and tags[i] describes graph.u()[i].
struct DecodedBigraph : LabeledBigraph {
  std::vector<UTag> tags;
};

// Throws InvalidLabeling unless phi is total on V, injective, and mentions
// no other ids.
void validate_labeling(const std::vector<std::string>& v_ids,
                       const Labeling& phi);

// Labels V-vertices 0..|V|-1 in their stored order.
Labeling compact_labeling(const std::vector<std::string>& v_ids);

// d(u): the exponent whose bit set is {phi(v) : v adjacent to u}.
BitExp neighbor_exponent(const Bigraph& g, const Labeling& phi,
                         std::size_t u_index);

// Sum over U of x^d(u). Isolated U-vertices contribute the term 1.
Poly1 encode(const Bigraph& g, const Labeling& phi);

// V = tau_poly(p); each term n*x^i yields n U-vertices adjacent to tau(i).
DecodedBigraph decode(const Poly1& p);

std::string decoded_u_id(const BitExp& exponent, std::uint64_t copy);

// Part-respecting isomorphism: u-id -> u-id and v-id -> v-id.
struct IsoWitness {
  std::map<std::string, std::string> u;
  std::map<std::string, std::string> v;
};

struct IsoOptions {
  std::size_t max_v = 12;
};

std::optional<IsoWitness> is_isomorphic(const Bigraph& g1, const Bigraph& g2,
                                        const IsoOptions& options = {});

// True iff `w` is a pair of bijections preserving adjacency both ways.
bool verify_isomorphism(const Bigraph& g1, const Bigraph& g2,
                        const IsoWitness& w);

// g without its isolated V-vertices: the part the polynomial can see.
Bigraph strip_isolated_v(const Bigraph& g);

// The isomorphism strip_isolated_v(g) -> decode(encode(g, phi)).graph sending
// v to phi(v) and each U-vertex to a copy of its exponent class.
IsoWitness natural_witness(const Bigraph& g, const Labeling& phi);

// Minimum of encode(g, phi) over all bijections phi: V -> {0..|V|-1} in the
// polynomial order of compare(). Throws SizeGuardExceeded for |V| > max_v.
Poly1 canonical_poly(const Bigraph& g, std::size_t max_v = 8);

}  // namespace graphpoly

#pragma once

#include <string>

#include "graphpoly/bigraph.hpp"
#include "graphpoly/digraph.hpp"

namespace graphpoly {

// Polynomial product and sum of labeled graphs, each by two routes:
//   poly_*   decode the product/sum of the encodings (the definition);
//   direct_* build the graph combinatorially, without polynomial arithmetic.
// Results agree up to isomorphism. Outputs of poly_* carry the natural
// injection; outputs of direct_* carry the induced labeling.
//
// Vertex ids of combined graphs: pairs are written "(a,b)", the two sides of
// a disjoint union are tagged "1:" and "2:".

std::string pair_id(const std::string& a, const std::string& b);
std::string side_id(int side, const std::string& id);

DecodedBigraph poly_product(const Bigraph& g1, const Labeling& phi1,
                            const Bigraph& g2, const Labeling& phi2);

// U = U1 x U2; (u1,u2) is adjacent to every bit of d(u1) + d(u2); V is the
// union of those bit sets, labeled by themselves.
LabeledBigraph direct_product(const Bigraph& g1, const Labeling& phi1,
                              const Bigraph& g2, const Labeling& phi2);

DecodedBigraph poly_sum(const Bigraph& g1, const Labeling& phi1,
                        const Bigraph& g2, const Labeling& phi2);

// U = U1 + U2; V = (V1 + V2) with v1 ~ v2 identified when phi1(v1) ==
// phi2(v2); edges are inherited through the quotient.
LabeledBigraph direct_sum(const Bigraph& g1, const Labeling& phi1,
                          const Bigraph& g2, const Labeling& phi2);

// Categorical product: U = U1 x U2, V = V1 + V2, (u1,u2) ~ v iff v is a
// neighbor of u1 (v in V1) or of u2 (v in V2).
Bigraph plain_product(const Bigraph& g1, const Bigraph& g2);
Bigraph disjoint_union(const Bigraph& g1, const Bigraph& g2);

DecodedDiBigraph poly_product_directed(const DiBigraph& g1, const Labeling& phi1,
                                       const DiBigraph& g2, const Labeling& phi2);
LabeledDiBigraph direct_product_directed(const DiBigraph& g1,
                                         const Labeling& phi1,
                                         const DiBigraph& g2,
                                         const Labeling& phi2);
DecodedDiBigraph poly_sum_directed(const DiBigraph& g1, const Labeling& phi1,
                                   const DiBigraph& g2, const Labeling& phi2);
LabeledDiBigraph direct_sum_directed(const DiBigraph& g1, const Labeling& phi1,
                                     const DiBigraph& g2, const Labeling& phi2);
DiBigraph plain_product_directed(const DiBigraph& g1, const DiBigraph& g2);
DiBigraph disjoint_union_directed(const DiBigraph& g1, const DiBigraph& g2);

// True iff the two labelings have disjoint images.
bool disjoint_images(const Labeling& phi1, const Labeling& phi2);

}  // namespace graphpoly

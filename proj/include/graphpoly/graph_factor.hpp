#pragma once

#include <optional>
#include <vector>

#include "graphpoly/bigraph.hpp"
#include "graphpoly/factorize.hpp"

namespace graphpoly {

// Two decoded graphs (each with its natural injection) whose polynomial
// product is the factored graph.
struct GraphFactor {
  DecodedBigraph left;
  DecodedBigraph right;
};

struct GraphFactorization {
  SearchStatus status = SearchStatus::complete;
  Poly1 polynomial;  // encode(g, phi)
  std::vector<GraphFactor> pairs;
};

// One entry per pair from factor_pairs(encode(g, phi)). Every pair is checked
// before it is returned: the factors multiply back to the encoding and g is
// isomorphic to their polynomial product.
GraphFactorization factor_graph(const Bigraph& g, const Labeling& phi,
                                const SearchBudget& budget = {});

enum class Verdict { irreducible, reducible, inconclusive };

struct IrreducibilityResult {
  Verdict verdict = Verdict::irreducible;
  // Set in exhaustive mode: an "irreducible" verdict only covers labelings
  // into {0..|V|-1}.
  bool compact_labelings_only = false;
  std::optional<Labeling> labeling;  // the labeling that split g
  std::optional<GraphFactor> witness;
};

IrreducibilityResult is_irreducible(const Bigraph& g, const Labeling& phi,
                                    const SearchBudget& budget = {});

// Tries every bijection V -> {0..|V|-1}; reducible as soon as one labeling
// yields a nonconstant factorization. Throws SizeGuardExceeded for
// |V| > max_v.
IrreducibilityResult is_irreducible_exhaustive(const Bigraph& g,
                                               const SearchBudget& budget = {},
                                               std::size_t max_v = 8);

}  // namespace graphpoly

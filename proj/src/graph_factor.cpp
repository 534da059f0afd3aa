#include "graphpoly/graph_factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "graphpoly/errors.hpp"
#include "graphpoly/graph_ops.hpp"

namespace graphpoly {

GraphFactorization factor_graph(const Bigraph& g, const Labeling& phi,
                                const SearchBudget& budget) {
  GraphFactorization out;
  out.polynomial = encode(g, phi);
  if (out.polynomial.is_zero()) return out;

  const auto split = factor_pairs(out.polynomial, budget);
  out.status = split.status;
  const IsoWitness to_decoded = natural_witness(g, phi);
  const Bigraph visible = strip_isolated_v(g);
  for (const auto& [q, r] : split.pairs) {
    GraphFactor f{decode(q), decode(r)};
    const Poly1 back = mul(encode(f.left.graph, f.left.labels),
                           encode(f.right.graph, f.right.labels));
    const DecodedBigraph product =
        poly_product(f.left.graph, f.left.labels, f.right.graph, f.right.labels);
    if (back != out.polynomial ||
        !verify_isomorphism(visible, product.graph, to_decoded))
      throw std::logic_error("factor_graph produced an unsound factor pair");
    out.pairs.push_back(std::move(f));
  }
  return out;
}

IrreducibilityResult is_irreducible(const Bigraph& g, const Labeling& phi,
                                    const SearchBudget& budget) {
  IrreducibilityResult out;
  auto f = factor_graph(g, phi, budget);
  if (!f.pairs.empty()) {
    out.verdict = Verdict::reducible;
    out.labeling = phi;
    out.witness = std::move(f.pairs.front());
  } else if (f.status == SearchStatus::budget_exceeded) {
    out.verdict = Verdict::inconclusive;
  }
  return out;
}

IrreducibilityResult is_irreducible_exhaustive(const Bigraph& g,
                                               const SearchBudget& budget,
                                               std::size_t max_v) {
  const std::size_t n = g.v().size();
  if (n > max_v)
    throw SizeGuardExceeded("exhaustive labeling sweep refused: |V| = " +
                            std::to_string(n) + " exceeds the guard of " +
                            std::to_string(max_v));
  IrreducibilityResult out;
  out.compact_labelings_only = true;
  bool inconclusive = false;
  std::vector<std::uint64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Labeling phi;
    for (std::size_t i = 0; i < n; ++i) phi[g.v()[i]] = perm[i];
    auto r = is_irreducible(g, phi, budget);
    if (r.verdict == Verdict::reducible) {
      r.compact_labelings_only = true;
      return r;
    }
    inconclusive = inconclusive || r.verdict == Verdict::inconclusive;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (inconclusive) out.verdict = Verdict::inconclusive;
  return out;
}

}  // namespace graphpoly

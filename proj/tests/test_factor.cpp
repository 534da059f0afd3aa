#include <doctest.h>

#include "graphpoly/errors.hpp"
#include "graphpoly/graph_factor.hpp"
#include "graphpoly/graph_ops.hpp"
#include "oracles.hpp"

using namespace graphpoly;

namespace {

// Example graph of x^3 + 2x^2 + 2x + 1, built as a product.
DecodedBigraph example6() {
  const Bigraph g1({"a", "b"}, {"v11"}, {{"a", "v11"}});
  const Bigraph g2({"c", "d", "e"}, {"v21", "v22"}, {{"c", "v22"}, {"d", "v21"}});
  return poly_product(g1, {{"v11", 0}}, g2, {{"v21", 0}, {"v22", 1}});
}

}  // namespace

TEST_SUITE("factor") {

TEST_CASE("factor_graph on the worked example") {
  const auto g = example6();
  CHECK(render(encode(g.graph, g.labels)) == "x^3 + 2*x^2 + 2*x + 1");
  const auto f = factor_graph(g.graph, g.labels);
  CHECK(f.status == SearchStatus::complete);
  REQUIRE(f.pairs.size() == 1);
  const Bigraph two_over_one({"a", "b"}, {"v"}, {{"a", "v"}});
  const Bigraph three_over_two({"c", "d", "e"}, {"p", "q"}, {{"c", "q"}, {"d", "p"}});
  auto left = f.pairs[0].left.graph, right = f.pairs[0].right.graph;
  if (left.u().size() > right.u().size()) std::swap(left, right);
  CHECK(is_isomorphic(left, two_over_one).has_value());
  CHECK(is_isomorphic(right, three_over_two).has_value());
  CHECK_FALSE(f.pairs[0].left.graph.edges().empty());
  CHECK_FALSE(f.pairs[0].right.graph.edges().empty());
}

TEST_CASE("irreducible examples") {
  const auto g = decode(parse_poly1("x^3 + 1"));
  CHECK(factor_graph(g.graph, g.labels).pairs.empty());
  const auto r = is_irreducible(g.graph, g.labels);
  CHECK(r.verdict == Verdict::irreducible);
  CHECK_FALSE(r.compact_labelings_only);

  const Bigraph edge({"u"}, {"v"}, {{"u", "v"}});
  CHECK(factor_graph(edge, {{"v", 0}}).pairs.empty());
  CHECK(is_irreducible(Bigraph{}, {}).verdict == Verdict::irreducible);
}

TEST_CASE("reducible example") {
  const auto g = example6();
  const auto r = is_irreducible(g.graph, g.labels);
  CHECK(r.verdict == Verdict::reducible);
  REQUIRE(r.witness);
  CHECK(mul(encode(r.witness->left.graph, r.witness->left.labels),
            encode(r.witness->right.graph, r.witness->right.labels)) ==
        encode(g.graph, g.labels));
}

TEST_CASE("exhaustive labelings") {
  // both compact labelings give x^3 + 1
  const auto g = decode(parse_poly1("x^3 + 1"));
  const auto r = is_irreducible_exhaustive(g.graph);
  CHECK(r.compact_labelings_only);
  CHECK(r.verdict == Verdict::irreducible);

  // labels {0, 1} give x^3 + x^2 + x + 1 under one of the two bijections
  const Bigraph h({"a", "b", "c", "d"}, {"p", "q"},
                  {{"a", "p"}, {"a", "q"}, {"b", "p"}, {"c", "q"}});
  const auto s = is_irreducible_exhaustive(h);
  CHECK(s.verdict == Verdict::reducible);
  REQUIRE(s.labeling.has_value());
  CHECK_FALSE(factor_graph(h, *s.labeling).pairs.empty());
  const Bigraph edge({"u"}, {"v"}, {{"u", "v"}});
  CHECK(is_irreducible_exhaustive(edge).verdict == Verdict::irreducible);
  CHECK_THROWS_AS(is_irreducible_exhaustive(Bigraph({"u"}, oracle::ids("v", 9), {})),
                  SizeGuardExceeded);
}

TEST_CASE("soundness and consistency on random graphs") {
  oracle::Rng rng(61);
  int reducible = 0;
  for (int i = 0; i < 200; ++i) {
    const Bigraph g = oracle::random_bigraph(rng, 5, 3);
    const Labeling phi = oracle::random_labeling(rng, g.v(), oracle::range(0, 3));
    const Poly1 p = encode(g, phi);
    const auto f = factor_graph(g, phi);
    if (p.is_zero()) {
      CHECK(f.pairs.empty());
      continue;
    }
    CHECK(f.pairs.size() == factor_pairs(p).pairs.size());
    for (const auto& pair : f.pairs) {
      CHECK(mul(encode(pair.left.graph, pair.left.labels),
                encode(pair.right.graph, pair.right.labels)) == p);
      CHECK_FALSE(pair.left.graph.edges().empty());
      CHECK_FALSE(pair.right.graph.edges().empty());
    }
    reducible += !f.pairs.empty();
  }
  CHECK(reducible > 10);
}

}

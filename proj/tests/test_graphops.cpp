#include <doctest.h>

#include "graphpoly/graph_ops.hpp"
#include "oracles.hpp"

using namespace graphpoly;

namespace {

const Bigraph g1({"u11", "u12"}, {"v11", "v12"}, {{"u11", "v11"}, {"u11", "v12"}});
const Labeling phi1{{"v11", 0}, {"v12", 1}};
const Bigraph g2({"u21", "u22"}, {"v21", "v22"},
                 {{"u21", "v21"}, {"u22", "v21"}, {"u22", "v22"}});
const Labeling phi2{{"v21", 2}, {"v22", 3}};
const Labeling phi2_overlap{{"v21", 1}, {"v22", 2}};

bool iso(const Bigraph& a, const Bigraph& b) {
  auto w = is_isomorphic(a, b);
  return w && oracle::witness_ok(a, b, *w);
}

bool iso(const DiBigraph& a, const DiBigraph& b) {
  auto w = is_isomorphic_directed(a, b);
  return w && oracle::witness_ok(a, b, *w);
}

}  // namespace

TEST_SUITE("graphops") {

TEST_CASE("product examples") {
  const auto p = poly_product(g1, phi1, g2, phi2);
  CHECK(render(encode(p.graph, p.labels)) == "x^15 + x^12 + x^7 + x^4");
  const auto d = direct_product(g1, phi1, g2, phi2);
  CHECK(render(encode(d.graph, d.labels)) == "x^15 + x^12 + x^7 + x^4");
  CHECK(iso(p.graph, d.graph));
  CHECK(iso(p.graph, plain_product(g1, g2)));

  const auto q = poly_product(g1, phi1, g2, phi2_overlap);
  CHECK(render(encode(q.graph, q.labels)) == "x^9 + x^6 + x^5 + x^2");
  CHECK(iso(q.graph, direct_product(g1, phi1, g2, phi2_overlap).graph));
  CHECK_FALSE(iso(q.graph, plain_product(g1, g2)));
}

TEST_CASE("product units") {
  const Bigraph unit({"e"}, {}, {});
  const auto p = poly_product(g1, phi1, unit, {});
  CHECK(encode(p.graph, p.labels) == encode(g1, phi1));
  CHECK(direct_product(Bigraph{}, {}, g2, phi2).graph.u().empty());
  // single edges labeled 0 and 1: one U-vertex over {0, 1}
  const auto s = direct_product(Bigraph({"a"}, {"x"}, {{"a", "x"}}), {{"x", 0}},
                                Bigraph({"b"}, {"y"}, {{"b", "y"}}), {{"y", 1}});
  CHECK(s.graph.u().size() == 1);
  CHECK(s.graph.edges().size() == 2);
  CHECK(render(encode(s.graph, s.labels)) == "x^3");
}

TEST_CASE("sum examples") {
  const Bigraph h1({"u11", "u12"}, {"v11", "v12"},
                   {{"u11", "v11"}, {"u11", "v12"}, {"u12", "v12"}});
  const auto p = poly_sum(h1, phi1, g2, phi2_overlap);
  CHECK(render(encode(p.graph, p.labels)) == "x^6 + x^3 + 2*x^2");
  CHECK(p.graph.u().size() == 4);
  CHECK(p.graph.v().size() == 3);
  const auto d = direct_sum(h1, phi1, g2, phi2_overlap);
  CHECK(iso(p.graph, d.graph));
  CHECK(d.graph.v().size() == 3);

  const auto disjoint = poly_sum(g1, phi1, g2, phi2);
  CHECK(iso(disjoint.graph, disjoint_union(g1, g2)));

  const auto twice = direct_sum(g2, phi2, g2, phi2);
  CHECK(encode(twice.graph, twice.labels) == scale(encode(g2, phi2), 2));
  CHECK(twice.graph.v().size() == 2);

  const auto plus_empty = poly_sum(g2, phi2, Bigraph{}, {});
  CHECK(encode(plus_empty.graph, plus_empty.labels) == encode(g2, phi2));
}

TEST_CASE("directed examples") {
  const DiBigraph d1({"u11", "u12"}, {"v11", "v12"},
                     {{"u11", "v11"}, {"u11", "v12"}, {"v12", "u12"}});
  const DiBigraph d2({"u21", "u22"}, {"v21", "v22"},
                     {{"v21", "u21"}, {"v22", "u22"}, {"u22", "v21"}});
  const auto p = poly_product_directed(d1, phi1, d2, phi2);
  CHECK(render(encode_directed(p.graph, p.labels)) ==
        "x^10*y^4 + x^8*y^7 + x^6 + x^4*y^3");
  CHECK(iso(p.graph, direct_product_directed(d1, phi1, d2, phi2).graph));
  CHECK(iso(p.graph, plain_product_directed(d1, d2)));

  const auto q = poly_product_directed(d1, phi1, d2, phi2_overlap);
  CHECK(render(encode_directed(q.graph, q.labels)) ==
        "x^6*y^2 + x^4*y^5 + x^4 + x^2*y^3");
  CHECK(iso(q.graph, direct_product_directed(d1, phi1, d2, phi2_overlap).graph));

  const auto s = poly_sum_directed(d1, phi1, d2, phi2_overlap);
  CHECK(render(encode_directed(s.graph, s.labels)) == "x^4*y^2 + 2*x^2 + y^3");
  CHECK(iso(s.graph, direct_sum_directed(d1, phi1, d2, phi2_overlap).graph));
}

TEST_CASE("route equivalence, plain constructions, counts, commutativity") {
  oracle::Rng rng(51);
  for (int i = 0; i < 150; ++i) {
    const Bigraph a = oracle::random_bigraph(rng, 4, 4, 1);
    const Bigraph b = oracle::random_bigraph(rng, 4, 4, 1);
    const bool disjoint = oracle::coin(rng);
    Labeling pa, pb;
    if (disjoint) {
      pa = oracle::random_labeling(rng, a.v(), oracle::range(0, 4));
      pb = oracle::random_labeling(rng, b.v(), oracle::range(5, 10));
    } else {
      pa = oracle::random_labeling(rng, a.v(), oracle::range(0, 5));
      pb = oracle::random_labeling(rng, b.v(), oracle::range(0, 5));
    }
    const auto pp = poly_product(a, pa, b, pb);
    CHECK(iso(pp.graph, direct_product(a, pa, b, pb).graph));
    CHECK(iso(pp.graph, poly_product(b, pb, a, pa).graph));
    CHECK(pp.graph.u().size() == a.u().size() * b.u().size());
    const auto ps = poly_sum(a, pa, b, pb);
    CHECK(iso(ps.graph, direct_sum(a, pa, b, pb).graph));
    CHECK(ps.graph.u().size() == a.u().size() + b.u().size());
    if (disjoint) {
      CHECK(disjoint_images(pa, pb));
      CHECK(iso(pp.graph, plain_product(a, b)));
      CHECK(iso(ps.graph, disjoint_union(a, b)));
    }
  }
}

TEST_CASE("directed route equivalence") {
  oracle::Rng rng(52);
  for (int i = 0; i < 150; ++i) {
    const DiBigraph a = oracle::random_digraph(rng, 4, 4, 1);
    const DiBigraph b = oracle::random_digraph(rng, 4, 4, 1);
    const bool disjoint = oracle::coin(rng);
    const Labeling pa = oracle::random_labeling(rng, a.v(), oracle::range(0, 4));
    const Labeling pb = oracle::random_labeling(
        rng, b.v(), disjoint ? oracle::range(5, 9) : oracle::range(0, 4));
    const auto pp = poly_product_directed(a, pa, b, pb);
    CHECK(iso(pp.graph, direct_product_directed(a, pa, b, pb).graph));
    const auto ps = poly_sum_directed(a, pa, b, pb);
    CHECK(iso(ps.graph, direct_sum_directed(a, pa, b, pb).graph));
    if (disjoint) {
      CHECK(iso(pp.graph, plain_product_directed(a, b)));
      CHECK(iso(ps.graph, disjoint_union_directed(a, b)));
    }
  }
}

}

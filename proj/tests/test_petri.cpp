#include <doctest.h>

#include "graphpoly/errors.hpp"
#include "graphpoly/petri.hpp"
#include "oracles.hpp"

using namespace graphpoly;

namespace {

LabeledPetriNet two_conditions() {
  PetriNet n({"b0", "b1"}, {{"a", {"b0"}, {}}, {"b", {"b0"}, {"b1"}}, {"c", {}, {"b1"}}});
  return {n, {{"b0", 0}, {"b1", 1}}};
}

PetriNet loop_net() { return PetriNet({"b11"}, {{"e", {"b11"}, {"b11"}}}); }

PetriNet fork_net() {
  return PetriNet({"b21"}, {{"e1", {}, {"b21"}}, {"e2", {"b21"}, {}}});
}

Labeling compact(const PetriNet& n, std::uint64_t offset) {
  Labeling phi;
  for (std::size_t i = 0; i < n.conditions().size(); ++i)
    phi[n.conditions()[i]] = offset + i;
  return phi;
}

bool same_up_to_iso(const PetriNet& a, const PetriNet& b) {
  auto w = net_isomorphic(a, b);
  return w && verify_net_isomorphism(a, b, *w);
}

}  // namespace

TEST_SUITE("petri") {

TEST_CASE("validation") {
  CHECK_THROWS_AS(PetriNet({"b", "b"}, {}), InvalidGraph);
  CHECK_THROWS_AS(PetriNet({"b"}, {{"b", {}, {}}}), InvalidGraph);
  CHECK_THROWS_AS(PetriNet({"b"}, {{"e", {"c"}, {}}}), InvalidGraph);
  CHECK_THROWS_AS(PetriNet({"b"}, {{"e", {"b", "b"}, {}}}), InvalidGraph);
  CHECK_THROWS_AS(PetriNet({"b"}, {{"e", {}, {}}, {"e", {}, {}}}), InvalidGraph);
  CHECK_NOTHROW(PetriNet({"b"}, {{"e", {}, {}}}));
}

TEST_CASE("encode examples") {
  CHECK(render(encode_net(two_conditions())) == "x*y^2 + x + y^2 + 1");
  CHECK(render(encode_net(PetriNet({"b"}, {}), {{"b", 4}})) == "1");
  PetriNet cycle({"b0", "b1", "b2", "b3", "b4", "b5"},
                 {{"e1", {"b0", "b3"}, {"b1", "b2"}},
                  {"e2", {"b1", "b2"}, {"b3", "b0"}},
                  {"e3", {"b5", "b3"}, {"b2", "b4"}},
                  {"e4", {"b4", "b2"}, {"b3", "b5"}}});
  CHECK(render(encode_net(cycle, compact(cycle, 0))) ==
        "x^40*y^20 + x^20*y^40 + x^9*y^6 + x^6*y^9 + 1");
  CHECK_THROWS_AS(encode_net(cycle, {}), InvalidLabeling);
}

TEST_CASE("decode examples") {
  const auto a = decode_net(parse_poly2("x + 1"));
  CHECK(a.net.conditions() == std::vector<std::string>{"0"});
  REQUIRE(a.net.events().size() == 1);
  CHECK(a.net.events()[0].id == "e^(1,0)_1");
  CHECK(a.net.events()[0].pre == std::vector<std::string>{"0"});
  CHECK(a.net.events()[0].post.empty());

  const auto b = decode_net(parse_poly2("y^2 + 1"));
  CHECK(b.net.conditions() == std::vector<std::string>{"1"});
  REQUIRE(b.net.events().size() == 1);
  CHECK(b.net.events()[0].post == std::vector<std::string>{"1"});
  CHECK(b.labels.at("1") == 1);

  const auto one = decode_net(parse_poly2("1"));
  CHECK(one.net.conditions().empty());
  CHECK(one.net.events().empty());

  const auto three = decode_net(parse_poly2("3"));
  CHECK(three.net.events().size() == 2);
  CHECK(encode_net(three) == parse_poly2("3"));

  CHECK_THROWS_AS(decode_net(parse_poly2("x*y")), InputError);
  CHECK_THROWS_AS(decode_net(Poly2{}), InputError);
}

TEST_CASE("decode then encode") {
  oracle::Rng rng(81);
  for (int i = 0; i < 100; ++i) {
    Poly2 p = oracle::random_poly2(rng, oracle::pick(rng, 0, 4), 15, 3);
    p = add(p, Poly2::constant(oracle::pick(rng, 1, 3)));
    CHECK(encode_net(decode_net(p)) == p);
  }
}

TEST_CASE("pointed product examples") {
  const PetriNet p = net_product(loop_net(), fork_net());
  CHECK(p.events().size() == 5);
  CHECK(p.conditions() == std::vector<std::string>{"1:b11", "2:b21"});
  std::set<std::string> ids;
  for (const auto& e : p.events()) ids.insert(e.id);
  CHECK(ids == std::set<std::string>{"(e,*)", "(*,e1)", "(*,e2)", "(e,e1)", "(e,e2)"});
  for (const auto& e : p.events()) {
    if (e.id == "(e,e1)") {
      CHECK(e.pre == std::vector<std::string>{"1:b11"});
      CHECK(e.post == std::vector<std::string>{"1:b11", "2:b21"});
    }
  }

  // x + 1 times y^2 + 1 gives back the two-condition net
  const auto l = decode_net(parse_poly2("x + 1"));
  const auto r = decode_net(parse_poly2("y^2 + 1"));
  const auto lr = net_product(l, r);
  CHECK(encode_net(lr) == encode_net(two_conditions()));
  CHECK(same_up_to_iso(lr.net, two_conditions().net));

  // the net with no events is a unit
  const PetriNet unit;
  CHECK(same_up_to_iso(net_product(loop_net(), unit), loop_net()));
  CHECK(same_up_to_iso(net_product(unit, fork_net()), fork_net()));

  CHECK_THROWS_AS(net_product(l, decode_net(parse_poly2("x^3 + 1"))), InvalidLabeling);
}

TEST_CASE("isomorphism") {
  CHECK(same_up_to_iso(loop_net(), PetriNet({"c"}, {{"f", {"c"}, {"c"}}})));
  CHECK_FALSE(net_isomorphic(loop_net(), PetriNet({"c"}, {{"f", {"c"}, {}}})));
  CHECK_FALSE(net_isomorphic(fork_net(), PetriNet({"c"}, {{"f", {}, {"c"}},
                                                          {"g", {}, {"c"}}})));
  const PetriNet swapped({"z"}, {{"out", {"z"}, {}}, {"in", {}, {"z"}}});
  const auto w = net_isomorphic(fork_net(), swapped);
  REQUIRE(w);
  CHECK(w->events.at("e1") == "in");
  CHECK(w->conditions.at("b21") == "z");
  CHECK(complete_net_witness(fork_net(), swapped, {{"b21", "z"}}).has_value());
}

TEST_CASE("decompose examples") {
  const auto r = decompose(two_conditions());
  CHECK(r.status == SearchStatus::complete);
  REQUIRE(r.pairs.size() == 1);
  CHECK(render(r.pairs[0].left_poly) == "x + 1");
  CHECK(render(r.pairs[0].right_poly) == "y^2 + 1");
  const PetriNet back = net_product(r.pairs[0].left.net, r.pairs[0].right.net);
  CHECK(verify_net_isomorphism(back, two_conditions().net, r.pairs[0].certificate));

  CHECK(decompose({loop_net(), {{"b11", 0}}}).pairs.empty());
  CHECK(decompose({PetriNet({"b"}, {}), {{"b", 0}}}).pairs.empty());
  CHECK(decompose({fork_net(), {{"b21", 3}}}).pairs.empty());
}

TEST_CASE("decompose keeps untouched conditions") {
  PetriNet n({"b0", "b1", "idle"},
             {{"a", {"b0"}, {}}, {"b", {"b0"}, {"b1"}}, {"c", {}, {"b1"}}});
  const auto r = decompose({n, {{"b0", 0}, {"b1", 1}, {"idle", 7}}});
  REQUIRE(r.pairs.size() == 1);
  CHECK(r.pairs[0].left.net.conditions().size() == 2);
  CHECK(r.pairs[0].left.labels.at("7") == 7);
  CHECK(same_up_to_iso(net_product(r.pairs[0].left.net, r.pairs[0].right.net), n));
}

TEST_CASE("label sweep") {
  const auto s = decompose_any_labeling(two_conditions().net);
  REQUIRE(s.labeling.has_value());
  CHECK_FALSE(s.result.pairs.empty());
  CHECK(decompose_any_labeling(loop_net()).result.pairs.empty());
  CHECK_THROWS_AS(decompose_any_labeling(PetriNet(oracle::ids("b", 9), {}), {}, 8),
                  SizeGuardExceeded);
}

TEST_CASE("homomorphism and decomposition soundness") {
  oracle::Rng rng(82);
  for (int i = 0; i < 60; ++i) {
    const PetriNet n1 = oracle::random_net(rng, "p", 1, 3, 3);
    const PetriNet n2 = oracle::random_net(rng, "q", 1, 3, 3);
    const LabeledPetriNet l1{n1, compact(n1, 0)};
    const LabeledPetriNet l2{n2, compact(n2, n1.conditions().size())};
    const auto prod = net_product(l1, l2);
    CHECK(encode_net(prod) == mul(encode_net(l1), encode_net(l2)));
    CHECK(same_up_to_iso(prod.net, net_product(n2, n1)));
    const auto r = decompose(prod);
    CHECK_FALSE(r.pairs.empty());
    for (const auto& pair : r.pairs) {
      CHECK(mul(pair.left_poly, pair.right_poly) == r.polynomial);
      CHECK(verify_net_isomorphism(net_product(pair.left.net, pair.right.net),
                                   prod.net, pair.certificate));
    }
  }
}

}

#include <doctest.h>

#include "graphpoly/bitexp.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/polynomial.hpp"
#include "oracles.hpp"

using namespace graphpoly;

namespace {

std::vector<std::uint64_t> pos(const BitExp& e) { return e.positions(); }

}  // namespace

TEST_SUITE("bitcodec") {

TEST_CASE("tau of small naturals") {
  CHECK(pos(tau(std::uint64_t{5})) == std::vector<std::uint64_t>{0, 2});
  CHECK(tau(std::uint64_t{0}).is_zero());
  CHECK(pos(tau(std::uint64_t{12})) == std::vector<std::uint64_t>{2, 3});
  CHECK(pos(tau(Natural(1) << 200)) == std::vector<std::uint64_t>{200});
}

TEST_CASE("from_bits") {
  CHECK(from_bits(BitExp{0, 2}) == 5);
  CHECK(from_bits(BitExp{}) == 0);
  CHECK(from_bits(BitExp{1, 2, 3}) == 14);
  CHECK(from_bits_u64(BitExp{63}) == (std::uint64_t{1} << 63));
  CHECK_THROWS_AS(from_bits_u64(BitExp{64}), NaturalOverflow);
}

TEST_CASE("round trip up to 10^6") {
  for (std::uint64_t k = 0; k <= 1'000'000; ++k) {
    const BitExp e = tau(k);
    if (from_bits_u64(e) != k) FAIL("from_bits(tau(" << k << ")) != " << k);
    if (oracle::exp_u64(e) != k) FAIL("tau(" << k << ") has wrong bits");
  }
}

TEST_CASE("tau of from_bits on random sets") {
  oracle::Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::vector<std::uint64_t> s;
    for (std::uint64_t t = 0; t < 300; ++t)
      if (oracle::coin(rng, 0.05)) s.push_back(t);
    const BitExp e = BitExp::from_positions(s);
    CHECK(tau(from_bits(e)) == e);
  }
}

TEST_CASE("from_positions dedupes and sorts") {
  CHECK(pos(BitExp::from_positions({3, 1, 3, 0})) ==
        std::vector<std::uint64_t>{0, 1, 3});
}

TEST_CASE("addition with carries matches machine addition") {
  oracle::Rng rng(7);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t a = oracle::pick(rng, 0, 1u << 30);
    const std::uint64_t b = oracle::pick(rng, 0, 1u << 30);
    CHECK(oracle::exp_u64(tau(a) + tau(b)) == a + b);
  }
  // carry chain far beyond 64 bits
  BitExp big;
  std::vector<std::uint64_t> run;
  for (std::uint64_t t = 100; t < 400; ++t) run.push_back(t);
  big = BitExp::from_positions(run);
  CHECK(pos(big + BitExp{100}) == std::vector<std::uint64_t>{400});
}

TEST_CASE("numeric order") {
  oracle::Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const std::uint64_t a = oracle::pick(rng, 0, 5000);
    const std::uint64_t b = oracle::pick(rng, 0, 5000);
    CHECK((tau(a) < tau(b)) == (a < b));
    CHECK((tau(a) == tau(b)) == (a == b));
  }
}

TEST_CASE("disjointness equivalence on integers") {
  oracle::Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t a = oracle::pick(rng, 0, 10000);
    const std::uint64_t b = oracle::pick(rng, 0, 10000);
    const bool disjoint = tau(a).disjoint(tau(b));
    CHECK(disjoint == ((a & b) == 0));
    auto u = oracle::bits_of(a);
    for (auto t : oracle::bits_of(b)) u.insert(t);
    const bool union_ok = oracle::bits_of(a + b) == u;
    CHECK(disjoint == union_ok);
  }
}

TEST_CASE("tau_poly") {
  CHECK(tau_poly(parse_poly1("x^15 + x^12 + x^7 + x^4")) ==
        PositionSet{0, 1, 2, 3});
  CHECK(tau_poly(parse_poly1("7")).empty());
  CHECK(tau_poly(parse_poly2("x^5*y^3 + 2*x^2 + y + 2")) == PositionSet{0, 1, 2});
}

TEST_CASE("polynomial form: disjoint supports give the union") {
  oracle::Rng rng(5);
  int checked = 0;
  while (checked < 500) {
    Poly2 p1 = oracle::random_poly2(rng, oracle::pick(rng, 1, 4), 40, 3);
    Poly2 p2 = oracle::random_poly2(rng, oracle::pick(rng, 1, 4), 40, 3);
    auto t1 = tau_poly(p1), t2 = tau_poly(p2);
    std::vector<std::uint64_t> both;
    std::set_intersection(t1.begin(), t1.end(), t2.begin(), t2.end(),
                          std::back_inserter(both));
    if (!both.empty()) continue;
    std::set<std::uint64_t> u(t1.begin(), t1.end());
    u.insert(t2.begin(), t2.end());
    const auto t = tau_poly(mul(p1, p2));
    CHECK(std::set<std::uint64_t>(t.begin(), t.end()) == u);
    ++checked;
  }
}

TEST_CASE("polynomial form: the converse fails") {
  // Shared bit 0, yet the product's support is the union.
  const Poly1 p1 = parse_poly1("x^2 + x");
  const Poly1 p2 = parse_poly1("x");
  CHECK(tau_poly(p1) == PositionSet{0, 1});
  CHECK(tau_poly(p2) == PositionSet{0});
  CHECK(tau_poly(mul(p1, p2)) == PositionSet{0, 1});
}

}

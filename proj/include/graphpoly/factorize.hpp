#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graphpoly/polynomial.hpp"

namespace graphpoly {

// Limits for the exponential searches. Exceeding any of them yields
// SearchStatus::budget_exceeded, which is inconclusive: it never certifies
// irreducibility.
struct SearchBudget {
  std::uint64_t max_divisor_tuples = 10'000'000;
  std::uint64_t max_bipartitions = std::uint64_t{1} << 20;
  // Per trial-division run when listing the divisors of one value.
  std::uint64_t max_trial_divisions = 10'000'000;
  // Kronecker search is refused above this degree.
  std::uint64_t max_degree = 256;
};

enum class SearchStatus { complete, budget_exceeded };

template <std::size_t N>
using FactorPair = std::pair<Polynomial<N>, Polynomial<N>>;

struct UnivariateFactorization {
  SearchStatus status = SearchStatus::complete;
  // gcd of the coefficients, reported on its own: constants are not factors
  // in the pair list.
  Natural content = 0;
  // Largest m with x^m dividing p.
  BitExp x_power;
  // Every unordered pair (q, r) of nonconstant polynomials in N[x] with
  // q * r == p, stored with q <= r and sorted. Empty with status complete
  // certifies that p has no such splitting.
  std::vector<FactorPair<1>> pairs;
};

// All splittings of p != 0 into two nonconstant factors in N[x].
//
// The monomial x^m and the content are peeled first. Divisors of the
// remaining part p0 come from a Kronecker search: a divisor q of degree
// d <= deg(p0)/2 has q(k) a positive divisor of p0(k) for k = 0..d, so each
// tuple of positive divisors is interpolated and kept if q has nonnegative
// integer coefficients and divides p0 exactly. Pairs are then reassembled
// from x-powers, constant divisors and the polynomial divisors.
UnivariateFactorization factor_pairs(const Poly1& p,
                                     const SearchBudget& budget = {});

template <std::size_t N>
struct DisjointFactorization {
  SearchStatus status = SearchStatus::complete;
  // Unordered pairs (P1, P2), P1 <= P2, with P1 * P2 == p, both != 1, and
  // tau_poly(P1), tau_poly(P2) disjoint.
  std::vector<FactorPair<N>> pairs;
};

// Bit-disjoint factorizations. For disjoint supports exponent addition has
// no carries, so for each bipartition (S1, S2) of tau_poly(p) every exponent
// splits uniquely by masking. The coefficients then form a matrix indexed by
// (S1-part, S2-part) which must be a full-grid rank-one outer product c (x) d;
// every integer normalization of c is reported.
template <std::size_t N>
DisjointFactorization<N> bit_disjoint_factor(const Polynomial<N>& p,
                                             const SearchBudget& budget = {});

}  // namespace graphpoly

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphpoly/bitexp.hpp"
#include "graphpoly/natural.hpp"

namespace graphpoly {

// Exponent vector: one BitExp per variable (x, then y).
template <std::size_t N>
using Monomial = std::array<BitExp, N>;

// Sorted, duplicate-free set of bit positions.
using PositionSet = std::vector<std::uint64_t>;

// Sparse polynomial over the semiring N[x] (N = 1) or N[x,y] (N = 2).
// Coefficients are positive; the zero polynomial has no terms.
template <std::size_t N>
class Polynomial {
 public:
  using Mono = Monomial<N>;
  using Term = std::pair<Mono, Natural>;
  using TermMap = std::map<Mono, Natural>;

  Polynomial() = default;

  static Polynomial constant(const Natural& c);
  static Polynomial monomial(const Mono& m, const Natural& c = 1);
  // Equal monomials are merged; zero coefficients are dropped.
  static Polynomial from_terms(const std::vector<Term>& terms);

  // Adds c * m in place. c must be >= 0.
  void add_term(const Mono& m, const Natural& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // True for the zero polynomial and nonzero constants.
  bool is_constant() const;
  bool is_one() const;
  Natural coefficient(const Mono& m) const;
  Natural constant_term() const { return coefficient(Mono{}); }
  // Largest monomial in lexicographic (x, then y) order. p must be nonzero.
  const Mono& leading_monomial() const { return terms_.rbegin()->first; }
  // Sum of coefficients.
  Natural coefficient_sum() const;

  // Terms in descending lexicographic exponent order.
  std::vector<Term> descending() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

using Poly1 = Polynomial<1>;
using Poly2 = Polynomial<2>;

// Total order on polynomials: term lists in descending exponent order,
// compared lexicographically by (exponent, coefficient).
template <std::size_t N>
std::strong_ordering compare(const Polynomial<N>& a, const Polynomial<N>& b);

template <std::size_t N>
bool operator<(const Polynomial<N>& a, const Polynomial<N>& b) {
  return compare(a, b) < 0;
}

template <std::size_t N>
Polynomial<N> add(const Polynomial<N>& p, const Polynomial<N>& q,
                  Bound bound = Bound::unbounded);

template <std::size_t N>
Polynomial<N> mul(const Polynomial<N>& p, const Polynomial<N>& q,
                  Bound bound = Bound::unbounded);

// Multiplies every coefficient by c (c > 0).
template <std::size_t N>
Polynomial<N> scale(const Polynomial<N>& p, const Natural& c);

Natural eval(const Poly1& p, const Natural& t, Bound bound = Bound::unbounded);
Natural eval(const Poly2& p, const Natural& tx, const Natural& ty,
             Bound bound = Bound::unbounded);

// Union of the bit supports of every exponent (x and y) occurring in p.
template <std::size_t N>
PositionSet tau_poly(const Polynomial<N>& p);

// Exact quotient r with q * r == p and r in N[...], if one exists. Long
// division over the integers under the lexicographic monomial order (which
// is degree order for one variable); the quotient is unique, so it is
// accepted only if the remainder vanishes and no coefficient is negative.
// Throws DivisionByZero for q == 0.
template <std::size_t N>
std::optional<Polynomial<N>> divide_exact(const Polynomial<N>& p,
                                          const Polynomial<N>& q);

// Degree in x of a univariate polynomial as a number. p must be nonzero.
BitExp degree(const Poly1& p);

Poly2 lift(const Poly1& p);
// Drops to one variable; nullopt if some term has a nonzero y-exponent.
std::optional<Poly1> lower(const Poly2& p);

// Text form: poly := term (" + " term)*, term := coeff | mono | coeff "*" mono,
// mono := var ("^" nat)? ("*" var ("^" nat)?)*. Whitespace between tokens is
// ignored on input; duplicate monomials are merged.
Poly1 parse_poly1(std::string_view text);
Poly2 parse_poly2(std::string_view text);

// Canonical rendering: descending exponents, single spaces around "+".
template <std::size_t N>
std::string render(const Polynomial<N>& p);

}  // namespace graphpoly

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace graphpoly {

// Arbitrary-precision integer. Used for coefficients (always >= 0 outside of
// intermediate division remainders) and for exponents when they have to be
// materialized as numbers.
using Natural = boost::multiprecision::cpp_int;

// Arithmetic width policy. `u64` makes every operation that produces a
// natural throw NaturalOverflow once the value leaves [0, 2^64).
enum class Bound { unbounded, u64 };

void check_bound(const Natural& value, Bound bound);

// Throws NaturalOverflow if value is negative or does not fit.
std::uint64_t to_u64(const Natural& value);

// Decimal digits only; throws ParseError otherwise.
Natural parse_natural(std::string_view digits);

std::string to_decimal(const Natural& value);

Natural gcd(const Natural& a, const Natural& b);

// Positive divisors in ascending order via trial division. Returns false
// (leaving `out` unspecified) if more than `max_trials` candidate divisors
// would have to be tested.
bool positive_divisors(const Natural& n, std::uint64_t max_trials,
                       std::vector<Natural>& out);

}  // namespace graphpoly

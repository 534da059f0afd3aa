#include "graphpoly/natural.hpp"

#include <algorithm>

#include "graphpoly/errors.hpp"

namespace graphpoly {

namespace {
const Natural kU64Max = Natural(std::numeric_limits<std::uint64_t>::max());
}

void check_bound(const Natural& value, Bound bound) {
  if (bound == Bound::u64 && (value < 0 || value > kU64Max))
    throw NaturalOverflow("natural exceeds 64-bit range: " + to_decimal(value));
}

std::uint64_t to_u64(const Natural& value) {
  check_bound(value, Bound::u64);
  return value.convert_to<std::uint64_t>();
}

Natural parse_natural(std::string_view digits) {
  if (digits.empty()) throw ParseError("expected a decimal natural", 0);
  Natural n = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    char c = digits[i];
    if (c < '0' || c > '9') throw ParseError("expected a decimal digit", i);
    n = n * 10 + (c - '0');
  }
  return n;
}

std::string to_decimal(const Natural& value) { return value.str(); }

Natural gcd(const Natural& a, const Natural& b) {
  return boost::multiprecision::gcd(a, b);
}

bool positive_divisors(const Natural& n, std::uint64_t max_trials,
                       std::vector<Natural>& out) {
  out.clear();
  if (n <= 0) return true;
  std::vector<Natural> high;
  std::uint64_t trials = 0;
  for (Natural d = 1; d * d <= n; ++d) {
    if (++trials > max_trials) return false;
    if (n % d == 0) {
      out.push_back(d);
      Natural other = n / d;
      if (other != d) high.push_back(other);
    }
  }
  out.insert(out.end(), high.rbegin(), high.rend());
  return true;
}

}  // namespace graphpoly

#include "graphpoly/bitexp.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

#include "graphpoly/errors.hpp"

namespace graphpoly {

BitExp::BitExp(std::initializer_list<std::uint64_t> positions)
    : BitExp(from_positions(std::vector<std::uint64_t>(positions))) {}

BitExp BitExp::from_positions(std::vector<std::uint64_t> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()),
                  positions.end());
  BitExp e;
  e.bits_ = std::move(positions);
  return e;
}

bool BitExp::contains(std::uint64_t position) const {
  return std::binary_search(bits_.begin(), bits_.end(), position);
}

bool BitExp::disjoint(const BitExp& other) const {
  auto a = bits_.begin();
  auto b = other.bits_.begin();
  while (a != bits_.end() && b != other.bits_.end()) {
    if (*a == *b) return false;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return true;
}

BitExp BitExp::masked(const std::vector<std::uint64_t>& sorted_mask) const {
  BitExp out;
  std::set_intersection(bits_.begin(), bits_.end(), sorted_mask.begin(),
                        sorted_mask.end(), std::back_inserter(out.bits_));
  return out;
}

BitExp operator+(const BitExp& a, const BitExp& b) {
  if (a.disjoint(b)) {
    BitExp out;
    std::set_union(a.bits_.begin(), a.bits_.end(), b.bits_.begin(),
                   b.bits_.end(), std::back_inserter(out.bits_));
    return out;
  }
  // Ripple the carries through a sparse set.
  std::set<std::uint64_t> acc(a.bits_.begin(), a.bits_.end());
  for (std::uint64_t t : b.bits_) {
    while (acc.erase(t) == 1) ++t;
    acc.insert(t);
  }
  BitExp out;
  out.bits_.assign(acc.begin(), acc.end());
  return out;
}

std::strong_ordering operator<=>(const BitExp& a, const BitExp& b) {
  auto ia = a.bits_.rbegin();
  auto ib = b.bits_.rbegin();
  for (; ia != a.bits_.rend() && ib != b.bits_.rend(); ++ia, ++ib) {
    if (*ia != *ib) return *ia <=> *ib;
  }
  if (ia != a.bits_.rend()) return std::strong_ordering::greater;
  if (ib != b.bits_.rend()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string BitExp::to_string() const { return to_decimal(from_bits(*this)); }

BitExp tau(const Natural& k) {
  if (k < 0) throw std::domain_error("tau of a negative integer");
  std::vector<std::uint64_t> out;
  if (k == 0) return BitExp{};
  std::uint64_t top = boost::multiprecision::msb(k);
  for (std::uint64_t t = boost::multiprecision::lsb(k); t <= top; ++t)
    if (boost::multiprecision::bit_test(k, static_cast<unsigned>(t)))
      out.push_back(t);
  return BitExp::from_positions(std::move(out));
}

BitExp tau(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; k != 0; ++t, k >>= 1)
    if (k & 1u) out.push_back(t);
  return BitExp::from_positions(std::move(out));
}

Natural from_bits(const BitExp& s) {
  Natural n = 0;
  for (std::uint64_t t : s.positions())
    boost::multiprecision::bit_set(n, static_cast<unsigned>(t));
  return n;
}

std::uint64_t from_bits_u64(const BitExp& s) {
  std::uint64_t n = 0;
  for (std::uint64_t t : s.positions()) {
    if (t >= 64)
      throw NaturalOverflow("exponent 2^" + std::to_string(t) +
                            " exceeds 64-bit range");
    n |= std::uint64_t{1} << t;
  }
  return n;
}

BitExp subtract(const BitExp& a, const BitExp& b) {
  if (a < b) throw std::domain_error("BitExp subtraction would go negative");
  return tau(Natural(from_bits(a) - from_bits(b)));
}

}  // namespace graphpoly

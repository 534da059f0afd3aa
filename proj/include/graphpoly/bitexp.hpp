#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "graphpoly/natural.hpp"

namespace graphpoly {

// A natural number stored as the set of positions of its 1-bits. Exponents
// of graph polynomials are sums of 2^label, so they are kept in this form
// rather than as machine words; a label of 10^6 costs one entry, not a
// million-bit integer.
//
// Positions are kept sorted ascending and unique. The empty set is 0.
// Ordering and equality are those of the represented naturals.
class BitExp {
 public:
  BitExp() = default;
  BitExp(std::initializer_list<std::uint64_t> positions);

  // Builds from arbitrary positions; duplicates are collapsed (set
  // semantics, no carries).
  static BitExp from_positions(std::vector<std::uint64_t> positions);

  const std::vector<std::uint64_t>& positions() const { return bits_; }
  bool is_zero() const { return bits_.empty(); }
  std::size_t popcount() const { return bits_.size(); }
  bool contains(std::uint64_t position) const;
  bool disjoint(const BitExp& other) const;

  // Keeps only the positions present in `mask` (bitwise and).
  BitExp masked(const std::vector<std::uint64_t>& sorted_mask) const;

  // Numeric sum, carries included.
  friend BitExp operator+(const BitExp& a, const BitExp& b);

  friend std::strong_ordering operator<=>(const BitExp& a, const BitExp& b);
  friend bool operator==(const BitExp& a, const BitExp& b) = default;

  // Decimal rendering of the represented natural.
  std::string to_string() const;

 private:
  std::vector<std::uint64_t> bits_;
};

// Bit support of k: {t : bit t of k is 1}. tau(0) is empty.
BitExp tau(const Natural& k);
BitExp tau(std::uint64_t k);

// Inverse of tau.
Natural from_bits(const BitExp& s);

// Bounded variant; throws NaturalOverflow if a position is >= 64.
std::uint64_t from_bits_u64(const BitExp& s);

// a - b for a >= b; throws std::domain_error otherwise.
BitExp subtract(const BitExp& a, const BitExp& b);

}  // namespace graphpoly

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace graphpoly::detail {

// One side of a part-respecting isomorphism problem. V-vertices are the
// indices 0..v_count-1; every U-vertex is described by a fixed number of
// bitmasks over V (one per relation: edges, or in/out arcs, or pre/post).
struct IsoSide {
  std::size_t v_count = 0;
  std::vector<std::vector<std::uint64_t>> u_sig;
};

struct IsoMatch {
  std::vector<std::size_t> v_map;  // a-index -> b-index
  std::vector<std::size_t> u_map;
};

// Pairs up U-vertices once the V bijection is fixed; nullopt if the mapped
// signatures of `a` are not a permutation of those of `b`.
std::optional<std::vector<std::size_t>> match_u(
    const IsoSide& a, const IsoSide& b, const std::vector<std::size_t>& v_map);

// Backtracking over V bijections with degree pruning and a prefix check on
// the multiset of partially mapped U signatures. Throws SizeGuardExceeded
// when v_count > max_v (or > 64).
std::optional<IsoMatch> find_isomorphism(const IsoSide& a, const IsoSide& b,
                                         std::size_t max_v);

}  // namespace graphpoly::detail

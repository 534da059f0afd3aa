#include "detail/iso_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "graphpoly/errors.hpp"

namespace graphpoly::detail {

namespace {

using Sig = std::vector<std::uint64_t>;

Sig map_sig(const Sig& s, const std::vector<std::size_t>& order,
            std::size_t depth, const std::vector<std::size_t>& v_map) {
  Sig out(s.size(), 0);
  for (std::size_t c = 0; c < s.size(); ++c)
    for (std::size_t i = 0; i < depth; ++i)
      if ((s[c] >> order[i]) & 1u) out[c] |= std::uint64_t{1} << v_map[order[i]];
  return out;
}

std::vector<std::vector<std::size_t>> degrees(const IsoSide& side) {
  const std::size_t channels = side.u_sig.empty() ? 0 : side.u_sig[0].size();
  std::vector<std::vector<std::size_t>> deg(side.v_count,
                                            std::vector<std::size_t>(channels));
  for (const auto& s : side.u_sig)
    for (std::size_t c = 0; c < channels; ++c)
      for (std::size_t v = 0; v < side.v_count; ++v)
        if ((s[c] >> v) & 1u) ++deg[v][c];
  return deg;
}

class Search {
 public:
  Search(const IsoSide& a, const IsoSide& b) : a_(a), b_(b) {
    auto da = degrees(a);
    auto db = degrees(b);
    candidates_.resize(a.v_count);
    for (std::size_t v = 0; v < a.v_count; ++v)
      for (std::size_t w = 0; w < b.v_count; ++w)
        if (da[v] == db[w]) candidates_[v].push_back(w);
    order_.resize(a.v_count);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](auto x, auto y) {
      return candidates_[x].size() < candidates_[y].size();
    });
    v_map_.assign(a.v_count, 0);
    used_.assign(b.v_count, false);
  }

  std::optional<IsoMatch> run() {
    if (!extend(0)) return std::nullopt;
    auto u = match_u(a_, b_, v_map_);
    return IsoMatch{v_map_, *u};
  }

 private:
  bool prefix_consistent(std::size_t depth, std::uint64_t image) const {
    std::vector<Sig> sa, sb;
    sa.reserve(a_.u_sig.size());
    sb.reserve(b_.u_sig.size());
    for (const auto& s : a_.u_sig) sa.push_back(map_sig(s, order_, depth, v_map_));
    for (const auto& s : b_.u_sig) {
      Sig t = s;
      for (auto& m : t) m &= image;
      sb.push_back(std::move(t));
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool extend(std::size_t depth) {
    if (depth == a_.v_count) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w : candidates_[v]) {
      if (used_[w]) continue;
      used_[w] = true;
      v_map_[v] = w;
      image_ |= std::uint64_t{1} << w;
      if (prefix_consistent(depth + 1, image_) && extend(depth + 1)) return true;
      image_ &= ~(std::uint64_t{1} << w);
      used_[w] = false;
    }
    return false;
  }

  const IsoSide& a_;
  const IsoSide& b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> v_map_;
  std::vector<bool> used_;
  std::uint64_t image_ = 0;
};

}  // namespace

std::optional<std::vector<std::size_t>> match_u(
    const IsoSide& a, const IsoSide& b, const std::vector<std::size_t>& v_map) {
  if (a.u_sig.size() != b.u_sig.size()) return std::nullopt;
  std::vector<std::size_t> order(a.v_count);
  std::iota(order.begin(), order.end(), 0);
  std::map<Sig, std::vector<std::size_t>> pool;
  for (std::size_t j = 0; j < b.u_sig.size(); ++j) pool[b.u_sig[j]].push_back(j);
  std::vector<std::size_t> u_map(a.u_sig.size());
  for (std::size_t i = 0; i < a.u_sig.size(); ++i) {
    auto it = pool.find(map_sig(a.u_sig[i], order, a.v_count, v_map));
    if (it == pool.end() || it->second.empty()) return std::nullopt;
    u_map[i] = it->second.front();
    it->second.erase(it->second.begin());
  }
  return u_map;
}

std::optional<IsoMatch> find_isomorphism(const IsoSide& a, const IsoSide& b,
                                         std::size_t max_v) {
  if (a.v_count != b.v_count || a.u_sig.size() != b.u_sig.size())
    return std::nullopt;
  if (a.v_count > max_v || a.v_count > 64)
    throw SizeGuardExceeded("isomorphism search refused: " +
                            std::to_string(a.v_count) +
                            " vertices exceed the guard of " +
                            std::to_string(std::min<std::size_t>(max_v, 64)));
  return Search(a, b).run();
}

}  // namespace graphpoly::detail

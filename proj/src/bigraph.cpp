#include "graphpoly/bigraph.hpp"

#include <algorithm>
#include <numeric>

#include "detail/graph_util.hpp"
#include "detail/iso_engine.hpp"
#include "graphpoly/errors.hpp"

namespace graphpoly {

Bigraph::Bigraph(std::vector<std::string> u, std::vector<std::string> v,
                 const std::vector<Edge>& edges)
    : u_(std::move(u)), v_(std::move(v)) {
  u_pos_ = detail::index_ids(u_, "U");
  v_pos_ = detail::index_ids(v_, "V");
  detail::check_parts_disjoint(u_pos_, v_pos_);
  adj_.resize(u_.size());
  for (const auto& e : edges) {
    auto ui = u_pos_.find(e.first);
    auto vi = v_pos_.find(e.second);
    if (ui == u_pos_.end())
      throw InvalidGraph("edge endpoint '" + e.first + "' is not a U-vertex");
    if (vi == v_pos_.end())
      throw InvalidGraph("edge endpoint '" + e.second + "' is not a V-vertex");
    if (!edges_.insert(e).second)
      throw InvalidGraph("duplicate edge (" + e.first + ", " + e.second + ")");
    adj_[ui->second].push_back(vi->second);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::optional<std::size_t> Bigraph::u_index(const std::string& id) const {
  auto it = u_pos_.find(id);
  if (it == u_pos_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Bigraph::v_index(const std::string& id) const {
  auto it = v_pos_.find(id);
  if (it == v_pos_.end()) return std::nullopt;
  return it->second;
}

void validate_labeling(const std::vector<std::string>& v_ids,
                       const Labeling& phi) {
  std::set<std::uint64_t> seen;
  for (const auto& id : v_ids) {
    auto it = phi.find(id);
    if (it == phi.end())
      throw InvalidLabeling("labeling is missing vertex '" + id + "'");
    if (!seen.insert(it->second).second)
      throw InvalidLabeling("labeling is not injective: label " +
                            std::to_string(it->second) + " is used twice");
  }
  if (phi.size() != v_ids.size()) {
    for (const auto& [id, label] : phi)
      if (std::find(v_ids.begin(), v_ids.end(), id) == v_ids.end())
        throw InvalidLabeling("labeling mentions unknown vertex '" + id + "'");
  }
}

Labeling compact_labeling(const std::vector<std::string>& v_ids) {
  Labeling phi;
  for (std::size_t i = 0; i < v_ids.size(); ++i) phi[v_ids[i]] = i;
  return phi;
}

BitExp neighbor_exponent(const Bigraph& g, const Labeling& phi,
                         std::size_t u_index) {
  std::vector<std::uint64_t> bits;
  for (std::size_t vi : g.neighbors(u_index)) bits.push_back(phi.at(g.v()[vi]));
  return BitExp::from_positions(std::move(bits));
}

Poly1 encode(const Bigraph& g, const Labeling& phi) {
  validate_labeling(g.v(), phi);
  Poly1 p;
  for (std::size_t i = 0; i < g.u().size(); ++i)
    p.add_term({neighbor_exponent(g, phi, i)}, 1);
  return p;
}

std::string decoded_u_id(const BitExp& exponent, std::uint64_t copy) {
  return "u^" + exponent.to_string() + "_" + std::to_string(copy);
}

DecodedBigraph decode(const Poly1& p) {
  std::vector<std::string> v_ids;
  Labeling iota;
  for (std::uint64_t t : tau_poly(p)) {
    v_ids.push_back(std::to_string(t));
    iota[v_ids.back()] = t;
  }
  std::vector<std::string> u_ids;
  std::vector<Bigraph::Edge> edges;
  std::vector<UTag> tags;
  for (const auto& [m, c] : p.descending()) {
    const std::uint64_t n = to_u64(c);
    for (std::uint64_t k = 1; k <= n; ++k) {
      u_ids.push_back(decoded_u_id(m[0], k));
      tags.push_back({m[0], k});
      for (std::uint64_t t : m[0].positions())
        edges.emplace_back(u_ids.back(), std::to_string(t));
    }
  }
  DecodedBigraph out;
  out.graph = Bigraph(std::move(u_ids), std::move(v_ids), edges);
  out.labels = std::move(iota);
  out.tags = std::move(tags);
  return out;
}

namespace {

detail::IsoSide iso_side(const Bigraph& g) {
  if (g.v().size() > 64)
    throw SizeGuardExceeded("isomorphism search supports at most 64 V-vertices");
  detail::IsoSide side;
  side.v_count = g.v().size();
  for (std::size_t i = 0; i < g.u().size(); ++i) {
    std::uint64_t mask = 0;
    for (std::size_t vi : g.neighbors(i)) mask |= std::uint64_t{1} << vi;
    side.u_sig.push_back({mask});
  }
  return side;
}

}  // namespace

std::optional<IsoWitness> is_isomorphic(const Bigraph& g1, const Bigraph& g2,
                                        const IsoOptions& options) {
  if (g1.u().size() != g2.u().size() || g1.v().size() != g2.v().size() ||
      g1.edges().size() != g2.edges().size())
    return std::nullopt;
  auto match = detail::find_isomorphism(iso_side(g1), iso_side(g2), options.max_v);
  if (!match) return std::nullopt;
  IsoWitness w;
  for (std::size_t i = 0; i < g1.u().size(); ++i)
    w.u[g1.u()[i]] = g2.u()[match->u_map[i]];
  for (std::size_t i = 0; i < g1.v().size(); ++i)
    w.v[g1.v()[i]] = g2.v()[match->v_map[i]];
  return w;
}

bool verify_isomorphism(const Bigraph& g1, const Bigraph& g2,
                        const IsoWitness& w) {
  if (!detail::is_bijection(w.u, g1.u(), g2.u()) ||
      !detail::is_bijection(w.v, g1.v(), g2.v()))
    return false;
  if (g1.edges().size() != g2.edges().size()) return false;
  for (const auto& [u, v] : g1.edges())
    if (!g2.edges().count({w.u.at(u), w.v.at(v)})) return false;
  return true;
}

Bigraph strip_isolated_v(const Bigraph& g) {
  std::vector<bool> covered(g.v().size(), false);
  for (std::size_t i = 0; i < g.u().size(); ++i)
    for (std::size_t j : g.neighbors(i)) covered[j] = true;
  std::vector<std::string> v;
  for (std::size_t j = 0; j < g.v().size(); ++j)
    if (covered[j]) v.push_back(g.v()[j]);
  return Bigraph(g.u(), std::move(v),
                 std::vector<Bigraph::Edge>(g.edges().begin(), g.edges().end()));
}

IsoWitness natural_witness(const Bigraph& g, const Labeling& phi) {
  validate_labeling(g.v(), phi);
  IsoWitness w;
  std::vector<bool> covered(g.v().size(), false);
  for (std::size_t i = 0; i < g.u().size(); ++i)
    for (std::size_t j : g.neighbors(i)) covered[j] = true;
  for (std::size_t j = 0; j < g.v().size(); ++j)
    if (covered[j]) w.v[g.v()[j]] = std::to_string(phi.at(g.v()[j]));
  std::map<BitExp, std::uint64_t> copies;
  for (std::size_t i = 0; i < g.u().size(); ++i) {
    BitExp e = neighbor_exponent(g, phi, i);
    w.u[g.u()[i]] = decoded_u_id(e, ++copies[e]);
  }
  return w;
}

Poly1 canonical_poly(const Bigraph& g, std::size_t max_v) {
  const std::size_t n = g.v().size();
  if (n > max_v)
    throw SizeGuardExceeded("canonical_poly refused: |V| = " +
                            std::to_string(n) + " exceeds the guard of " +
                            std::to_string(max_v));
  std::vector<std::uint64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Poly1> best;
  do {
    Labeling phi;
    for (std::size_t i = 0; i < n; ++i) phi[g.v()[i]] = perm[i];
    Poly1 p = encode(g, phi);
    if (!best || p < *best) best = std::move(p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace graphpoly

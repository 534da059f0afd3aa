#include "graphpoly/digraph.hpp"

#include <algorithm>
#include <numeric>

#include "detail/graph_util.hpp"
#include "detail/iso_engine.hpp"
#include "graphpoly/errors.hpp"

namespace graphpoly {

DiBigraph::DiBigraph(std::vector<std::string> u, std::vector<std::string> v,
                     const std::vector<Arc>& arcs)
    : u_(std::move(u)), v_(std::move(v)) {
  u_pos_ = detail::index_ids(u_, "U");
  v_pos_ = detail::index_ids(v_, "V");
  detail::check_parts_disjoint(u_pos_, v_pos_);
  in_.resize(u_.size());
  out_.resize(u_.size());
  for (const auto& a : arcs) {
    auto su = u_pos_.find(a.first), sv = v_pos_.find(a.first);
    auto tu = u_pos_.find(a.second), tv = v_pos_.find(a.second);
    if (sv != v_pos_.end() && tu != u_pos_.end()) {
      in_[tu->second].push_back(sv->second);
    } else if (su != u_pos_.end() && tv != v_pos_.end()) {
      out_[su->second].push_back(tv->second);
    } else {
      throw InvalidGraph("arc (" + a.first + " -> " + a.second +
                         ") does not join a U-vertex and a V-vertex");
    }
    if (!arcs_.insert(a).second)
      throw InvalidGraph("duplicate arc (" + a.first + " -> " + a.second + ")");
  }
  for (auto& x : in_) std::sort(x.begin(), x.end());
  for (auto& x : out_) std::sort(x.begin(), x.end());
}

std::optional<std::size_t> DiBigraph::u_index(const std::string& id) const {
  auto it = u_pos_.find(id);
  if (it == u_pos_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DiBigraph::v_index(const std::string& id) const {
  auto it = v_pos_.find(id);
  if (it == v_pos_.end()) return std::nullopt;
  return it->second;
}

Monomial<2> arc_exponents(const DiBigraph& g, const Labeling& phi,
                          std::size_t u_index) {
  auto bits = [&](const std::vector<std::size_t>& vs) {
    std::vector<std::uint64_t> out;
    for (std::size_t vi : vs) out.push_back(phi.at(g.v()[vi]));
    return BitExp::from_positions(std::move(out));
  };
  return {bits(g.in(u_index)), bits(g.out(u_index))};
}

Poly2 encode_directed(const DiBigraph& g, const Labeling& phi) {
  validate_labeling(g.v(), phi);
  Poly2 p;
  for (std::size_t i = 0; i < g.u().size(); ++i)
    p.add_term(arc_exponents(g, phi, i), 1);
  return p;
}

std::string decoded_di_u_id(const Monomial<2>& exponent, std::uint64_t copy) {
  return "u^(" + exponent[0].to_string() + "," + exponent[1].to_string() +
         ")_" + std::to_string(copy);
}

DecodedDiBigraph decode_directed(const Poly2& p) {
  std::vector<std::string> v_ids;
  Labeling iota;
  for (std::uint64_t t : tau_poly(p)) {
    v_ids.push_back(std::to_string(t));
    iota[v_ids.back()] = t;
  }
  std::vector<std::string> u_ids;
  std::vector<DiBigraph::Arc> arcs;
  std::vector<DiUTag> tags;
  for (const auto& [m, c] : p.descending()) {
    const std::uint64_t n = to_u64(c);
    for (std::uint64_t k = 1; k <= n; ++k) {
      const std::string id = decoded_di_u_id(m, k);
      u_ids.push_back(id);
      tags.push_back({m, k});
      for (std::uint64_t t : m[0].positions())
        arcs.emplace_back(std::to_string(t), id);
      for (std::uint64_t t : m[1].positions())
        arcs.emplace_back(id, std::to_string(t));
    }
  }
  DecodedDiBigraph out;
  out.graph = DiBigraph(std::move(u_ids), std::move(v_ids), arcs);
  out.labels = std::move(iota);
  out.tags = std::move(tags);
  return out;
}

namespace {

detail::IsoSide iso_side(const DiBigraph& g) {
  if (g.v().size() > 64)
    throw SizeGuardExceeded("isomorphism search supports at most 64 V-vertices");
  detail::IsoSide side;
  side.v_count = g.v().size();
  for (std::size_t i = 0; i < g.u().size(); ++i) {
    std::uint64_t in = 0, out = 0;
    for (std::size_t vi : g.in(i)) in |= std::uint64_t{1} << vi;
    for (std::size_t vi : g.out(i)) out |= std::uint64_t{1} << vi;
    side.u_sig.push_back({in, out});
  }
  return side;
}

}  // namespace

std::optional<IsoWitness> is_isomorphic_directed(const DiBigraph& g1,
                                                 const DiBigraph& g2,
                                                 const IsoOptions& options) {
  if (g1.u().size() != g2.u().size() || g1.v().size() != g2.v().size() ||
      g1.arcs().size() != g2.arcs().size())
    return std::nullopt;
  auto match =
      detail::find_isomorphism(iso_side(g1), iso_side(g2), options.max_v);
  if (!match) return std::nullopt;
  IsoWitness w;
  for (std::size_t i = 0; i < g1.u().size(); ++i)
    w.u[g1.u()[i]] = g2.u()[match->u_map[i]];
  for (std::size_t i = 0; i < g1.v().size(); ++i)
    w.v[g1.v()[i]] = g2.v()[match->v_map[i]];
  return w;
}

bool verify_isomorphism_directed(const DiBigraph& g1, const DiBigraph& g2,
                                 const IsoWitness& w) {
  if (!detail::is_bijection(w.u, g1.u(), g2.u()) ||
      !detail::is_bijection(w.v, g1.v(), g2.v()))
    return false;
  if (g1.arcs().size() != g2.arcs().size()) return false;
  auto image = [&](const std::string& id) {
    auto it = w.u.find(id);
    return it != w.u.end() ? it->second : w.v.at(id);
  };
  for (const auto& [s, t] : g1.arcs())
    if (!g2.arcs().count({image(s), image(t)})) return false;
  return true;
}

namespace {

std::vector<bool> covered_v(const DiBigraph& g) {
  std::vector<bool> covered(g.v().size(), false);
  for (std::size_t i = 0; i < g.u().size(); ++i) {
    for (std::size_t j : g.in(i)) covered[j] = true;
    for (std::size_t j : g.out(i)) covered[j] = true;
  }
  return covered;
}

}  // namespace

DiBigraph strip_isolated_v(const DiBigraph& g) {
  const auto covered = covered_v(g);
  std::vector<std::string> v;
  for (std::size_t j = 0; j < g.v().size(); ++j)
    if (covered[j]) v.push_back(g.v()[j]);
  return DiBigraph(g.u(), std::move(v),
                   std::vector<DiBigraph::Arc>(g.arcs().begin(), g.arcs().end()));
}

IsoWitness natural_witness_directed(const DiBigraph& g, const Labeling& phi) {
  validate_labeling(g.v(), phi);
  IsoWitness w;
  const auto covered = covered_v(g);
  for (std::size_t j = 0; j < g.v().size(); ++j)
    if (covered[j]) w.v[g.v()[j]] = std::to_string(phi.at(g.v()[j]));
  std::map<Monomial<2>, std::uint64_t> copies;
  for (std::size_t i = 0; i < g.u().size(); ++i) {
    Monomial<2> e = arc_exponents(g, phi, i);
    w.u[g.u()[i]] = decoded_di_u_id(e, ++copies[e]);
  }
  return w;
}

Poly2 canonical_poly_directed(const DiBigraph& g, std::size_t max_v) {
  const std::size_t n = g.v().size();
  if (n > max_v)
    throw SizeGuardExceeded("canonical_poly_directed refused: |V| = " +
                            std::to_string(n) + " exceeds the guard of " +
                            std::to_string(max_v));
  std::vector<std::uint64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Poly2> best;
  do {
    Labeling phi;
    for (std::size_t i = 0; i < n; ++i) phi[g.v()[i]] = perm[i];
    Poly2 p = encode_directed(g, phi);
    if (!best || p < *best) best = std::move(p);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace graphpoly

#include "graphpoly/petri.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "detail/graph_util.hpp"
#include "detail/iso_engine.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/graph_ops.hpp"

namespace graphpoly {

PetriNet::PetriNet(std::vector<std::string> conditions,
                   std::vector<Event> events)
    : conditions_(std::move(conditions)), events_(std::move(events)) {
  cond_pos_ = detail::index_ids(conditions_, "conditions");
  std::vector<std::string> event_ids;
  for (const auto& e : events_) event_ids.push_back(e.id);
  detail::check_parts_disjoint(cond_pos_,
                               detail::index_ids(event_ids, "events"));
  auto resolve = [&](const Event& e, const std::vector<std::string>& ids,
                     const char* which) {
    std::vector<std::size_t> out;
    for (const auto& id : ids) {
      auto it = cond_pos_.find(id);
      if (it == cond_pos_.end())
        throw InvalidGraph("event '" + e.id + "' has unknown " + which +
                           "-condition '" + id + "'");
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
      throw InvalidGraph("event '" + e.id + "' lists a " + which +
                         "-condition twice");
    return out;
  };
  for (const auto& e : events_) {
    pre_.push_back(resolve(e, e.pre, "pre"));
    post_.push_back(resolve(e, e.post, "post"));
  }
}

std::optional<std::size_t> PetriNet::condition_index(
    const std::string& id) const {
  auto it = cond_pos_.find(id);
  if (it == cond_pos_.end()) return std::nullopt;
  return it->second;
}

namespace {

BitExp label_bits(const PetriNet& n, const Labeling& phi,
                  const std::vector<std::size_t>& conds) {
  std::vector<std::uint64_t> bits;
  for (std::size_t c : conds) bits.push_back(phi.at(n.conditions()[c]));
  return BitExp::from_positions(std::move(bits));
}

std::string decoded_event_id(const Monomial<2>& m, std::uint64_t copy) {
  return "e^(" + m[0].to_string() + "," + m[1].to_string() + ")_" +
         std::to_string(copy);
}

}  // namespace

Poly2 encode_net(const PetriNet& n, const Labeling& phi) {
  validate_labeling(n.conditions(), phi);
  Poly2 p = Poly2::constant(1);
  for (std::size_t e = 0; e < n.events().size(); ++e)
    p.add_term({label_bits(n, phi, n.pre(e)), label_bits(n, phi, n.post(e))},
               1);
  return p;
}

LabeledPetriNet decode_net(const Poly2& p) {
  if (p.constant_term() == 0)
    throw InputError("polynomial has no constant term: no slot for the idle event");
  std::vector<std::string> conditions;
  Labeling iota;
  for (std::uint64_t t : tau_poly(p)) {
    conditions.push_back(std::to_string(t));
    iota[conditions.back()] = t;
  }
  std::vector<Event> events;
  for (const auto& [m, c] : p.descending()) {
    const bool idle = m == Monomial<2>{};
    const std::uint64_t n = to_u64(c);
    for (std::uint64_t k = idle ? 2 : 1; k <= n; ++k) {
      Event e{decoded_event_id(m, k), {}, {}};
      for (std::uint64_t t : m[0].positions()) e.pre.push_back(std::to_string(t));
      for (std::uint64_t t : m[1].positions()) e.post.push_back(std::to_string(t));
      events.push_back(std::move(e));
    }
  }
  return {PetriNet(std::move(conditions), std::move(events)), std::move(iota)};
}

std::string product_event_id(const std::string* e1, const std::string* e2) {
  return "(" + (e1 ? *e1 : std::string("*")) + "," +
         (e2 ? *e2 : std::string("*")) + ")";
}

PetriNet net_product(const PetriNet& n1, const PetriNet& n2) {
  std::vector<std::string> conditions;
  for (const auto& b : n1.conditions()) conditions.push_back(side_id(1, b));
  for (const auto& b : n2.conditions()) conditions.push_back(side_id(2, b));

  // Index size() stands for the idle event on each side.
  const std::size_t idle1 = n1.events().size();
  const std::size_t idle2 = n2.events().size();
  auto tagged = [](int side, const PetriNet& n,
                   const std::vector<std::size_t>& conds) {
    std::vector<std::string> out;
    for (std::size_t c : conds) out.push_back(side_id(side, n.conditions()[c]));
    return out;
  };
  std::vector<Event> events;
  for (std::size_t i = 0; i <= idle1; ++i) {
    for (std::size_t j = 0; j <= idle2; ++j) {
      if (i == idle1 && j == idle2) continue;
      Event e;
      e.id = product_event_id(i < idle1 ? &n1.events()[i].id : nullptr,
                              j < idle2 ? &n2.events()[j].id : nullptr);
      if (i < idle1) {
        e.pre = tagged(1, n1, n1.pre(i));
        e.post = tagged(1, n1, n1.post(i));
      }
      if (j < idle2) {
        auto pre = tagged(2, n2, n2.pre(j));
        auto post = tagged(2, n2, n2.post(j));
        e.pre.insert(e.pre.end(), pre.begin(), pre.end());
        e.post.insert(e.post.end(), post.begin(), post.end());
      }
      events.push_back(std::move(e));
    }
  }
  return PetriNet(std::move(conditions), std::move(events));
}

LabeledPetriNet net_product(const LabeledPetriNet& n1,
                            const LabeledPetriNet& n2) {
  validate_labeling(n1.net.conditions(), n1.labels);
  validate_labeling(n2.net.conditions(), n2.labels);
  if (!disjoint_images(n1.labels, n2.labels))
    throw InvalidLabeling("labeled net product needs disjoint label images");
  LabeledPetriNet out{net_product(n1.net, n2.net), {}};
  for (const auto& [b, l] : n1.labels) out.labels[side_id(1, b)] = l;
  for (const auto& [b, l] : n2.labels) out.labels[side_id(2, b)] = l;
  return out;
}

namespace {

detail::IsoSide iso_side(const PetriNet& n) {
  if (n.conditions().size() > 64)
    throw SizeGuardExceeded("isomorphism search supports at most 64 conditions");
  detail::IsoSide side;
  side.v_count = n.conditions().size();
  for (std::size_t e = 0; e < n.events().size(); ++e) {
    std::uint64_t pre = 0, post = 0;
    for (std::size_t c : n.pre(e)) pre |= std::uint64_t{1} << c;
    for (std::size_t c : n.post(e)) post |= std::uint64_t{1} << c;
    side.u_sig.push_back({pre, post});
  }
  return side;
}

NetIsoWitness to_witness(const PetriNet& n1, const PetriNet& n2,
                         const std::vector<std::size_t>& cond_map,
                         const std::vector<std::size_t>& event_map) {
  NetIsoWitness w;
  for (std::size_t i = 0; i < cond_map.size(); ++i)
    w.conditions[n1.conditions()[i]] = n2.conditions()[cond_map[i]];
  for (std::size_t i = 0; i < event_map.size(); ++i)
    w.events[n1.events()[i].id] = n2.events()[event_map[i]].id;
  return w;
}

}  // namespace

std::optional<NetIsoWitness> net_isomorphic(const PetriNet& n1,
                                            const PetriNet& n2,
                                            const IsoOptions& options) {
  if (n1.conditions().size() != n2.conditions().size() ||
      n1.events().size() != n2.events().size())
    return std::nullopt;
  auto m = detail::find_isomorphism(iso_side(n1), iso_side(n2), options.max_v);
  if (!m) return std::nullopt;
  return to_witness(n1, n2, m->v_map, m->u_map);
}

std::optional<NetIsoWitness> complete_net_witness(
    const PetriNet& n1, const PetriNet& n2,
    const std::map<std::string, std::string>& conditions) {
  if (!detail::is_bijection(conditions, n1.conditions(), n2.conditions()))
    return std::nullopt;
  std::vector<std::size_t> cond_map;
  for (const auto& b : n1.conditions())
    cond_map.push_back(*n2.condition_index(conditions.at(b)));
  auto events = detail::match_u(iso_side(n1), iso_side(n2), cond_map);
  if (!events) return std::nullopt;
  return to_witness(n1, n2, cond_map, *events);
}

bool verify_net_isomorphism(const PetriNet& n1, const PetriNet& n2,
                            const NetIsoWitness& w) {
  std::vector<std::string> ev1, ev2;
  for (const auto& e : n1.events()) ev1.push_back(e.id);
  for (const auto& e : n2.events()) ev2.push_back(e.id);
  if (!detail::is_bijection(w.conditions, n1.conditions(), n2.conditions()) ||
      !detail::is_bijection(w.events, ev1, ev2))
    return false;
  std::map<std::string, std::size_t> pos2;
  for (std::size_t i = 0; i < ev2.size(); ++i) pos2[ev2[i]] = i;
  auto mapped = [&](const std::vector<std::size_t>& conds) {
    std::set<std::string> out;
    for (std::size_t c : conds) out.insert(w.conditions.at(n1.conditions()[c]));
    return out;
  };
  auto names = [&](const std::vector<std::size_t>& conds) {
    std::set<std::string> out;
    for (std::size_t c : conds) out.insert(n2.conditions()[c]);
    return out;
  };
  for (std::size_t e = 0; e < ev1.size(); ++e) {
    const std::size_t f = pos2.at(w.events.at(ev1[e]));
    if (mapped(n1.pre(e)) != names(n2.pre(f)) ||
        mapped(n1.post(e)) != names(n2.post(f)))
      return false;
  }
  return true;
}

DecomposeResult decompose(const LabeledPetriNet& n,
                          const SearchBudget& budget) {
  DecomposeResult out;
  out.polynomial = encode_net(n.net, n.labels);
  const auto split = bit_disjoint_factor(out.polynomial, budget);
  out.status = split.status;

  std::set<std::size_t> touched;
  for (std::size_t e = 0; e < n.net.events().size(); ++e) {
    touched.insert(n.net.pre(e).begin(), n.net.pre(e).end());
    touched.insert(n.net.post(e).begin(), n.net.post(e).end());
  }
  std::map<std::uint64_t, std::string> by_label;
  for (const auto& [b, l] : n.labels) by_label[l] = b;

  for (const auto& [p1, p2] : split.pairs) {
    if (p1.constant_term() == 0 || p2.constant_term() == 0) continue;
    // The factor holding the smallest condition label goes first.
    const auto t1 = tau_poly(p1), t2 = tau_poly(p2);
    const bool swap = t1.empty() || (!t2.empty() && t2.front() < t1.front());
    const Poly2& a = swap ? p2 : p1;
    const Poly2& b = swap ? p1 : p2;
    NetDecomposition d{decode_net(a), decode_net(b), a, b, {}};
    if (touched.size() < n.net.conditions().size()) {
      std::vector<std::string> conds = d.left.net.conditions();
      for (std::size_t c = 0; c < n.net.conditions().size(); ++c) {
        if (touched.count(c)) continue;
        const std::uint64_t l = n.labels.at(n.net.conditions()[c]);
        conds.push_back(std::to_string(l));
        d.left.labels[conds.back()] = l;
      }
      d.left.net = PetriNet(std::move(conds), d.left.net.events());
    }
    const PetriNet product = net_product(d.left.net, d.right.net);
    std::map<std::string, std::string> cond_map;
    for (const auto& [b, l] : d.left.labels) cond_map[side_id(1, b)] = by_label.at(l);
    for (const auto& [b, l] : d.right.labels) cond_map[side_id(2, b)] = by_label.at(l);
    auto cert = complete_net_witness(product, n.net, cond_map);
    if (!cert || !verify_net_isomorphism(product, n.net, *cert))
      throw std::logic_error("decompose produced a factor pair whose product "
                             "is not isomorphic to the net");
    d.certificate = std::move(*cert);
    out.pairs.push_back(std::move(d));
  }
  return out;
}

LabelSweepResult decompose_any_labeling(const PetriNet& n,
                                        const SearchBudget& budget,
                                        std::size_t max_conditions) {
  const std::size_t k = n.conditions().size();
  if (k > max_conditions)
    throw SizeGuardExceeded("labeling sweep refused: " + std::to_string(k) +
                            " conditions exceed the guard of " +
                            std::to_string(max_conditions));
  LabelSweepResult out;
  std::vector<std::uint64_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    LabeledPetriNet ln{n, {}};
    for (std::size_t i = 0; i < k; ++i) ln.labels[n.conditions()[i]] = perm[i];
    auto r = decompose(ln, budget);
    if (r.status == SearchStatus::budget_exceeded)
      out.status = SearchStatus::budget_exceeded;
    if (!r.pairs.empty()) {
      out.status = SearchStatus::complete;
      out.labeling = ln.labels;
      out.result = std::move(r);
      return out;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace graphpoly

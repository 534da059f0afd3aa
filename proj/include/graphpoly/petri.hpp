#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphpoly/bigraph.hpp"
#include "graphpoly/factorize.hpp"
#include "graphpoly/polynomial.hpp"

namespace graphpoly {

struct Event {
  std::string id;
  std::vector<std::string> pre;
  std::vector<std::string> post;
};

// Conditions B, events E with pre/post condition sets. Empty pre or post
// sets are allowed. The idle event * is implicit and never stored.
class PetriNet {
 public:
  PetriNet() = default;
  // Throws InvalidGraph on duplicate or shared ids, unknown conditions, or a
  // condition listed twice in one pre/post set.
  PetriNet(std::vector<std::string> conditions, std::vector<Event> events);

  const std::vector<std::string>& conditions() const { return conditions_; }
  const std::vector<Event>& events() const { return events_; }
  // Condition indices of pre(e) / post(e), ascending.
  const std::vector<std::size_t>& pre(std::size_t event) const {
    return pre_[event];
  }
  const std::vector<std::size_t>& post(std::size_t event) const {
    return post_[event];
  }
  std::optional<std::size_t> condition_index(const std::string& id) const;

 private:
  std::vector<std::string> conditions_;
  std::vector<Event> events_;
  std::vector<std::vector<std::size_t>> pre_, post_;
  std::map<std::string, std::size_t> cond_pos_;
};

struct LabeledPetriNet {
  PetriNet net;
  Labeling labels;  // conditions -> naturals, injective
};

// x^d_-(e) y^d_+(e) summed over events, plus 1 for the idle event.
Poly2 encode_net(const PetriNet& n, const Labeling& phi);
inline Poly2 encode_net(const LabeledPetriNet& n) {
  return encode_net(n.net, n.labels);
}

// Inverse construction: conditions are the bit positions of p, one unit of
// the constant term is taken by the idle event, every other unit of every
// term becomes an event. Throws InputError if p has no constant term.
LabeledPetriNet decode_net(const Poly2& p);

// Pointed product: events are pairs over (E1 + {*}) x (E2 + {*}) without
// (*,*), conditions the tagged disjoint union, pre/post joined side-wise.
PetriNet net_product(const PetriNet& n1, const PetriNet& n2);
// Same, carrying phi1 + phi2; the label images must be disjoint.
LabeledPetriNet net_product(const LabeledPetriNet& n1,
                            const LabeledPetriNet& n2);

std::string product_event_id(const std::string* e1, const std::string* e2);

struct NetIsoWitness {
  std::map<std::string, std::string> conditions;
  std::map<std::string, std::string> events;
};

std::optional<NetIsoWitness> net_isomorphic(const PetriNet& n1,
                                            const PetriNet& n2,
                                            const IsoOptions& options = {});

// Extends a given condition bijection to a full isomorphism, if possible.
std::optional<NetIsoWitness> complete_net_witness(
    const PetriNet& n1, const PetriNet& n2,
    const std::map<std::string, std::string>& conditions);

bool verify_net_isomorphism(const PetriNet& n1, const PetriNet& n2,
                            const NetIsoWitness& w);

struct NetDecomposition {
  LabeledPetriNet left;
  LabeledPetriNet right;
  Poly2 left_poly;
  Poly2 right_poly;
  // net_product(left.net, right.net) -> the decomposed net.
  NetIsoWitness certificate;
};

struct DecomposeResult {
  SearchStatus status = SearchStatus::complete;
  Poly2 polynomial;
  std::vector<NetDecomposition> pairs;
};

// Splits the net along bit-disjoint factorizations of its polynomial. Each
// returned pair is checked: the product of the two factor nets is
// isomorphic to n. Conditions touched by no event do not show up in the
// polynomial; they are attached to the left factor with their labels.
DecomposeResult decompose(const LabeledPetriNet& n,
                          const SearchBudget& budget = {});

struct LabelSweepResult {
  SearchStatus status = SearchStatus::complete;
  std::optional<Labeling> labeling;  // first compact labeling that split n
  DecomposeResult result;
};

// Tries decompose under every bijection B -> {0..|B|-1} until one succeeds.
// A negative answer only covers those labelings. Throws SizeGuardExceeded
// for |B| > max_conditions.
LabelSweepResult decompose_any_labeling(const PetriNet& n,
                                        const SearchBudget& budget = {},
                                        std::size_t max_conditions = 8);

}  // namespace graphpoly

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "autocore/matrix.hpp"

namespace autocore {

// A reaction keeps reactant (s-) and product (s+) coefficients separately;
// the net stoichiometric matrix alone cannot represent explicit catalysis.
// Maps hold only strictly positive coefficients.
struct Reaction {
  std::string name;
  std::map<int, Rat> reactants;  // entity index -> s- > 0
  std::map<int, Rat> products;   // entity index -> s+ > 0

  Rat s_minus(int entity) const;
  Rat s_plus(int entity) const;
  bool operator==(const Reaction& o) const = default;
};

struct ReactionNetwork {
  std::vector<std::string> entities;  // index = ordinal, first-appearance order
  std::vector<Reaction> reactions;

  int n_entities() const { return int(entities.size()); }
  int n_reactions() const { return int(reactions.size()); }
  const std::string& entity_name(int i) const { return entities[i]; }
  int entity_index(const std::string& name) const;  // -1 if absent
  int reaction_index(const std::string& name) const;

  void validate() const;  // throws on dangling indices or non-positive coefficients
};

// Subnetwork (X', R') as sorted index lists into the parent network.
struct SubNetwork {
  std::vector<int> entities;
  std::vector<int> reactions;

  bool operator==(const SubNetwork& o) const = default;
  bool operator<(const SubNetwork& o) const;
  bool contains(const SubNetwork& o) const;  // componentwise superset
};

SubNetwork make_sub(std::vector<int> entities, std::vector<int> reactions);
SubNetwork full_sub(const ReactionNetwork& rn);
void check_sub(const ReactionNetwork& rn, const SubNetwork& sub);

// Child-selection: a bijection kappa between the entities and reactions of a
// sub-RN with kappa(x) consuming x.
struct ChildSelection {
  SubNetwork sub;
  std::map<int, int> kappa;  // entity index -> reaction index

  bool operator==(const ChildSelection& o) const = default;
  bool operator<(const ChildSelection& o) const;
  // True when tilde is a restriction of *this to a subset of entities.
  bool restricts_to(const ChildSelection& tilde) const;
};

bool is_child_selection(const ReactionNetwork& rn, const ChildSelection& cs);
void check_child_selection(const ReactionNetwork& rn, const ChildSelection& cs);

RatMatrix net_stoich(const ReactionNetwork& rn);
RatMatrix submatrix(const RatMatrix& m, const SubNetwork& sub);

// Every reaction of the sub has a reactant and a product inside X'.
bool is_well_formed(const ReactionNetwork& rn, const SubNetwork& sub);

std::set<int> catalysts_of(const Reaction& r);

// Entities outside X' consumed (food) / produced (waste) by reactions of R'.
std::pair<std::set<int>, std::set<int>> food_waste(const ReactionNetwork& rn, const SubNetwork& sub);

Reaction reverse_reaction(const Reaction& r);

// Network whose reaction list is R' followed by the reversed R', over the
// parent's entity list (food/waste coefficients stay representable). The
// returned SubNetwork is (X', all 2|R'| reactions).
std::pair<ReactionNetwork, SubNetwork> reversible_extension(const ReactionNetwork& rn, const SubNetwork& sub);

// Standalone network for the sub-RN: entities renumbered, coefficients of
// outside entities dropped. Mapping back: result.entities[i] names the parent
// entity; reaction i corresponds to sub.reactions[i].
ReactionNetwork restrict_network(const ReactionNetwork& rn, const SubNetwork& sub);

// All entities appearing in the given reactions (X(R') of the MAS notion).
std::vector<int> participating_entities(const ReactionNetwork& rn, const std::vector<int>& reactions);

// True when all coefficients of the sub-RN lie in {0,1}.
bool has_unit_stoichiometry(const ReactionNetwork& rn, const SubNetwork& sub);

std::vector<std::string> entity_names(const ReactionNetwork& rn, const std::vector<int>& ids);
std::vector<std::string> reaction_names(const ReactionNetwork& rn, const std::vector<int>& ids);

}  // namespace autocore
